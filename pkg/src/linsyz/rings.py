"""Graded polynomial ring calculus.

Ideals are handled degreewise: the degree-d piece of an ideal is a
Subspace of R_d in its monomial coordinates, and every ideal-theoretic
question in scope reduces to linear algebra on such pieces.  Monomials
are exponent tuples, ordered graded-reverse-lexicographically.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .linalg import Field, Mat, Subspace, left_kernel, rank

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring with a fixed ordered list of variables."""

    variables: tuple
    field: Field

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self):
        return len(self.variables)

    def var_index(self, name):
        return self.variables.index(name)

    def variable(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one}, 1)

    def monomial_count(self, d):
        return math.comb(self.nvars - 1 + d, d)

    def __repr__(self):
        return "%r[%s]" % (self.field, ",".join(self.variables))


_basis_cache = {}


def monomial_basis(ring: Ring, d: int):
    """All exponent tuples of degree d, grevlex-descending."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    key = (ring.variables, d)
    cached = _basis_cache.get(key)
    if cached is not None:
        return cached[0]
    n = ring.nvars
    monos = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    monos.sort(key=lambda e: tuple(reversed(e)))
    index = {m: i for i, m in enumerate(monos)}
    _basis_cache[key] = (monos, index)
    return monos


def monomial_index(ring: Ring, d: int):
    monomial_basis(ring, d)
    return _basis_cache[(ring.variables, d)][1]


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_degree(e):
    return sum(e)


class Poly:
    """Homogeneous polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms", "degree")

    def __init__(self, ring, terms, degree=None):
        clean = {m: c for m, c in terms.items() if c}
        if degree is None:
            if not clean:
                raise ValueError("zero polynomial needs an explicit degree")
            degree = mono_degree(next(iter(clean)))
        for m in clean:
            if mono_degree(m) != degree:
                raise ValueError("inhomogeneous polynomial")
        self.ring = ring
        self.terms = clean
        self.degree = degree

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        assert self.ring == other.ring and self.degree == other.degree
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, self.ring.field.zero) + c
            s = self.ring.field(s)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms, self.degree)

    def __sub__(self, other):
        return self + other.scale(self.ring.field.neg(self.ring.field.one))

    def scale(self, c):
        F = self.ring.field
        c = F(c)
        return Poly(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()},
                    self.degree)

    def __mul__(self, other):
        F = self.ring.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F(terms.get(m, F.zero) + F.mul(c1, c2))
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Poly(self.ring, terms, self.degree + other.degree)

    def to_vec(self):
        """Coordinates over monomial_basis(ring, degree)."""
        idx = monomial_index(self.ring, self.degree)
        return {idx[m]: c for m, c in self.terms.items()}

    @classmethod
    def from_vec(cls, ring, d, vec):
        basis = monomial_basis(ring, d)
        return cls(ring, {basis[i]: c for i, c in vec.items()}, d)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return object.__hash__(self)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return "Poly(%s)" % poly_str(self)


def _mono_str(ring, e):
    parts = []
    for name, k in zip(ring.variables, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append("%s^%d" % (name, k))
    return "*".join(parts) if parts else "1"


def poly_str(p: Poly) -> str:
    """Canonical text form: grevlex-descending terms, symmetric coefficients."""
    if p.is_zero:
        return "0"
    ring = p.ring
    order = monomial_index(ring, p.degree)
    items = sorted(p.terms.items(), key=lambda mv: order[mv[0]])
    out = []
    for m, c in items:
        c = ring.field.lift(c)
        ms = _mono_str(ring, m)
        neg = c < 0
        c = abs(c)
        if ms == "1":
            body = str(c)
        elif c == 1:
            body = ms
        else:
            body = "%s*%s" % (c, ms)
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


class PolySyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class InhomogeneousError(ValueError):
    def __init__(self, monomials):
        super().__init__("inhomogeneous polynomial; offending monomials: %s"
                         % ", ".join(monomials))
        self.monomials = monomials


def parse_poly(ring: Ring, text: str) -> Poly:
    """Parse '3*x0^2 - x1*x2' style input; whitespace is insignificant."""
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        m = _IDENT.match(text, i)
        if m:
            tokens.append(("ident", m.group(0), i))
            i = m.end()
            continue
        raise PolySyntaxError("unexpected character %r" % ch, i)
    if not tokens:
        raise PolySyntaxError("empty polynomial", 0)

    F = ring.field
    pos = 0

    def parse_term():
        nonlocal pos
        coeff = F.one
        exps = [0] * ring.nvars
        seen_factor = False
        while True:
            if pos >= len(tokens):
                break
            kind, val, at = tokens[pos]
            if kind == "int":
                coeff = F.mul(coeff, F(int(val)))
                pos += 1
            elif kind == "ident":
                if val not in ring.variables:
                    raise PolySyntaxError("unknown variable %r" % val, at)
                vi = ring.var_index(val)
                e = 1
                pos += 1
                if pos < len(tokens) and tokens[pos][0] == "^":
                    pos += 1
                    if pos >= len(tokens) or tokens[pos][0] != "int":
                        raise PolySyntaxError("exponent expected", at)
                    e = int(tokens[pos][1])
                    pos += 1
                exps[vi] += e
            else:
                raise PolySyntaxError("factor expected", at)
            seen_factor = True
            if pos < len(tokens) and tokens[pos][0] == "*":
                pos += 1
                continue
            break
        if not seen_factor:
            raise PolySyntaxError("term expected",
                                  tokens[pos][2] if pos < len(tokens) else len(text))
        return tuple(exps), coeff

    terms = {}
    sign = F.one
    first = True
    while pos < len(tokens):
        kind, val, at = tokens[pos]
        if kind in "+-":
            sign = F.one if kind == "+" else F.neg(F.one)
            pos += 1
        elif first:
            sign = F.one
        else:
            raise PolySyntaxError("operator expected", at)
        m, c = parse_term()
        c = F.mul(sign, c)
        s = F(terms.get(m, F.zero) + c)
        if s:
            terms[m] = s
        else:
            terms.pop(m, None)
        first = False
    if not terms:
        return Poly(ring, {}, 0)
    degrees = {mono_degree(m) for m in terms}
    if len(degrees) > 1:
        dmin = min(degrees)
        bad = [_mono_str(ring, m) for m in terms if mono_degree(m) != dmin]
        raise InhomogeneousError(sorted(bad))
    return Poly(ring, terms)


class GradedIdeal:
    """Homogeneous ideal given by finitely many homogeneous generators."""

    def __init__(self, ring: Ring, generators):
        gens = tuple(generators)
        for g in gens:
            if g.is_zero:
                raise ValueError("zero generator")
            if g.ring != ring:
                raise ValueError("generator in wrong ring")
        self.ring = ring
        self.generators = gens
        self._pieces = {}
        self._dims = {}

    def min_degree(self):
        return min((g.degree for g in self.generators), default=0)

    def piece_rows(self, d):
        """Spanning row vectors of the degree-d piece (monomial coordinates)."""
        ring = self.ring
        idx = monomial_index(ring, d)
        rows = []
        for g in self.generators:
            e = g.degree
            if e > d:
                continue
            for m in monomial_basis(ring, d - e):
                row = {}
                F = ring.field
                for gm, c in g.terms.items():
                    key = idx[mono_mul(m, gm)]
                    s = F(row.get(key, F.zero) + c)
                    if s:
                        row[key] = s
                    else:
                        row.pop(key, None)
                rows.append(row)
        return rows

    def piece(self, d) -> Subspace:
        """The degree-d piece of the ideal as a Subspace of R_d."""
        if d not in self._pieces:
            rows = self.piece_rows(d)
            amb = self.ring.monomial_count(d)
            sub = Subspace.from_rows(rows, amb, self.ring.field)
            self._pieces[d] = sub
            self._dims[d] = sub.dim
        return self._pieces[d]

    def piece_dim(self, d) -> int:
        """dim I_d via forward elimination only (cheaper than piece())."""
        if d not in self._dims:
            if d in self._pieces:
                self._dims[d] = self._pieces[d].dim
            else:
                rows = self.piece_rows(d)
                amb = self.ring.monomial_count(d)
                self._dims[d] = rank(Mat(len(rows), amb, rows, self.ring.field))
        return self._dims[d]

    def __repr__(self):
        return "GradedIdeal(%d generators over %r)" % (len(self.generators), self.ring)


def ideal_piece(i: GradedIdeal, d: int) -> Subspace:
    return i.piece(d)


def ideal_intersect_piece(i: GradedIdeal, j: GradedIdeal, d: int) -> Subspace:
    if i.ring != j.ring:
        raise ValueError("ring mismatch")
    from .linalg import intersect
    return intersect(i.piece(d), j.piece(d))


def colon_piece(i: GradedIdeal, l: Poly, d: int) -> Subspace:
    """{f in R_d : l*f in I_{d+1}} for a linear form l."""
    if l.is_zero:
        raise ValueError("colon by zero")
    assert l.degree == 1
    ring = i.ring
    target = i.piece(d + 1)
    idx = monomial_index(ring, d + 1)
    rows = []
    for m in monomial_basis(ring, d):
        vec = {idx[mono_mul(m, lm)]: c for lm, c in l.terms.items()}
        rows.append(target.reduce(vec))
    amb = ring.monomial_count(d + 1)
    combos = left_kernel(Mat(len(rows), amb, rows, ring.field))
    return Subspace(ring.monomial_count(d), combos, ring.field)


@dataclass
class SaturationDegree:
    degree: int
    ideal_dim: int
    colon_dim: int

    @property
    def equal(self):
        return self.ideal_dim == self.colon_dim


@dataclass
class SaturationReport:
    """Degreewise comparison of I with its colon by the maximal ideal."""

    up_to: int
    degrees: list

    @property
    def saturated(self):
        return all(e.equal for e in self.degrees)

    def to_dict(self):
        return {
            "check": "saturation",
            "up_to_degree": self.up_to,
            "saturated_up_to_bound": self.saturated,
            "degrees": [{"d": e.degree, "ideal_dim": e.ideal_dim,
                         "colon_dim": e.colon_dim, "equal": e.equal}
                        for e in self.degrees],
        }


def saturation_check(i: GradedIdeal, up_to: int = 5) -> SaturationReport:
    """Check (I : maximal ideal)_d = I_d for all d <= up_to.

    The colon by the maximal ideal is the intersection over all
    single-variable colons; since it always contains I_d, equality is a
    dimension count.
    """
    ring = i.ring
    entries = []
    for d in range(up_to + 1):
        target = i.piece(d + 1)
        block = ring.monomial_count(d + 1)
        idx = monomial_index(ring, d + 1)
        rows = []
        for m in monomial_basis(ring, d):
            row = {}
            for v in range(ring.nvars):
                shifted = list(m)
                shifted[v] += 1
                res = target.reduce({idx[tuple(shifted)]: ring.field.one})
                for c, val in res.items():
                    row[v * block + c] = val
            rows.append(row)
        r = rank(Mat(len(rows), ring.nvars * block, rows, ring.field))
        colon_dim = ring.monomial_count(d) - r
        entries.append(SaturationDegree(d, i.piece_dim(d), colon_dim))
    return SaturationReport(up_to, entries)


def hilbert_function(i: GradedIdeal, d: int) -> int:
    return i.ring.monomial_count(d) - i.piece_dim(d)


@dataclass
class DimDegreeEstimate:
    """Finite-difference estimate of projective dimension and degree."""

    ok: bool
    dimension: int | None
    degree: int | None
    steps: int | None
    window: tuple

    def to_dict(self):
        return {"ok": self.ok, "dimension": self.dimension,
                "degree": self.degree, "window": list(self.window)}


def dim_degree_estimate(values) -> DimDegreeEstimate:
    """Difference a Hilbert-value window until constant.

    The number of differencing steps is the projective dimension and the
    constant reached is the degree.  Reports failure when the window is
    exhausted before stabilizing.
    """
    vals = list(values)
    if len(vals) < 3:
        raise ValueError("need at least 3 consecutive Hilbert values")
    window = tuple(vals)
    steps = 0
    cur = vals
    while len(cur) >= 2:
        if all(v == cur[0] for v in cur):
            if cur[0] == 0:
                return DimDegreeEstimate(True, -1, 0, steps, window)
            return DimDegreeEstimate(True, steps, cur[0], steps, window)
        cur = [b - a for a, b in zip(cur, cur[1:])]
        steps += 1
    return DimDegreeEstimate(False, None, None, None, window)


# ---------------------------------------------------------------------------
# ideal files
# ---------------------------------------------------------------------------

def parse_ideal_file(text: str, field: Field) -> GradedIdeal:
    """Ideal file: 'vars: x0 x1 ...' then one generator per line; '#' comments."""
    lines = text.splitlines()
    ring = None
    gens = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            if not line.startswith("vars:"):
                raise ValueError("line %d: expected 'vars: ...' header" % lineno)
            names = tuple(line[len("vars:"):].split())
            if not names:
                raise ValueError("line %d: no variables declared" % lineno)
            ring = Ring(names, field)
            continue
        try:
            gens.append(parse_poly(ring, line))
        except ValueError as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from exc
    if ring is None:
        raise ValueError("missing 'vars:' header")
    return GradedIdeal(ring, gens)


def ideal_file_str(i: GradedIdeal) -> str:
    lines = ["vars: " + " ".join(i.ring.variables)]
    lines.extend(poly_str(g) for g in i.generators)
    return "\n".join(lines) + "\n"
