"""Exact sparse linear algebra over a prime field or the rationals.

Vectors are dicts {column: scalar}, matrices are lists of such rows.
Every elimination uses a fixed pivot rule (leftmost column, then smallest
row index), so all outputs are reproducible bit-for-bit.  The prime-field
inner loops are specialized for speed; the rational path is generic and
meant for small spot-checks.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """A prime field F_p or the rationals, with exact scalar arithmetic."""

    __slots__ = ("kind", "p")

    def __init__(self, kind="prime", p=DEFAULT_PRIME):
        if kind not in ("prime", "rationals"):
            raise ValueError("field kind must be 'prime' or 'rationals'")
        if kind == "prime" and not _is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        self.kind = kind
        self.p = p if kind == "prime" else None

    def __call__(self, x):
        """Coerce an integer or Fraction into the field."""
        if self.kind == "prime":
            return int(x) % self.p
        return Fraction(x)

    @property
    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def inv(self, a):
        if self.kind == "prime":
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def neg(self, a):
        if self.kind == "prime":
            return (-a) % self.p
        return -a

    def mul(self, a, b):
        if self.kind == "prime":
            return (a * b) % self.p
        return a * b

    def sub(self, a, b):
        if self.kind == "prime":
            return (a - b) % self.p
        return a - b

    def lift(self, a):
        """Symmetric integer lift for printing (prime field) or identity."""
        if self.kind == "prime":
            return a - self.p if a > self.p // 2 else a
        return a

    def __eq__(self, other):
        return isinstance(other, Field) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == "rationals" else "GF(%d)" % self.p


QQ = Field("rationals")


def GF(p=DEFAULT_PRIME):
    return Field("prime", p)


class Mat:
    """Sparse matrix: list of row dicts {col: nonzero scalar}."""

    __slots__ = ("nrows", "ncols", "rows", "field")

    def __init__(self, nrows, ncols, rows, field):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows
        self.field = field

    @classmethod
    def zero(cls, nrows, ncols, field):
        return cls(nrows, ncols, [{} for _ in range(nrows)], field)

    @classmethod
    def identity(cls, n, field):
        one = field.one
        return cls(n, n, [{i: one} for i in range(n)], field)

    @classmethod
    def from_dense(cls, entries, field, ncols=None):
        rows = []
        width = ncols
        for r in entries:
            row = {}
            for j, v in enumerate(r):
                fv = field(v)
                if fv:
                    row[j] = fv
            rows.append(row)
            if width is None or len(r) > width:
                width = len(r)
        return cls(len(entries), width or 0, rows, field)

    def to_dense(self):
        z = self.field.zero
        return [[self.rows[i].get(j, z) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def copy(self):
        return Mat(self.nrows, self.ncols, [dict(r) for r in self.rows], self.field)

    def transpose(self):
        rows = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return Mat(self.ncols, self.nrows, rows, self.field)

    def row_apply(self, vec):
        """Image of a row coefficient vector: vec . M (vec indexes rows)."""
        F = self.field
        out = {}
        if F.kind == "prime":
            p = F.p
            for i, c in vec.items():
                for j, v in self.rows[i].items():
                    w = (out.get(j, 0) + c * v) % p
                    if w:
                        out[j] = w
                    else:
                        out.pop(j, None)
        else:
            for i, c in vec.items():
                for j, v in self.rows[i].items():
                    w = out.get(j, Fraction(0)) + c * v
                    if w:
                        out[j] = w
                    else:
                        out.pop(j, None)
        return out

    def stack(self, other):
        assert self.ncols == other.ncols and self.field == other.field
        return Mat(self.nrows + other.nrows, self.ncols,
                   [dict(r) for r in self.rows] + [dict(r) for r in other.rows],
                   self.field)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return object.__hash__(self)

    def __repr__(self):
        return "Mat(%dx%d over %r, %d nonzeros)" % (
            self.nrows, self.ncols, self.field, sum(len(r) for r in self.rows))


# ---------------------------------------------------------------------------
# elimination cores
# ---------------------------------------------------------------------------

def _submul_prime(row, c, other, p):
    """row -= c * other (mod p), in place."""
    get = row.get
    for j, v in other.items():
        w = (get(j, 0) - c * v) % p
        if w:
            row[j] = w
        else:
            row.pop(j, None)


def _submul_generic(row, c, other):
    for j, v in other.items():
        w = row.get(j, 0) - c * v
        if w:
            row[j] = w
        else:
            row.pop(j, None)


def _rref_core(in_rows, field):
    """Fully inter-reduced echelon rows.  Returns {pivot_col: row}.

    Input rows are consumed (mutated).  The result is canonical for the
    row space: pivot entries are 1 and every pivot column occurs in
    exactly one row.
    """
    prime = field.kind == "prime"
    p = field.p
    pivots = {}
    # occurs[c] = set of pivot cols whose rows contain column c (lazy superset)
    occurs = {}
    for row in in_rows:
        if not row:
            continue
        # one elimination pass: subtracting RREF rows only introduces
        # non-pivot columns, so no cascade is needed
        hits = [c for c in row if c in pivots]
        while hits:
            for c in hits:
                cv = row.get(c)
                if cv:
                    if prime:
                        _submul_prime(row, cv, pivots[c], p)
                    else:
                        _submul_generic(row, cv, pivots[c])
            hits = [c for c in row if c in pivots]
        if not row:
            continue
        lead = min(row)
        lv = row[lead]
        if lv != field.one:
            ilv = field.inv(lv)
            if prime:
                for j in row:
                    row[j] = (row[j] * ilv) % p
            else:
                for j in row:
                    row[j] = row[j] * ilv
        # clear the new pivot column from existing rows
        touchers = occurs.get(lead)
        if touchers:
            for pc in list(touchers):
                prow = pivots.get(pc)
                if prow is None:
                    continue
                cv = prow.get(lead)
                if not cv:
                    continue
                if prime:
                    _submul_prime(prow, cv, row, p)
                else:
                    _submul_generic(prow, cv, row)
                for j in row:
                    if j != lead:
                        occurs.setdefault(j, set()).add(pc)
            del occurs[lead]
        pivots[lead] = row
        for j in row:
            if j != lead:
                occurs.setdefault(j, set()).add(lead)
    return pivots


def _forward_core(in_rows, field, aug=None):
    """Forward elimination by leading term only (no back-substitution).

    Returns {pivot_col: row}.  If ``aug`` is a list parallel to in_rows,
    each aug entry is carried along and ``kernel`` collects the aug parts
    of rows that reduced to zero (left-kernel combinations).
    """
    prime = field.kind == "prime"
    p = field.p
    pivots = {}
    pivaug = {}
    kernel = []
    track = aug is not None
    for idx, row in enumerate(in_rows):
        arow = aug[idx] if track else None
        if row:
            heap = list(row)
            heapq.heapify(heap)
            while heap:
                c = heap[0]
                cv = row.get(c)
                if not cv:
                    heapq.heappop(heap)
                    continue
                prow = pivots.get(c)
                if prow is None:
                    ilv = field.inv(cv)
                    if prime:
                        for j in row:
                            row[j] = (row[j] * ilv) % p
                    else:
                        for j in row:
                            row[j] = row[j] * ilv
                    pivots[c] = row
                    if track:
                        if prime:
                            for j in arow:
                                arow[j] = (arow[j] * ilv) % p
                        else:
                            for j in arow:
                                arow[j] = arow[j] * ilv
                        pivaug[c] = arow
                    row = None
                    break
                if prime:
                    _submul_prime(row, cv, prow, p)
                    if track:
                        _submul_prime(arow, cv, pivaug[c], p)
                else:
                    _submul_generic(row, cv, prow)
                    if track:
                        _submul_generic(arow, cv, pivaug[c])
                for j in prow:
                    if j > c and j in row:
                        heapq.heappush(heap, j)
        if row is not None and not row and track and arow:
            kernel.append(arow)
    if track:
        return pivots, kernel
    return pivots


def _pivots_to_mat(pivots, ncols, field):
    rows = [pivots[c] for c in sorted(pivots)]
    return Mat(len(rows), ncols, rows, field)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def rref(m: Mat) -> Mat:
    """Canonical reduced row-echelon form (zero rows dropped)."""
    pivots = _rref_core([dict(r) for r in m.rows], m.field)
    return _pivots_to_mat(pivots, m.ncols, m.field)


def rank(m: Mat) -> int:
    return len(_forward_core([dict(r) for r in m.rows], m.field))


def left_kernel(m: Mat) -> Mat:
    """Canonical basis of {x : x . M = 0} as rows of length m.nrows."""
    aug = [{i: m.field.one} for i in range(m.nrows)]
    _, combos = _forward_core([dict(r) for r in m.rows], m.field, aug=aug)
    pivots = _rref_core(combos, m.field)
    return _pivots_to_mat(pivots, m.nrows, m.field)


def kernel(m: Mat) -> "Subspace":
    """Null space {x : M x = 0} as a Subspace of the column space."""
    km = left_kernel(m.transpose())
    return Subspace(m.ncols, km, m.field)


class SolveResult:
    """Outcome of a multi-target linear solve."""

    __slots__ = ("solutions", "inconsistent", "unique")

    def __init__(self, solutions, inconsistent, unique):
        self.solutions = solutions          # Mat, one column per target
        self.inconsistent = inconsistent    # sorted list of bad target columns
        self.unique = unique                # True iff no free variables

    @property
    def ok(self):
        return not self.inconsistent


def solve(m: Mat, targets: Mat) -> SolveResult:
    """Solve M x = t for every target column t, free variables set to zero."""
    assert m.nrows == targets.nrows, "incompatible shapes"
    field = m.field
    n = m.ncols
    k = targets.ncols
    merged = []
    for i in range(m.nrows):
        row = dict(m.rows[i])
        for j, v in targets.rows[i].items():
            row[n + j] = v
        merged.append(row)
    pivots = _rref_core(merged, field)
    sol_cols = [{} for _ in range(k)]
    bad = set()
    nmain_pivots = 0
    for c, row in pivots.items():
        if c >= n:
            bad.add(c - n)
        else:
            nmain_pivots += 1
            for j, v in row.items():
                if j >= n:
                    sol_cols[j - n][c] = v
    # a target column hit by a pivot in the augmented block is inconsistent
    for c, row in pivots.items():
        if c >= n:
            for j, v in row.items():
                if j >= n:
                    bad.add(j - n)
    sol_rows = [{} for _ in range(n)]
    for j, col in enumerate(sol_cols):
        if j in bad:
            continue
        for i, v in col.items():
            sol_rows[i][j] = v
    solutions = Mat(n, k, sol_rows, field)
    return SolveResult(solutions, sorted(bad), nmain_pivots == n)


class Subspace:
    """A subspace of F^ambient with canonical RREF basis rows."""

    __slots__ = ("ambient", "basis", "field", "_pivmap")

    def __init__(self, ambient, basis, field):
        assert basis.ncols == ambient
        self.ambient = ambient
        self.basis = basis
        self.field = field
        self._pivmap = None

    def _pivot_map(self):
        """pivot column -> basis row index, cached."""
        if self._pivmap is None:
            self._pivmap = {min(r): i for i, r in enumerate(self.basis.rows)}
        return self._pivmap

    @classmethod
    def from_rows(cls, rows, ambient, field):
        m = Mat(len(rows), ambient, [dict(r) for r in rows], field)
        return cls(ambient, rref(m), field)

    @classmethod
    def zero(cls, ambient, field):
        return cls(ambient, Mat(0, ambient, [], field), field)

    @classmethod
    def full(cls, ambient, field):
        return cls(ambient, Mat.identity(ambient, field), field)

    @property
    def dim(self):
        return self.basis.nrows

    def pivot_cols(self):
        return [min(r) for r in self.basis.rows]

    def reduce(self, vec):
        """Residue of vec modulo this subspace (RREF reduction).

        One pass suffices: RREF row tails contain no pivot columns, so
        clearing a pivot never reintroduces another.
        """
        field = self.field
        pm = self._pivot_map()
        res = dict(vec)
        prime = field.kind == "prime"
        rows = self.basis.rows
        for c in [c for c in vec if c in pm]:
            cv = res.get(c)
            if cv:
                if prime:
                    _submul_prime(res, cv, rows[pm[c]], field.p)
                else:
                    _submul_generic(res, cv, rows[pm[c]])
        return res

    def contains(self, vec):
        return not self.reduce(vec)

    def coords(self, vec):
        """Coefficients of vec over the basis rows; None if not a member."""
        field = self.field
        pm = self._pivot_map()
        res = dict(vec)
        out = {}
        prime = field.kind == "prime"
        rows = self.basis.rows
        for c in sorted(c for c in vec if c in pm):
            cv = res.get(c)
            if cv:
                i = pm[c]
                out[i] = cv
                if prime:
                    _submul_prime(res, cv, rows[i], field.p)
                else:
                    _submul_generic(res, cv, rows[i])
        if res:
            return None
        return out

    def is_coordinate(self):
        """True if every basis row is a unit vector (coordinate subspace)."""
        return all(len(r) == 1 for r in self.basis.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.field == other.field and self.basis == other.basis)

    def __hash__(self):
        return object.__hash__(self)

    def __le__(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        return all(other.contains(r) for r in self.basis.rows)

    def __repr__(self):
        return "Subspace(dim %d of %d over %r)" % (self.dim, self.ambient, self.field)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient or a.field != b.field:
        raise ValueError("ambient mismatch")
    return Subspace(a.ambient, rref(a.basis.stack(b.basis)), a.field)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Largest subspace contained in both a and b."""
    if a.ambient != b.ambient or a.field != b.field:
        raise ValueError("ambient mismatch")
    if b.dim == 0 or a.dim == 0:
        return Subspace.zero(a.ambient, a.field)
    # fast path: b spanned by unit vectors -> keep the part of a supported there
    if b.is_coordinate() and not a.is_coordinate():
        return _intersect_coordinate(a, {min(r) for r in b.basis.rows})
    if a.is_coordinate():
        if b.is_coordinate():
            cols = {min(r) for r in a.basis.rows} & {min(r) for r in b.basis.rows}
            one = a.field.one
            rows = [{c: one} for c in sorted(cols)]
            return Subspace(a.ambient, Mat(len(rows), a.ambient, rows, a.field), a.field)
        return _intersect_coordinate(b, {min(r) for r in a.basis.rows})
    # general case: kernel of (a mod b) pulled back through a's basis
    resid = [b.reduce(r) for r in a.basis.rows]
    combos = left_kernel(Mat(len(resid), a.ambient, resid, a.field))
    rows = [a.basis.row_apply(c) for c in combos.rows]
    return Subspace.from_rows(rows, a.ambient, a.field)


def _intersect_coordinate(a: Subspace, cols):
    """Intersection of a with the coordinate subspace on ``cols``."""
    # rows of a's RREF basis restricted to the complement of cols
    resid = []
    for r in a.basis.rows:
        out = {j: v for j, v in r.items() if j not in cols}
        resid.append(out)
    combos = left_kernel(Mat(len(resid), a.ambient, resid, a.field))
    rows = [a.basis.row_apply(c) for c in combos.rows]
    return Subspace.from_rows(rows, a.ambient, a.field)
