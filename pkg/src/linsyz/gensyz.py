"""Generic syzygy ideals, their geometric models, and the cone map.

Gensyz_k(G) lives in the polynomial ring on a basis of G* + wedge^k G*;
its quadric generators are the comultiplication images of wedge^{k+1} G*.
The k = 0, 1, 2 models are compared degreewise against the
hyperplane-plus-point, Segre and Grassmannian-union ideals, and the map
phi built from a syzygy's chain lift pushes the generic generators onto
the syzygy ideal.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .linalg import Mat, rank, rref
from .rings import (GradedIdeal, Poly, Ring, ideal_intersect_piece,
                    monomial_index, saturation_check)
from .exterior import complement_sign, ext_basis, ext_index, remove_sign
from .strand import Syzygy, compute_strand
from .syzygy import ChainLift, chain_lift, classify, involved


def _yname(T):
    if all(t < 10 for t in T):
        return "y" + "".join(str(t) for t in T)
    return "y" + "_".join(str(t) for t in T)


def _pname(i, j):
    if i < 10 and j < 10:
        return "p%d%d" % (i, j)
    return "p%d_%d" % (i, j)


@dataclass
class GensyzModel:
    """Ambient ring and generators of the k-th generic syzygy ideal."""

    g: int
    k: int
    ring: Ring
    ideal: GradedIdeal

    def x_index(self, i):
        return i

    def y_index(self, T):
        return self.g + ext_index(self.g, self.k)[tuple(T)]

    @property
    def y_subsets(self):
        return ext_basis(self.g, self.k)


def generic_syzygy_ideal(g: int, k: int, field) -> GensyzModel:
    """Quadrics sum_{i in S} (-1)^pos x_i y_{S-i} for (k+1)-subsets S."""
    if not 0 <= k < g:
        raise ValueError("need 0 <= k < g")
    xnames = tuple("x%d" % i for i in range(g))
    ynames = tuple(_yname(T) for T in ext_basis(g, k))
    ring = Ring(xnames + ynames, field)
    gens = []
    for S in ext_basis(g, k + 1):
        terms = {}
        for i in S:
            rest = tuple(t for t in S if t != i)
            e = [0] * ring.nvars
            e[i] += 1
            e[g + ext_index(g, k)[rest]] += 1
            terms[tuple(e)] = field(remove_sign(i, S))
        gens.append(Poly(ring, terms, 2))
    return GensyzModel(g, k, ring, GradedIdeal(ring, gens))


def hyperplane_point_ideal(g: int, field):
    """((y), (x_0..x_{g-1})) in the k=0 ambient ring."""
    model = generic_syzygy_ideal(g, 0, field)
    ring = model.ring
    hyper = GradedIdeal(ring, [ring.variable(g)])
    point = GradedIdeal(ring, [ring.variable(i) for i in range(g)])
    return hyper, point


def segre_ideal(g: int, field) -> GradedIdeal:
    """2x2 minors of [[x_0..x_{g-1}], [y_0..y_{g-1}]] in the k=1 ring."""
    model = generic_syzygy_ideal(g, 1, field)
    ring = model.ring
    gens = []
    for i, j in itertools.combinations(range(g), 2):
        xi, yj = ring.variable(i), ring.variable(g + j)
        xj, yi = ring.variable(j), ring.variable(g + i)
        gens.append(xi * yj - xj * yi)
    return GradedIdeal(ring, gens)


def pluecker_ring(w: int, field) -> Ring:
    return Ring(tuple(_pname(i, j) for i, j in itertools.combinations(range(w), 2)),
                field)


def _three_term_relation(ring, var_of, quad):
    """p_ij p_kl - p_ik p_jl + p_il p_jk for a sorted 4-tuple."""
    i, j, k, l = quad
    terms = []
    for (a, b), (c, d), sgn in (((i, j), (k, l), 1),
                                ((i, k), (j, l), -1),
                                ((i, l), (j, k), 1)):
        terms.append(var_of(a, b) * var_of(c, d) if sgn > 0
                     else (var_of(a, b) * var_of(c, d)).scale(-1))
    return terms[0] + terms[1] + terms[2]


def pluecker_ideal(w: int, field) -> GradedIdeal:
    """Three-term Pluecker quadrics of the Grassmannian of 2-quotients of W."""
    ring = pluecker_ring(w, field)
    pair_index = {pr: i for i, pr in enumerate(itertools.combinations(range(w), 2))}

    def var_of(a, b):
        return ring.variable(pair_index[(a, b)])

    gens = [_three_term_relation(ring, var_of, q)
            for q in itertools.combinations(range(w), 4)]
    if not gens:
        # w < 4: the Grassmannian fills its Pluecker space
        raise ValueError("pluecker_ideal needs w >= 4 (ideal is zero below)")
    return GradedIdeal(ring, gens)


def grassmannian_model_ideals(g: int, field):
    """I_P = (x's) and the Pluecker ideal of C + G*, in the k=2 ambient ring.

    Identification: x_i = p_{0,i+1}, y_{ij} = p_{i+1,j+1}.
    """
    model = generic_syzygy_ideal(g, 2, field)
    ring = model.ring
    pair_idx = ext_index(g, 2)

    def var_of(a, b):
        if a == 0:
            return ring.variable(b - 1)
        return ring.variable(g + pair_idx[(a - 1, b - 1)])

    pl_gens = [_three_term_relation(ring, var_of, q)
               for q in itertools.combinations(range(g + 1), 4)]
    i_p = GradedIdeal(ring, [ring.variable(i) for i in range(g)])
    i_g = GradedIdeal(ring, pl_gens)
    return model, i_p, i_g


# ---------------------------------------------------------------------------
# decomposition checks
# ---------------------------------------------------------------------------

@dataclass
class DegreeComparison:
    degree: int
    lhs_dim: int
    rhs_dim: int

    @property
    def equal(self):
        return self.lhs_dim == self.rhs_dim


@dataclass
class DecompositionReport:
    """Degreewise comparison of a Gensyz ideal with its model intersection."""

    name: str
    g: int
    k: int
    max_degree: int
    generators_contained: bool
    degrees: list
    saturation: object = None

    @property
    def passed(self):
        ok = self.generators_contained and all(d.equal for d in self.degrees)
        if self.saturation is not None:
            ok = ok and self.saturation.saturated
        return ok

    def to_dict(self):
        out = {
            "check": self.name,
            "g": self.g,
            "k": self.k,
            "max_degree": self.max_degree,
            "generators_contained": self.generators_contained,
            "degrees": [{"d": d.degree, "gensyz_dim": d.lhs_dim,
                         "intersection_dim": d.rhs_dim, "equal": d.equal}
                        for d in self.degrees],
            "pass": self.passed,
        }
        if self.saturation is not None:
            out["saturation"] = self.saturation.to_dict()
        return out


def decomposition_check_k0(g: int, up_to: int = 5, field=None) -> DecompositionReport:
    """Gensyz_0(G) = (y) intersect (x's), degreewise up to the bound."""
    from .linalg import GF
    field = field or GF()
    model = generic_syzygy_ideal(g, 0, field)
    hyper, point = hyperplane_point_ideal(g, field)
    contained = all(hyper.piece(2).contains(q.to_vec())
                    and point.piece(2).contains(q.to_vec())
                    for q in model.ideal.generators)
    degrees = []
    for d in range(2, up_to + 1):
        inter = ideal_intersect_piece(hyper, point, d)
        degrees.append(DegreeComparison(d, model.ideal.piece(d).dim, inter.dim))
    sat = saturation_check(model.ideal, up_to)
    return DecompositionReport("gensyz0_decomposition", g, 0, up_to,
                               contained, degrees, sat)


def decomposition_check_k1(g: int, field=None) -> DecompositionReport:
    """Gensyz_1(G) generators span the Segre quadrics exactly."""
    from .linalg import GF
    field = field or GF()
    model = generic_syzygy_ideal(g, 1, field)
    segre = segre_ideal(g, field)
    lhs = model.ideal.piece(2)
    rhs = segre.piece(2)
    return DecompositionReport(
        "gensyz1_segre", g, 1, 2,
        all(rhs.contains(q.to_vec()) for q in model.ideal.generators),
        [DegreeComparison(2, lhs.dim, rhs.dim)])


def grassmannian_union_check(g: int, up_to: int = 5, field=None,
                             with_saturation: bool = True) -> DecompositionReport:
    """Gensyz_2(G) = I_P intersect I_G degreewise under the Pluecker map.

    Containment of the generators in both model ideals (checked in degree
    2) gives Gensyz_d <= (I_P n I_G)_d in every degree, so the degreewise
    equality reduces to the dimension count
    dim(I_P n I_G)_d = dim I_P,d + dim I_G,d - dim(I_P + I_G)_d.
    """
    from .linalg import GF
    field = field or GF()
    if g < 3:
        raise ValueError("need g >= 3")
    model, i_p, i_g = grassmannian_model_ideals(g, field)
    ring = model.ring
    p2 = i_p.piece(2)
    g2 = i_g.piece(2)
    contained = all(p2.contains(q.to_vec()) and g2.contains(q.to_vec())
                    for q in model.ideal.generators)
    degrees = []
    for d in range(2, up_to + 1):
        dim_p = i_p.piece_dim(d)
        dim_g = i_g.piece_dim(d)
        rows = i_p.piece_rows(d) + i_g.piece_rows(d)
        dim_sum = rank(Mat(len(rows), ring.monomial_count(d), rows, field))
        inter_dim = dim_p + dim_g - dim_sum
        degrees.append(DegreeComparison(d, model.ideal.piece_dim(d), inter_dim))
    sat = saturation_check(model.ideal, up_to) if with_saturation else None
    return DecompositionReport("gensyz2_grassmannian_union", g, 2, up_to,
                               contained, degrees, sat)


# ---------------------------------------------------------------------------
# the cone map phi
# ---------------------------------------------------------------------------

@dataclass
class PhiMap:
    """Linear substitution from a Gensyz ambient ring into V = R_1."""

    model: GensyzModel
    target_ring: Ring
    assignment: list     # Poly of degree 1 per model ring variable
    lift: ChainLift

    def push_quadric(self, q: Poly) -> dict:
        """Image of a model quadric in R_2 monomial coordinates."""
        ring = self.target_ring
        field = ring.field
        idx2 = monomial_index(ring, 2)
        out = {}
        for mono, c in q.terms.items():
            factors = [i for i, e in enumerate(mono) for _ in range(e)]
            a, b = factors
            prod = self.assignment[a] * self.assignment[b]
            for m, v in prod.terms.items():
                key = idx2[m]
                s = field(out.get(key, field.zero) + field.mul(c, v))
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def image_rank(self):
        rows = [l.to_vec() for l in self.assignment]
        return rank(Mat(len(rows), self.target_ring.nvars, rows, self.target_ring.field))


def build_phi(f: Syzygy, lift: ChainLift | None = None) -> PhiMap:
    """phi: G* + wedge^k G* -> V with k = rank(f) - p - 1.

    The x-block sends the G* basis to the involved forms; the y-block is
    alpha composed with the volume-form identification
    wedge^k G* = wedge^{p+1} G.
    """
    if lift is None:
        lift = chain_lift(f)
    r = lift.rank
    p = f.p
    k = r - p - 1
    if k < 0:
        raise ValueError("rank below p+1")
    ring = f.strand.ring
    field = ring.field
    model = generic_syzygy_ideal(r, k, field)
    u_index = ext_index(r, p + 1)
    assignment = []
    for l in lift.data.forms:
        assignment.append(l)
    for T in ext_basis(r, k):
        comp, sgn = complement_sign(T, r)
        row = lift.alpha.rows[u_index[comp]]
        vec = {j: field.mul(field(sgn), v) for j, v in row.items()}
        assignment.append(Poly.from_vec(ring, 1, vec))
    return PhiMap(model, ring, assignment, lift)


@dataclass
class ConeReport:
    """Outcome of pushing the generic syzygy ideal through phi."""

    step: int
    index_label: str
    rank: int
    k: int
    pushed_dim: int
    syzygy_ideal_dim: int
    spans_equal: bool
    phi_rank: int
    vertex_proj_dim: int

    @property
    def passed(self):
        return self.spans_equal

    def to_dict(self):
        return {
            "check": "cone",
            "step": self.step,
            "syzygy": self.index_label,
            "rank": self.rank,
            "k": self.k,
            "pushed_dim": self.pushed_dim,
            "syzygy_ideal_dim": self.syzygy_ideal_dim,
            "spans_equal": self.spans_equal,
            "phi_rank": self.phi_rank,
            "vertex_projective_dim": self.vertex_proj_dim,
            "pass": self.passed,
        }


def verify_cone(f: Syzygy, lift: ChainLift | None = None) -> ConeReport:
    """Check span(phi(Gensyz_k generators)) = (I_f)_2 exactly."""
    from .syzygy import _phi0_poly_vec
    if lift is None:
        lift = chain_lift(f)
    phi = build_phi(f, lift)
    ring = f.strand.ring
    field = ring.field
    amb2 = ring.monomial_count(2)
    pushed = [phi.push_quadric(q) for q in phi.model.ideal.generators]
    pushed_basis = rref(Mat(len(pushed), amb2, pushed, field))
    quad_vecs = [_phi0_poly_vec(f.strand, row, field) for row in lift.phi[0].rows]
    if_basis = rref(Mat(len(quad_vecs), amb2, quad_vecs, field))
    phi_rank = phi.image_rank()
    return ConeReport(
        step=f.p,
        index_label=f.label or f.vector_str(),
        rank=lift.rank,
        k=lift.rank - f.p - 1,
        pushed_dim=pushed_basis.nrows,
        syzygy_ideal_dim=if_basis.nrows,
        spans_equal=pushed_basis == if_basis,
        phi_rank=phi_rank,
        vertex_proj_dim=ring.nvars - 1 - phi_rank,
    )


# ---------------------------------------------------------------------------
# the distinguished subcomplex syzygy
# ---------------------------------------------------------------------------

@dataclass
class SubkoszulReport:
    g: int
    k: int
    step: int
    strand_dim: int
    syzygy_rank: int
    involved_dim: int

    @property
    def passed(self):
        return (self.strand_dim >= 1 and self.syzygy_rank == self.g
                and self.involved_dim == self.g)

    def to_dict(self):
        return {
            "check": "subkoszul", "g": self.g, "k": self.k, "step": self.step,
            "strand_dim": self.strand_dim, "syzygy_rank": self.syzygy_rank,
            "involved_dim": self.involved_dim, "pass": self.passed,
        }


def distinguished_syzygy(model: GensyzModel, strand=None) -> Syzygy:
    """The step g-k-1 syzygy coming from the Koszul complex of the x's.

    Follows the inclusion of the subcomplex step by step: psi_0 indexes
    the generators by (k+1)-subsets, and psi_j(e_A) has differential
    sum_{i in A} sign(i,A) psi_{j-1}(e_{A-i}) (x) x_i.
    """
    g, k = model.g, model.k
    step = g - k - 1
    if step < 1:
        raise ValueError("subcomplex syzygy needs g - k - 1 >= 1")
    if strand is None:
        strand = compute_strand(model.ideal, p_max=step)
    if strand.dim(step) == 0:
        raise ValueError("strand vanishes before step %d" % step)
    ring = model.ring
    field = ring.field
    nv = ring.nvars
    # rep[A] = coordinates of psi_j(e_A) over the F_j basis
    rep = {S: {i: field.one} for i, S in enumerate(ext_basis(g, k + 1))}
    for j in range(1, step + 1):
        fj = strand.subspace(j)
        new_rep = {}
        for A in ext_basis(g, k + 1 + j):
            vec = {}
            for i in A:
                rest = tuple(t for t in A if t != i)
                sgn = field(remove_sign(i, A))
                for l, c in rep[rest].items():
                    key = l * nv + i       # variable x_i has index i
                    s = field(vec.get(key, field.zero) + field.mul(sgn, c))
                    if s:
                        vec[key] = s
                    else:
                        vec.pop(key, None)
            coords = fj.coords(vec)
            if coords is None:
                raise RuntimeError("subcomplex element escapes the strand")
            new_rep[A] = coords
        rep = new_rep
    full = tuple(range(g))
    # strand basis at step j equals fj's rref basis by construction
    return Syzygy(strand, step, rep[full], label="subkoszul")


def subkoszul_check(g: int, k: int, field=None, strand=None) -> SubkoszulReport:
    from .linalg import GF
    field = field or GF()
    model = generic_syzygy_ideal(g, k, field)
    step = g - k - 1
    if strand is None:
        strand = compute_strand(model.ideal, p_max=step)
    f = distinguished_syzygy(model, strand)
    data = involved(f)
    return SubkoszulReport(g, k, step, strand.dim(step), data.rank, data.G.dim)


# ---------------------------------------------------------------------------
# 1-genericity of 2 x g matrices of linear forms
# ---------------------------------------------------------------------------

def _poly1_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _poly1_mul(a, b, field):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = field(out[i + j] + field.mul(x, y))
    return _poly1_trim(out)


def _poly1_sub(a, b, field):
    out = [field.zero] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = field.sub(out[i], y)
    return _poly1_trim(out)


def _poly1_mod(a, b, field):
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    ilead = field.inv(lead)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = field.mul(a[-1], ilead)
        for i, y in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(c, y))
        _poly1_trim(a)
    return a


def _poly1_gcd(a, b, field):
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly1_mod(a, b, field)
    if a:
        ilead = field.inv(a[-1])
        a = [field.mul(x, ilead) for x in a]
    return a


def _poly1_powmod(base, e, mod, field):
    result = [field.one]
    base = _poly1_mod(base, mod, field)
    while e:
        if e & 1:
            result = _poly1_mod(_poly1_mul(result, base, field), mod, field)
        base = _poly1_mod(_poly1_mul(base, base, field), mod, field)
        e >>= 1
    return result


def _find_root_prime(poly, field, rng):
    """A root in F_p of a squarefree-ish polynomial, or None."""
    p = field.p
    x = [field.zero, field.one]
    xp = _poly1_powmod(x, p, poly, field)
    linear_part = _poly1_gcd(_poly1_sub(xp, x, field), poly, field)
    f = linear_part
    if len(f) < 2:
        return None
    while len(f) > 2:
        c = field(rng.randrange(p))
        shifted = [c, field.one]
        h = _poly1_powmod(shifted, (p - 1) // 2, f, field)
        h = _poly1_sub(h, [field.one], field)
        cand = _poly1_gcd(h, f, field)
        if 1 < len(cand) < len(f):
            f = cand
    return field.neg(field.mul(f[0], field.inv(f[1])))


@dataclass
class OneGenericReport:
    one_generic: bool
    witness: tuple | None     # (a, b) with a*row1 + b*row2 degenerate
    note: str = ""

    def to_dict(self):
        return {"check": "one_generic", "one_generic": self.one_generic,
                "witness": list(self.witness) if self.witness else None,
                "note": self.note}


def is_one_generic_2xg(row1, row2, ring: Ring, seed: int = 0) -> OneGenericReport:
    """Decide 1-genericity of a 2 x g matrix of linear forms.

    The row pencil a*row1 + b*row2 gives a g x nvars coefficient matrix
    with entries linear in (a, b); the matrix is 1-generic iff the gcd of
    its maximal minors (binary forms in a, b) is a nonzero constant.
    """
    field = ring.field
    g = len(row1)
    assert len(row2) == g
    nv = ring.nvars
    if g > nv:
        return OneGenericReport(False, (field.one, field.zero),
                                "more forms than variables")
    c1 = [l.to_vec() for l in row1]
    c2 = [l.to_vec() for l in row2]
    # entry (i, v) of the pencil matrix as a binary linear form [b-coef, a-coef]
    minors = []
    for cols in itertools.combinations(range(nv), g):
        # determinant by column-subset dynamic programming over rows
        states = {(): [field.one]}
        for i in range(g):
            new_states = {}
            for used, val in states.items():
                used_set = set(used)
                for pos, v in enumerate(cols):
                    if pos in used_set:
                        continue
                    entry = _poly1_trim([field(c2[i].get(v, 0)),
                                         field(c1[i].get(v, 0))])
                    if not entry:
                        continue
                    sgn = sum(1 for u in used if u > pos)
                    term = _poly1_mul(val, entry, field)
                    if sgn % 2:
                        term = [field.neg(t) for t in term]
                    key = tuple(sorted(used + (pos,)))
                    acc = new_states.get(key)
                    if acc is None:
                        new_states[key] = term
                    else:
                        new_states[key] = _poly1_trim(
                            [field(x + y) for x, y in
                             itertools.zip_longest(acc, term, fillvalue=field.zero)])
            states = {k: v for k, v in new_states.items() if v or len(k) < g}
        det = states.get(tuple(range(g)), [])
        if det:
            minors.append(det)
    if not minors:
        return OneGenericReport(False, (field.one, field.zero),
                                "all maximal minors vanish identically")
    # common factor: b-power from degree defects, then univariate gcd in t = a/b
    min_b_power = min(g - (len(m) - 1) for m in minors)
    gcd = []
    for m in minors:
        gcd = _poly1_gcd(gcd, m, field) if gcd else [field.mul(x, field.inv(m[-1])) for x in m]
        if len(gcd) == 1 and min_b_power == 0:
            return OneGenericReport(True, None)
    if len(gcd) == 1 and min_b_power == 0:
        return OneGenericReport(True, None)
    if min_b_power > 0:
        return OneGenericReport(False, (field.one, field.zero),
                                "common root at (1:0)")
    rng = random.Random(seed)
    if field.kind == "prime":
        root = _find_root_prime(gcd, field, rng)
        if root is not None:
            return OneGenericReport(False, (root, field.one),
                                    "common root of the minor gcd")
        return OneGenericReport(False, None,
                                "not 1-generic, witness in extension field")
    # rationals: try rational roots of the integer-scaled gcd
    from fractions import Fraction
    den = 1
    for c in gcd:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    ints = [int(c * den) for c in gcd]
    for cand in _rational_root_candidates(ints):
        if _eval_poly1(gcd, cand, field) == field.zero:
            return OneGenericReport(False, (cand, field.one),
                                    "common root of the minor gcd")
    return OneGenericReport(False, None,
                            "not 1-generic, witness outside the rationals")


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _eval_poly1(coeffs, x, field):
    acc = field.zero
    for c in reversed(coeffs):
        acc = field(acc * x + c)
    return acc


def _rational_root_candidates(ints):
    from fractions import Fraction
    if not ints:
        return []
    a0 = abs(ints[0]) or 1
    an = abs(ints[-1]) or 1
    ps = [d for d in range(1, a0 + 1) if a0 % d == 0]
    qs = [d for d in range(1, an + 1) if an % d == 0]
    cands = set()
    for p_ in ps:
        for q_ in qs:
            cands.add(Fraction(p_, q_))
            cands.add(Fraction(-p_, q_))
    cands.add(Fraction(0))
    return sorted(cands)


# ---------------------------------------------------------------------------
# section ideals on the Grassmannian
# ---------------------------------------------------------------------------

def section_vanishing_ideal(w: int, s: dict, field) -> GradedIdeal:
    """Linear ideal (s wedge W) in Pluecker coordinates; s a vector in W."""
    if not s:
        raise ValueError("zero section")
    ring = pluecker_ring(w, field)
    pair_index = {pr: i for i, pr in enumerate(itertools.combinations(range(w), 2))}
    rows = []
    for t in range(w):
        vec = {}
        for i, c in s.items():
            if i == t:
                continue
            if i < t:
                key = pair_index[(i, t)]
                val = c
            else:
                key = pair_index[(t, i)]
                val = field.neg(c)
            sacc = field(vec.get(key, field.zero) + val)
            if sacc:
                vec[key] = sacc
            else:
                vec.pop(key, None)
        if vec:
            rows.append(vec)
    basis = rref(Mat(len(rows), ring.nvars, rows, field))
    gens = [Poly.from_vec(ring, 1, r) for r in basis.rows]
    return GradedIdeal(ring, gens)


@dataclass
class InjectivityReport:
    """Records, per section s, whether span(s wedge W) avoids ker(phi)."""

    rank: int
    w: int
    sections: list        # (label, passed) pairs

    @property
    def passed(self):
        return all(ok for _, ok in self.sections)

    def to_dict(self):
        return {"check": "h0_injectivity", "rank": self.rank, "w": self.w,
                "sections": [{"section": lbl, "pass": ok}
                             for lbl, ok in self.sections],
                "pass": self.passed}


def h0_injectivity_check(f: Syzygy, lift: ChainLift | None = None,
                         n_random: int = 5, seed: int = 0) -> InjectivityReport:
    """For sections s of C + G*, check span(s wedge W) is not in ker(phi)."""
    if lift is None:
        lift = chain_lift(f)
    if classify(f, lift.data) != "grassmannian":
        raise ValueError("check applies to grassmannian syzygies (rank p+3)")
    phi = build_phi(f, lift)
    r = lift.rank
    w = r + 1
    field = f.strand.ring.field
    pair_idx = ext_index(r, 2)

    def source_index(a, b):
        # wedge^2(C + G*) -> x block (a=0) or y block
        if a == 0:
            return b - 1
        return r + pair_idx[(a - 1, b - 1)]

    def section_passes(s):
        for t in range(w):
            image = {}
            for i, c in s.items():
                if i == t:
                    continue
                a, b = (i, t) if i < t else (t, i)
                val = c if i < t else field.neg(c)
                form = phi.assignment[source_index(a, b)]
                for j, lv in form.to_vec().items():
                    acc = field(image.get(j, field.zero) + field.mul(val, lv))
                    if acc:
                        image[j] = acc
                    else:
                        image.pop(j, None)
            if image:
                return True
        return False

    sections = []
    for i in range(w):
        label = "e%d" % i
        sections.append((label, section_passes({i: field.one})))
    rng = random.Random(seed)
    for t in range(n_random):
        if field.kind == "prime":
            s = {i: field(rng.randrange(1, field.p)) for i in range(w)}
        else:
            s = {i: field(rng.randrange(1, 100)) for i in range(w)}
        sections.append(("random%d" % t, section_passes(s)))
    return InjectivityReport(r, w, sections)
