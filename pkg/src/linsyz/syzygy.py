"""Per-syzygy analysis: involved spaces, rank, chain lift, syzygy ideal.

The differential of a p-th syzygy f factors through G (x) G* where G is
the smallest space of (p-1)-st syzygies through which f maps and G* the
space of involved linear forms.  Writing d(f) = sum_i e_i (x) l_i over a
basis of G, the Koszul complex of G maps into the linear strand; the
comparison maps phi_k and the closing map alpha are recovered by exact
linear solves and re-verified by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Mat, Subspace, rref, solve
from .rings import (GradedIdeal, Poly, dim_degree_estimate, hilbert_function,
                    monomial_basis, monomial_index, poly_str)
from .exterior import ext_basis, ext_index, insert_sign, inserted
from .strand import Syzygy, strand_differential


class LiftError(RuntimeError):
    """A chain-lift solve failed; signals a sign or basis inconsistency."""


@dataclass
class InvolvedData:
    """Minimal factorization data of a syzygy differential."""

    syzygy: Syzygy
    G: Subspace          # subspace of F_{p-1} (basis coordinates)
    Gstar: Subspace      # subspace of V
    forms: list          # linear forms l_i matching the basis rows of G
    diff: Mat            # strand_differential(f)

    @property
    def rank(self):
        return self.G.dim


def involved(f: Syzygy) -> InvolvedData:
    """Smallest G with d(f) in G (x) V, plus the involved linear forms."""
    m = strand_differential(f)
    field = m.field
    g_basis = rref(m.transpose())          # column space of M inside F_{p-1}
    gstar_basis = rref(m)                  # row space of M inside V
    G = Subspace(m.nrows, g_basis, field)
    Gstar = Subspace(m.ncols, gstar_basis, field)
    if G.dim != Gstar.dim:
        raise LiftError("row and column rank disagree")
    # write d(f) = sum_i e_i (x) l_i over the canonical basis of G
    res = solve(g_basis.transpose(), m)
    if not res.ok or not res.unique:
        raise LiftError("differential does not factor through G uniquely")
    ring = f.strand.ring
    forms = []
    l_rows = [{} for _ in range(G.dim)]
    for i, col in enumerate(res.solutions.rows):
        # res.solutions rows are indexed by G basis? solutions is n x k with
        # n = cols of g_basis^T = G.dim, k = targets = nv
        for j, v in col.items():
            l_rows[i][j] = v
    for i in range(G.dim):
        forms.append(Poly.from_vec(ring, 1, l_rows[i]))
    data = InvolvedData(f, G, Gstar, forms, m)
    if data.rank < f.p + 1:
        raise LiftError("rank %d below the bound p+1 = %d" % (data.rank, f.p + 1))
    return data


def classify(f: Syzygy, data: InvolvedData | None = None) -> str:
    """reducible / scrollar / grassmannian / higher(rank)."""
    if data is None:
        data = involved(f)
    excess = data.rank - f.p
    if excess == 1:
        return "reducible"
    if excess == 2:
        return "scrollar"
    if excess == 3:
        return "grassmannian"
    return "higher(%d)" % data.rank


@dataclass
class ChainLift:
    """Comparison maps from the Koszul complex of G into the strand.

    phi[k] is a Mat whose rows, indexed by the lexicographic basis of
    wedge^{p-k} G, hold coordinates over the F_k basis.  alpha closes the
    diagram: for every p-subset T, the polynomial phi_0(e_T) equals
    sum_{i not in T} sign(i,T) l_i * alpha(e_{T+i}).
    """

    syzygy: Syzygy
    data: InvolvedData
    phi: dict
    alpha: Mat           # rows = (p+1)-subsets of [rank], cols = variables
    alpha_unique: bool

    @property
    def rank(self):
        return self.data.rank


def _phi0_poly_vec(lift_or_strand, phi0_row, field):
    """Row of phi[0] (coords over generators) as an R_2 coordinate vector."""
    strand = lift_or_strand
    out = {}
    for c, v in phi0_row.items():
        for mi, gv in strand.basis[0].rows[c].items():
            s = field(out.get(mi, field.zero) + field.mul(v, gv))
            if s:
                out[mi] = s
            else:
                out.pop(mi, None)
    return out


def chain_lift(f: Syzygy, data: InvolvedData | None = None) -> ChainLift:
    if data is None:
        data = involved(f)
    strand = f.strand
    ring = strand.ring
    field = ring.field
    nv = ring.nvars
    p = f.p
    r = data.rank
    forms = [l.to_vec() for l in data.forms]

    phi = {p: Mat(1, strand.basis[p].nrows, [dict(f.vector)], field)}
    # phi_{p-1} is the inclusion of G: the factorization d(f) = sum e_i (x) l_i
    phi[p - 1] = Mat(r, strand.basis[p - 1].nrows,
                     [dict(row) for row in data.G.basis.rows], field)

    for k in range(p - 1, 0, -1):
        src = ext_basis(r, p - k)        # basis of the phi_k source
        dst = ext_basis(r, p - k + 1)    # basis of the phi_{k-1} source
        dst_idx = ext_index(r, p - k + 1)
        m_prev = strand.basis[k - 1].nrows
        # same coefficient matrix for every F_{k-1} coordinate
        a_rows = []
        t_rows = []
        fk = strand.basis[k]
        for ti, T in enumerate(src):
            lhs_rows = [{} for _ in range(nv)]
            for c, v in phi[k].rows[ti].items():
                for t, w in fk.rows[c].items():
                    l, j = divmod(t, nv)
                    s = field(lhs_rows[j].get(l, field.zero) + field.mul(v, w))
                    if s:
                        lhs_rows[j][l] = s
                    else:
                        lhs_rows[j].pop(l, None)
            for j in range(nv):
                arow = {}
                for i in range(r):
                    if i in T:
                        continue
                    lij = forms[i].get(j)
                    if lij:
                        sgn = insert_sign(i, T)
                        arow[dst_idx[inserted(i, T)]] = field(sgn * lij)
                a_rows.append(arow)
                t_rows.append(lhs_rows[j])
        a = Mat(len(a_rows), len(dst), a_rows, field)
        targets = Mat(len(t_rows), m_prev, t_rows, field)
        res = solve(a, targets)
        if not res.ok:
            raise LiftError("inconsistent lift at step %d" % (k - 1))
        if not res.unique:
            raise LiftError("non-unique lift at step %d" % (k - 1))
        new_rows = [{} for _ in range(len(dst))]
        for s_idx, row in enumerate(res.solutions.rows):
            for l, v in row.items():
                new_rows[s_idx][l] = v
        phi[k - 1] = Mat(len(dst), m_prev, new_rows, field)
        if all(not row for row in new_rows):
            raise LiftError("vanishing comparison map at step %d" % (k - 1))

    # close the diagram: solve for alpha from the degree-2 identity
    idx2 = monomial_index(ring, 2)
    amb2 = ring.monomial_count(2)
    p_subsets = ext_basis(r, p)
    u_subsets = ext_basis(r, p + 1)
    u_index = ext_index(r, p + 1)
    ncols = len(u_subsets) * nv
    a_rows = []
    b_rows = []
    var_monos = monomial_basis(ring, 1)
    for ti, T in enumerate(p_subsets):
        target_vec = _phi0_poly_vec(strand, phi[0].rows[ti], field)
        eq = {}          # (mono2 index) -> {unknown: coeff}
        for i in range(r):
            if i in T:
                continue
            sgn = insert_sign(i, T)
            u = u_index[inserted(i, T)]
            for vm, lc in forms[i].items():
                for j in range(nv):
                    mono = [a + b for a, b in zip(var_monos[vm], var_monos[j])]
                    m2 = idx2[tuple(mono)]
                    col = u * nv + j
                    d = eq.setdefault(m2, {})
                    s = field(d.get(col, field.zero) + field.mul(field(sgn), lc))
                    if s:
                        d[col] = s
                    else:
                        d.pop(col, None)
        for m2 in range(amb2):
            arow = eq.get(m2)
            bval = target_vec.get(m2)
            if arow or bval:
                a_rows.append(arow or {})
                b_rows.append({0: bval} if bval else {})
    a = Mat(len(a_rows), ncols, a_rows, field)
    b = Mat(len(b_rows), 1, b_rows, field)
    res = solve(a, b)
    if not res.ok:
        raise LiftError("inconsistent alpha solve")
    alpha_rows = [{} for _ in range(len(u_subsets))]
    for t, row in enumerate(res.solutions.rows):
        v = row.get(0)
        if v:
            u, j = divmod(t, nv)
            alpha_rows[u][j] = v
    alpha = Mat(len(u_subsets), nv, alpha_rows, field)
    lift = ChainLift(f, data, phi, alpha, res.unique)
    _verify_lift(lift)
    return lift


def _verify_lift(lift: ChainLift):
    """Re-check every commuting square by direct substitution."""
    f = lift.syzygy
    strand = f.strand
    ring = strand.ring
    field = ring.field
    nv = ring.nvars
    p = f.p
    r = lift.rank
    forms = [l.to_vec() for l in lift.data.forms]
    for k in range(p, 0, -1):
        src = ext_basis(r, p - k)
        dst_idx = ext_index(r, p - k + 1)
        fk = strand.basis[k]
        for ti, T in enumerate(src):
            lhs = {}
            for c, v in lift.phi[k].rows[ti].items():
                for t, w in fk.rows[c].items():
                    _acc(lhs, t, field.mul(v, w), field)
            rhs = {}
            for i in range(r):
                if i in T:
                    continue
                sgn = field(insert_sign(i, T))
                prow = lift.phi[k - 1].rows[dst_idx[inserted(i, T)]]
                for l, v in prow.items():
                    for j, lij in forms[i].items():
                        _acc(rhs, l * nv + j,
                             field.mul(field.mul(sgn, v), lij), field)
            if lhs != rhs:
                raise LiftError("square at step %d fails verification" % k)
        if all(not row for row in lift.phi[k].rows):
            raise LiftError("comparison map at step %d is zero" % k)
    # bottom identity
    idx2 = monomial_index(ring, 2)
    var_monos = monomial_basis(ring, 1)
    u_index = ext_index(r, p + 1)
    for ti, T in enumerate(ext_basis(r, p)):
        want = _phi0_poly_vec(strand, lift.phi[0].rows[ti], field)
        got = {}
        for i in range(r):
            if i in T:
                continue
            sgn = field(insert_sign(i, T))
            arow = lift.alpha.rows[u_index[inserted(i, T)]]
            for vm, lc in forms[i].items():
                for j, av in arow.items():
                    mono = tuple(a + b for a, b in zip(var_monos[vm], var_monos[j]))
                    _acc(got, idx2[mono],
                         field.mul(field.mul(sgn, lc), av), field)
        if want != got:
            raise LiftError("bottom identity fails verification")


def _acc(row, key, c, field):
    s = field(row.get(key, field.zero) + c)
    if s:
        row[key] = s
    else:
        row.pop(key, None)


@dataclass
class SyzygyIdealReport:
    """Syzygy ideal I_f with Hilbert evidence for its scheme Syz(f)."""

    syzygy: Syzygy
    data: InvolvedData
    classification: str
    ideal: GradedIdeal
    hilbert: list
    estimate: object
    lift: ChainLift

    @property
    def rank(self):
        return self.data.rank

    def to_dict(self):
        ring = self.ideal.ring
        return {
            "step": self.syzygy.p,
            "vector": self.syzygy.vector_str(),
            "rank": self.rank,
            "classification": self.classification,
            "involved_forms": [poly_str(l) for l in self.data.forms],
            "syzygy_ideal_generators": [poly_str(g) for g in self.ideal.generators],
            "hilbert": self.hilbert,
            "estimate": self.estimate.to_dict(),
            "codimension": (None if not self.estimate.ok
                            else ring.nvars - 1 - self.estimate.dimension),
        }


def syzygy_ideal(f: Syzygy, lift: ChainLift | None = None,
                 max_degree: int = 6) -> SyzygyIdealReport:
    """I_f = (phi_0(wedge^p G)), with Hilbert table and dim/degree estimate."""
    if lift is None:
        lift = chain_lift(f)
    strand = f.strand
    ring = strand.ring
    field = ring.field
    quad_vecs = [_phi0_poly_vec(strand, row, field) for row in lift.phi[0].rows]
    amb2 = ring.monomial_count(2)
    basis = rref(Mat(len(quad_vecs), amb2, quad_vecs, field))
    if basis.nrows == 0:
        raise LiftError("empty syzygy ideal")
    i2 = strand.ideal.piece(2)
    for row in basis.rows:
        if not i2.contains(row):
            raise LiftError("syzygy ideal leaves I_2")
    gens = [Poly.from_vec(ring, 2, row) for row in basis.rows]
    ideal = GradedIdeal(ring, gens)
    hil = [hilbert_function(ideal, d) for d in range(1, max_degree + 1)]
    est = dim_degree_estimate(hil)
    data = lift.data
    return SyzygyIdealReport(f, data, classify(f, data), ideal, hil, est, lift)
