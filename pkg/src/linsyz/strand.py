"""Linear strand of the minimal free resolution of a quadric ideal.

The strand is computed by iterated kernels: F_0 is spanned by the
generators, F_1 is the kernel of the multiplication map F_0 (x) V -> R_3,
and each later F_p is the kernel of F_{p-1} (x) V -> F_{p-2} (x) R_2.
An independent Koszul-kernel computation of the same dimensions serves
as the cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Mat, Subspace, left_kernel, rank
from .rings import GradedIdeal, monomial_basis, monomial_index
from .exterior import ext_basis

DEFAULT_STEP_CAP = 6


class StrandError(ValueError):
    pass


@dataclass
class LinearStrand:
    """F_0, F_1, ... with F_p given by explicit basis rows in F_{p-1} (x) V.

    basis[0] has rows = the quadric generators in R_2 monomial
    coordinates; basis[p] for p >= 1 has rows over the tensor basis
    (F_{p-1} basis index) * nvars + variable index, in canonical RREF.
    """

    ideal: GradedIdeal
    basis: list

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def dims(self):
        return [b.nrows for b in self.basis]

    @property
    def length(self):
        return len(self.basis) - 1

    def dim(self, p):
        return self.basis[p].nrows if p < len(self.basis) else 0

    def subspace(self, p) -> Subspace:
        b = self.basis[p]
        from .linalg import rref
        return Subspace(b.ncols, rref(b), self.ring.field)

    def syzygy(self, p, index) -> "Syzygy":
        if not 1 <= p <= self.length or not 0 <= index < self.dim(p):
            raise StrandError("no basis syzygy at step %d index %d" % (p, index))
        return Syzygy(self, p, {index: self.ring.field.one},
                      label="e%d" % index)

    def basis_syzygies(self, p):
        return [self.syzygy(p, i) for i in range(self.dim(p))]

    def betti_table(self):
        lines = ["%d: %d" % (p, d) for p, d in enumerate(self.dims)]
        return "\n".join(lines)


@dataclass
class Syzygy:
    """An element of F_p, as a coordinate vector over the F_p basis."""

    strand: LinearStrand
    p: int
    vector: dict
    label: str = ""

    def __post_init__(self):
        if not self.vector:
            raise StrandError("zero syzygy")

    def vector_str(self):
        F = self.strand.ring.field
        return "+".join("%s*e%d" % (F.lift(c), i)
                        for i, c in sorted(self.vector.items()))


def compute_strand(ideal: GradedIdeal, p_max=None, cap=DEFAULT_STEP_CAP) -> LinearStrand:
    """Linear strand of a quadric-generated ideal, up to first vanishing."""
    ring = ideal.ring
    field = ring.field
    nv = ring.nvars
    gens = ideal.generators
    if not gens:
        raise StrandError("ideal has no generators")
    for g in gens:
        if g.degree != 2:
            raise StrandError("non-quadric generator: %s" % g)
    gen_rows = [g.to_vec() for g in gens]
    amb2 = ring.monomial_count(2)
    f0 = Mat(len(gens), amb2, gen_rows, field)
    if rank(f0) != len(gens):
        raise StrandError("generators are linearly dependent")
    basis = [f0]
    limit = cap if p_max is None else min(p_max, cap)
    idx2 = monomial_index(ring, 2)
    idx3 = monomial_index(ring, 3)
    basis1 = monomial_basis(ring, 1)
    p = 1
    while p <= limit:
        prev = basis[p - 1]
        rows = []
        if p == 1:
            amb = ring.monomial_count(3)
            for i in range(prev.nrows):
                for j in range(nv):
                    row = {}
                    for mi, c in prev.rows[i].items():
                        mono = _shift_deg2(ring, mi, j, idx3)
                        _acc(row, mono, c, field)
                    rows.append(row)
        else:
            older = basis[p - 2]
            amb = older.nrows * amb2
            for k in range(prev.nrows):
                for j in range(nv):
                    row = {}
                    for t, c in prev.rows[k].items():
                        l, m = divmod(t, nv)
                        mono = [0] * nv
                        mono[m] += 1
                        mono[j] += 1
                        key = l * amb2 + idx2[tuple(mono)]
                        _acc(row, key, c, field)
                    rows.append(row)
        ker = left_kernel(Mat(len(rows), amb, rows, field))
        if ker.nrows == 0:
            basis.append(Mat(0, prev.nrows * nv, [], field))
            break
        basis.append(Mat(ker.nrows, prev.nrows * nv, ker.rows, field))
        p += 1
    return LinearStrand(ideal, basis)


def _shift_deg2(ring, mono2_index, var, idx3):
    mono = list(monomial_basis(ring, 2)[mono2_index])
    mono[var] += 1
    return idx3[tuple(mono)]


def _acc(row, key, c, field):
    s = field(row.get(key, field.zero) + c)
    if s:
        row[key] = s
    else:
        row.pop(key, None)


def koszul_betti(ideal: GradedIdeal, p: int) -> int:
    """dim ker(wedge^p V (x) I_2 -> wedge^{p-1} V (x) R_3).

    Independent of compute_strand; the map lands in wedge^{p-1} V (x) I_3
    automatically since each x_j * g is in I.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    ring = ideal.ring
    field = ring.field
    nv = ring.nvars
    gens = ideal.generators
    for g in gens:
        if g.degree != 2:
            raise StrandError("non-quadric generator: %s" % g)
    gen_vecs = [g.to_vec() for g in gens]
    idx3 = monomial_index(ring, 3)
    basis2 = monomial_basis(ring, 2)
    nmono3 = ring.monomial_count(3)
    tgt = {S: i for i, S in enumerate(ext_basis(nv, p - 1))}
    rows = []
    for T in ext_basis(nv, p):
        for q in gen_vecs:
            row = {}
            for pos, j in enumerate(T):
                rest = tuple(t for t in T if t != j)
                sgn = field(-1 if pos % 2 else 1)
                base = tgt[rest] * nmono3
                for mi, c in q.items():
                    mono = list(basis2[mi])
                    mono[j] += 1
                    _acc(row, base + idx3[tuple(mono)], field.mul(sgn, c), field)
            rows.append(row)
    nrows = len(rows)
    r = rank(Mat(nrows, len(tgt) * nmono3, rows, field))
    return nrows - r


def strand_differential(f: Syzygy) -> Mat:
    """Coefficient matrix of f in F_{p-1} (x) V: rows F_{p-1}, cols V."""
    if f.p < 1:
        raise StrandError("no differential at step 0")
    strand = f.strand
    nv = strand.ring.nvars
    field = strand.ring.field
    prev_dim = strand.basis[f.p - 1].nrows
    rows = [{} for _ in range(prev_dim)]
    fp = strand.basis[f.p]
    for k, c in f.vector.items():
        for t, v in fp.rows[k].items():
            l, j = divmod(t, nv)
            s = field(rows[l].get(j, field.zero) + field.mul(c, v))
            if s:
                rows[l][j] = s
            else:
                rows[l].pop(j, None)
    return Mat(prev_dim, nv, rows, field)
