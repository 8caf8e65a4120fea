"""Exterior-algebra combinatorics and Koszul-type differentials.

Multi-indices are strictly increasing tuples; bases of wedge powers are
listed lexicographically and tensor-product bases are ordered with the
left factor major.  All signs use the position convention: removing or
inserting index i in S contributes (-1)^(number of elements before i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import Mat, Subspace
from .rings import Ring, monomial_basis, monomial_index


def ext_basis(g: int, k: int):
    """Lexicographic basis of wedge^k of a g-dimensional space."""
    return list(itertools.combinations(range(g), k))


def ext_index(g: int, k: int):
    return {T: i for i, T in enumerate(ext_basis(g, k))}


def remove_sign(i, S):
    """Sign of extracting index i from multi-index S: (-1)^pos(i, S)."""
    return -1 if S.index(i) % 2 else 1


def insert_sign(i, T):
    """Sign of e_i wedge e_T (i not in T): (-1)^(#elements of T below i)."""
    below = sum(1 for t in T if t < i)
    return -1 if below % 2 else 1


def inserted(i, T):
    return tuple(sorted(T + (i,)))


def perm_sign(seq):
    """Sign of the permutation sorting seq (distinct entries)."""
    sign = 1
    lst = list(seq)
    for i in range(len(lst)):
        for j in range(i + 1, len(lst)):
            if lst[i] > lst[j]:
                sign = -sign
    return sign


def complement_sign(T, g):
    """Volume-form pairing: e_T* -> sign * e_{complement}.

    The sign is the permutation sign of (T, complement(T)) against
    (0, ..., g-1).
    """
    comp = tuple(i for i in range(g) if i not in T)
    return comp, perm_sign(T + comp)


@dataclass
class IndexedMap:
    """A linear map between spaces with explicitly labelled bases."""

    source_basis: list
    target_basis: list
    mat: Mat          # rows = images of source basis vectors

    def __post_init__(self):
        assert self.mat.nrows == len(self.source_basis)
        assert self.mat.ncols == len(self.target_basis)

    def apply(self, vec):
        """Push a coefficient vector over the source basis to the target."""
        return self.mat.row_apply(vec)


def comultiply(g: int, k: int, field) -> IndexedMap:
    """wedge^{k+1} G* -> G* (x) wedge^k G*: e_S -> sum +- e_i (x) e_{S-i}."""
    if not 0 <= k < g:
        raise ValueError("need 0 <= k < g")
    src = ext_basis(g, k + 1)
    tk = ext_index(g, k)
    nk = len(tk)
    target = [(i, T) for i in range(g) for T in ext_basis(g, k)]
    rows = []
    for S in src:
        row = {}
        for i in S:
            rest = tuple(t for t in S if t != i)
            c = field(remove_sign(i, S))
            row[i * nk + tk[rest]] = c
        rows.append(row)
    return IndexedMap(src, target, Mat(len(src), g * nk, rows, field))


def koszul_contract(ring: Ring, p: int, w: Subspace, d: int) -> IndexedMap:
    """Contraction wedge^p V (x) W -> wedge^{p-1} V (x) R_{d+1}.

    W is a subspace of R_d; basis vectors of the source are pairs
    (multi-index, W-basis row).  The map sends (v_T (x) q) to
    sum_j +- v_{T-j} (x) (x_j * q).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    nv = ring.nvars
    field = ring.field
    src_idx = ext_basis(nv, p)
    tgt_idx = ext_index(nv, p - 1)
    basis_d = monomial_basis(ring, d)
    idx_d1 = monomial_index(ring, d + 1)
    nmono = ring.monomial_count(d + 1)
    source = [(T, a) for T in src_idx for a in range(w.dim)]
    target = [(S, m) for S in ext_basis(nv, p - 1) for m in monomial_basis(ring, d + 1)]
    rows = []
    for T in src_idx:
        for a in range(w.dim):
            q = w.basis.rows[a]
            row = {}
            for pos, j in enumerate(T):
                rest = tuple(t for t in T if t != j)
                sgn = field(-1 if pos % 2 else 1)
                base = tgt_idx[rest] * nmono
                for mi, c in q.items():
                    mono = list(basis_d[mi])
                    mono[j] += 1
                    key = base + idx_d1[tuple(mono)]
                    s = field(row.get(key, field.zero) + field.mul(sgn, c))
                    if s:
                        row[key] = s
                    else:
                        row.pop(key, None)
            rows.append(row)
    ncols = len(tgt_idx) * nmono
    return IndexedMap(source, target, Mat(len(source), ncols, rows, field))


def wedge_theta(m: int, g: int, forms, ring: Ring) -> IndexedMap:
    """Wedge with theta = sum_i e_i (x) l_i: wedge^m G -> wedge^{m+1} G (x) V.

    ``forms`` lists the linear form attached to each basis vector of G.
    """
    if not 0 <= m < g:
        raise ValueError("need 0 <= m < g")
    assert len(forms) == g
    field = ring.field
    nv = ring.nvars
    src = ext_basis(g, m)
    tgt_idx = ext_index(g, m + 1)
    target = [(S, v) for S in ext_basis(g, m + 1) for v in range(nv)]
    var_index = monomial_index(ring, 1)
    rows = []
    for T in src:
        row = {}
        for i in range(g):
            if i in T:
                continue
            sgn = field(insert_sign(i, T))
            base = tgt_idx[inserted(i, T)] * nv
            for mono, c in forms[i].terms.items():
                key = base + var_index[mono]
                s = field(row.get(key, field.zero) + field.mul(sgn, c))
                if s:
                    row[key] = s
                else:
                    row.pop(key, None)
        rows.append(row)
    return IndexedMap(src, target, Mat(len(src), len(tgt_idx) * nv, rows, field))
