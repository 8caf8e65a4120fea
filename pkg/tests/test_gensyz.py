"""Generic syzygy ideals, decomposition theorems, the cone map."""

import itertools
import math
import random

import pytest

from linsyz.linalg import GF, Mat, rank
from linsyz.rings import Ring, hilbert_function, poly_str
from linsyz.strand import Syzygy, compute_strand
from linsyz.syzygy import chain_lift, classify, involved
from linsyz.gensyz import (build_phi, decomposition_check_k0,
                           decomposition_check_k1, distinguished_syzygy,
                           generic_syzygy_ideal, grassmannian_union_check,
                           h0_injectivity_check, is_one_generic_2xg,
                           pluecker_ideal, section_vanishing_ideal,
                           subkoszul_check, verify_cone)
from linsyz.corpus import rnc_ideal

F = GF()


def test_generator_counts_and_independence():
    for g in range(1, 7):
        for k in range(g):
            model = generic_syzygy_ideal(g, k, F)
            gens = model.ideal.generators
            assert len(gens) == math.comb(g, k + 1)
            assert model.ring.nvars == g + math.comb(g, k)
            if gens:
                rows = [q.to_vec() for q in gens]
                m = Mat(len(rows), model.ring.monomial_count(2), rows, F)
                assert rank(m) == len(rows)


def test_generator_strings():
    model = generic_syzygy_ideal(2, 0, F)
    assert [poly_str(q) for q in model.ideal.generators] == ["x0*y", "x1*y"]
    model = generic_syzygy_ideal(2, 1, F)
    assert [poly_str(q) for q in model.ideal.generators] == ["-x1*y0 + x0*y1"]
    model = generic_syzygy_ideal(4, 2, F)
    # q_{123} = x1*y23 - x2*y13 + x3*y12, printed in descending term order
    assert poly_str(model.ideal.generators[3]) == "x3*y12 - x2*y13 + x1*y23"


def test_pluecker_point():
    """Plucker coordinates of a decomposable 2-form satisfy all quadrics."""
    ideal = pluecker_ideal(5, F)
    assert len(ideal.generators) == 5
    rng = random.Random(7)
    v = [F(rng.randrange(5)) for _ in range(5)]
    w = [F(rng.randrange(5)) for _ in range(5)]
    coords = {}
    for t, (i, j) in enumerate(itertools.combinations(range(5), 2)):
        coords[t] = F.sub(F.mul(v[i], w[j]), F.mul(v[j], w[i]))
    point = [coords.get(t, F.zero) for t in range(10)]
    for q in ideal.generators:
        acc = F.zero
        for mono, c in q.terms.items():
            val = c
            for t, e in enumerate(mono):
                for _ in range(e):
                    val = F.mul(val, point[t])
            acc = F(acc + val)
        assert acc == F.zero


def test_decomposition_k0():
    rep = decomposition_check_k0(2, 5, F)
    assert rep.passed
    assert rep.degrees[0].lhs_dim == 2


def test_decomposition_k1():
    for g in (2, 5):
        rep = decomposition_check_k1(g, F)
        assert rep.passed
        assert rep.degrees[0].lhs_dim == math.comb(g, 2)


def test_grassmannian_union_small():
    rep = grassmannian_union_check(3, 4, F)
    assert rep.passed
    assert rep.degrees[0].lhs_dim == 1      # wedge^3 of a 3-space


def test_grassmannian_union_g4_dimensions():
    rep = grassmannian_union_check(4, 3, F, with_saturation=False)
    assert rep.passed
    assert rep.degrees[0].lhs_dim == 4      # C(4,3) quadrics


def test_build_phi_x_block_is_gstar():
    strand = compute_strand(rnc_ideal(3, F))
    f = strand.syzygy(1, 0)
    lift = chain_lift(f)
    phi = build_phi(f, lift)
    r = lift.rank
    rows = [l.to_vec() for l in phi.assignment[:r]]
    m = Mat(r, strand.ring.nvars, rows, F)
    from linsyz.linalg import rref
    assert rref(m) == lift.data.Gstar.basis


def test_verify_cone_twisted_cubic():
    strand = compute_strand(rnc_ideal(3, F))
    for f in strand.basis_syzygies(1):
        rep = verify_cone(f)
        assert rep.passed
        assert rep.pushed_dim == rep.syzygy_ideal_dim == 3


def test_verify_cone_distinguished_gensyz_syzygy():
    """The step-1 rank-4 syzygy of Gensyz_2(4): phi is onto V (no cone)."""
    model = generic_syzygy_ideal(4, 2, F)
    f = distinguished_syzygy(model)
    rep = verify_cone(f)
    assert rep.passed
    assert rep.rank == 4
    assert rep.phi_rank == model.ring.nvars
    assert rep.vertex_proj_dim == -1


@pytest.mark.parametrize("g,k", [(3, 1), (4, 1), (4, 2), (5, 2)])
def test_subkoszul(g, k):
    rep = subkoszul_check(g, k, F)
    assert rep.passed
    assert rep.step == g - k - 1
    assert rep.syzygy_rank == g


def hankel_rows(ring, d):
    row1 = [ring.variable(i) for i in range(d)]
    row2 = [ring.variable(i + 1) for i in range(d)]
    return row1, row2


def test_one_generic_hankel():
    ring = Ring(tuple("x%d" % i for i in range(4)), F)
    row1, row2 = hankel_rows(ring, 3)
    rep = is_one_generic_2xg(row1, row2, ring)
    assert rep.one_generic and rep.witness is None


def test_one_generic_counterexample():
    ring = Ring(("x0", "x1"), F)
    zero_poly = ring.variable(0) - ring.variable(0)
    row1 = [ring.variable(0), ring.variable(1)]
    row2 = [zero_poly, ring.variable(0)]
    rep = is_one_generic_2xg(row1, row2, ring)
    assert not rep.one_generic
    a, b = rep.witness
    assert a == F.zero and b == F.one


def test_one_generic_too_many_forms():
    ring = Ring(("x0",), F)
    x = ring.variable(0)
    rep = is_one_generic_2xg([x, x], [x, x], ring)
    assert not rep.one_generic


def test_section_vanishing_ideal_basis_vector():
    ideal = section_vanishing_ideal(4, {0: F.one}, F)
    gens = sorted(poly_str(g) for g in ideal.generators)
    assert gens == ["p01", "p02", "p03"]


def test_section_plus_pluecker_hilbert():
    """V(I_G + I_s) for w=4 is a linearly embedded projective plane."""
    from linsyz.rings import GradedIdeal
    big = pluecker_ideal(4, F)
    lin = section_vanishing_ideal(4, {0: F.one, 2: F(3)}, F)
    combined = GradedIdeal(big.ring, big.generators + lin.generators)
    for d in range(1, 5):
        assert hilbert_function(combined, d) == math.comb(d + 2, 2)


def grassmannian_syzygy(strand, p=1):
    """First basis-vector combination of rank p+3, if any."""
    dim = strand.dim(p)
    for i in range(dim):
        for j in range(i + 1, dim):
            f = Syzygy(strand, p, {i: F.one, j: F.one}, label="e%d+e%d" % (i, j))
            if involved(f).rank == p + 3:
                return f
    raise AssertionError("no grassmannian syzygy found")


def test_h0_injectivity_rnc4():
    strand = compute_strand(rnc_ideal(4, F))
    f = grassmannian_syzygy(strand)
    assert classify(f) == "grassmannian"
    rep = h0_injectivity_check(f, seed=11)
    assert rep.passed
    assert rep.w == 5


def test_h0_injectivity_rejects_non_grassmannian():
    strand = compute_strand(rnc_ideal(3, F))
    with pytest.raises(ValueError):
        h0_injectivity_check(strand.syzygy(1, 0))
