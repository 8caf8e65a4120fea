"""Exact linear algebra for linear strands, syzygy schemes and generic
syzygy ideals of quadric-generated graded ideals."""

from .linalg import GF, QQ, Field, Mat, Subspace
from .rings import (GradedIdeal, Poly, Ring, dim_degree_estimate,
                    hilbert_function, parse_ideal_file, parse_poly, poly_str,
                    saturation_check)
from .strand import LinearStrand, Syzygy, compute_strand, koszul_betti
from .syzygy import chain_lift, classify, involved, syzygy_ideal
from .gensyz import (build_phi, decomposition_check_k0, decomposition_check_k1,
                     generic_syzygy_ideal, grassmannian_union_check,
                     h0_injectivity_check, is_one_generic_2xg, pluecker_ideal,
                     section_vanishing_ideal, segre_ideal, subkoszul_check,
                     verify_cone)
from .corpus import corpus, find_ideal, rnc_ideal
from .verify import run_verify_all

__version__ = "0.1.0"
