"""Exact antichain and ideal generating polynomials of finite graded posets.

The transfer engine assembles the antichain polynomial of a chain-poset
product from per-ideal partial polynomials over the ideal lattice; everything
downstream (gamma expansions, Sturm-based real-rootedness, interlacing,
Sperner and Peck analytics, the two-row tableau model) works in exact integer
or rational arithmetic.
"""

from .errors import (ExplosionError, NotAnIdealError, NotGradedError,
                     NotRankUnimodalError, PosetParseError, ZeroPolynomialError)
from .expressions import build, build_text, format_expr, parse_poset_expr
from .ideals import (IdealFamily, antichain_poly_direct, enumerate_antichains,
                     enumerate_ideals, ideal_poly_direct, ideals_poset,
                     max_elements)
from .polynomials import (GammaExpansion, GammaStatus, IntPoly,
                          even_index_extraction, gamma_expand,
                          is_gamma_nonnegative, is_gamma_positive,
                          one_plus_x_power)
from .posets import (Poset, chain, disjoint_union, double_tailed_diamond,
                     ordinal_sum, poset_from_hasse_text, product,
                     shifted_staircase, to_dot, unique_largest_rank_level)
from .roots import (CommonInterleaverResult, InterlaceVerdict,
                    InterleaverStatus, RootInterval, RootIsolation,
                    common_interleaver_check, interlaces, is_real_rooted,
                    isolate_roots, obreschkoff_combination_test, refine_root)
from .sperner import (ChainProfile, chain_profile, is_peck, is_rank_symmetric,
                      is_rank_unimodal, is_sperner, is_strongly_sperner,
                      max_antichain_size, max_k_antichains,
                      max_k_antichains_brute, max_k_chains,
                      peck_log_concavity_scan)
from .tableaux import count_fillings, f_direct, f_recursive, two_row_family
from .transfer import (StateVector, TransferMatrix, antichain_poly_k,
                       build_transfer, initial_vector, iter_antichain_polys,
                       per_ideal_polys, step, transfer_system,
                       two_row_ideal_polys)

__version__ = "0.1.0"
