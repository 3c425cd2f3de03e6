"""Exact fully interlacing matrices of polynomials and truncated power series."""
from .errors import *  # noqa: F401,F403
from .series import (Series, aesw_series, add, coeff, derivative, mul, scale, shift,
                     substitute_power, veronese_section)
from .tp import DEFAULT_ORDER, RatMatrix, TpVerdict, Witness, det_exact, is_tp, minor
from .windows import (SeriesMatrix, WindowSpec, flip_rat_window, flip_series_matrix,
                      hurwitz_window, lace_entry, lace_window, series_matrix_product,
                      toeplitz_window, veronese_matrix, veronese_matrix_flip)
from .roots import RootIsolation, isolate_real_roots
from .interlace import (interlaces_roots, interlaces_tp, is_aesw_poly, is_fully_interlacing,
                        is_hurwitz_window, is_pairwise_interlacing, is_real_rooted)
from .subdivision import (HFamily, check_prop_app, check_strong_interlacing, esd2_family,
                          esd2_h, esd2_theta, theta)

__version__ = "0.1.0"
