"""Lazy exact real arithmetic on [0, 1] with redundant L/C/R digit streams."""

from .affine import AffineState, axbyc
from .basic_ops import add, half_sum, minus_half, mult2, one_minus, sub
from .conversions import (decimal_render, rat_to_stream, stream_of_cauchy,
                          stream_of_cut)
from .digits import (C, Digit, DyadicBounds, L, R, Stream, alpha, approx_lower,
                     bounds, cons, digits_to_str, from_prefix, lift_value, one,
                     take, zero)
from .series import (atan_inv, build_e_minus2, general_emit, mult, mult_a,
                     number_e_minus2, pi_over_4, series_body)

__version__ = "0.1.0"
