"""Exact C-finite sequence toolkit.

Models sequences satisfying linear recurrences with constant coefficients,
guesses minimal recurrences from exact term data, and derives certified
rational generating functions for binomial convolutions. Every value crosses
the Python boundary as an exact rational string.
"""

from ._cfconv import (
    GuessResult,
    Identity,
    Sequence,
    binomial_convolution_terms,
    conv_order_bound,
    cross_convolution,
    guess,
    self_convolution,
    sequence_names,
    series,
)

__all__ = [
    "GuessResult",
    "Identity",
    "Sequence",
    "binomial_convolution_terms",
    "conv_order_bound",
    "cross_convolution",
    "guess",
    "self_convolution",
    "sequence_names",
    "series",
]
