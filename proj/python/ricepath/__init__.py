"""Binomial transforms, Rice integrals, Laplace liftings and trie costs."""

from fractions import Fraction

from ._ricepath import *  # noqa: F401,F403
from ._ricepath import (
    __version__,
    _mean_exact,
    _mean_via_rice_pair,
    _pi_transform,
    _shift_table,
)


def _frac(values):
    return [Fraction(v) for v in values]


def pi_transform(values):
    """Exact Pi[f](n) = sum_k (-1)^k C(n,k) f(k) of a finite table."""
    return _frac(_pi_transform([str(Fraction(v)) for v in values]))


def shift_table(values, m):
    """T^m: f(n+m) / ((n+1)...(n+m))."""
    return _frac(_shift_table([str(Fraction(v)) for v in values], m))


def mean_exact(probs, toll, n_max):
    """Exact mean trie cost r(0..n_max) for a binary source."""
    return _frac(_mean_exact(probs, toll, n_max))


def mean_via_rice_pair(probs, toll, n):
    return Fraction(_mean_via_rice_pair(probs, toll, n))
