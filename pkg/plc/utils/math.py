import math
from fractions import Fraction


def nchoosek(n: int, k: int) -> int:
    r"""
    Computes the mathematical combination exactly

    .. math::

      n \choose k

    Parameters
    ==========
    n: int
      Number of elements in the set

    k: int
      Number of items to select from the set

    Returns
    =======
    :math:`n \choose k` as an integer (zero when :math:`k > n`)
    """
    return math.comb(n, k)


def log4(x: int or float) -> float:
    """Base-4 logarithm; accepts integers of any size"""
    return math.log(x) / math.log(4)


def at_most_power_of_two(n: int, exponent: int) -> bool:
    """Exact test of ``n <= 2 ** exponent`` for ``n >= 1`` without building the power"""
    return (n - 1).bit_length() <= exponent


def below_tower_of_four(n: int, k: int) -> bool:
    r"""Exact test of :math:`n \le 4^{4^k}` (that is :math:`n \le 2^{2 \cdot 4^k}`)"""
    return at_most_power_of_two(n, 2 * 4 ** k)


def fraction_at_least_sqrt_scaled(value: Fraction, c: Fraction, scale_sq: Fraction) -> bool:
    r"""
    Exact test of :math:`value \ge c \sqrt{scale\_sq}` for nonnegative ``value`` and ``c``, done by comparing squares
    """
    if value < 0 or c < 0 or scale_sq < 0:
        raise ValueError("fraction_at_least_sqrt_scaled requires nonnegative arguments")
    return value * value >= c * c * scale_sq
