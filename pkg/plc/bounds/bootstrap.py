import typing
from fractions import Fraction


__all__ = [
    "FIXED_POINT",
    "lemma8_exponent",
    "trivial_transfer",
    "bootstrap_step",
    "bootstrap_trace",
    "bootstrap_closed_form",
    "exponent_chain"
]


FIXED_POINT = Fraction(1, 10)


def lemma8_exponent(eps: Fraction) -> Fraction:
    r"""Exponent :math:`\alpha = (1 + 2\epsilon)/3` gained by the minimum degree from :math:`\delta_k \ge c n_k^\epsilon`"""
    return (1 + 2 * Fraction(eps)) / 3


def trivial_transfer(alpha: Fraction) -> Fraction:
    r"""Rewrites an exponent of :math:`n_{k-1}` as one of :math:`n_k` through :math:`n_k < n_{k-1}^4 / 8`"""
    return Fraction(alpha) / 4


def bootstrap_step(eps: Fraction) -> Fraction:
    """One round of the bootstrap: ``(1 + 2 eps) / 12``"""
    return trivial_transfer(lemma8_exponent(eps))


def bootstrap_trace(eps0: Fraction, iterations: int) -> typing.List[Fraction]:
    """``[eps0, eps1, ..., eps_iterations]`` in exact arithmetic; converges to 1/10 at rate 1/6"""
    eps0 = Fraction(eps0)
    if eps0 < 0:
        raise ValueError(f"eps0 must be nonnegative, got {eps0}")
    if iterations < 0:
        raise ValueError(f"iterations must be nonnegative, got {iterations}")
    trace = [eps0]
    for _ in range(iterations):
        trace.append(bootstrap_step(trace[-1]))
    return trace


def bootstrap_closed_form(j: int, eps0: Fraction = Fraction(0)) -> Fraction:
    return FIXED_POINT - (FIXED_POINT - Fraction(eps0)) * Fraction(1, 6) ** j


def exponent_chain(steps: int) -> typing.List[typing.Tuple[Fraction, Fraction]]:
    """
    ``(alpha_j, eps_{j+1})`` pairs starting from ``eps_0 = 0``: the degree exponent in terms of the previous stage's
    point count, then the same exponent in terms of the current one. The first two pairs are (1/3, 1/12) and
    (7/18, 7/72).
    """
    chain = []
    eps = Fraction(0)
    for _ in range(steps):
        alpha = lemma8_exponent(eps)
        eps = trivial_transfer(alpha)
        chain.append((alpha, eps))
    return chain
