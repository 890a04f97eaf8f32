"""Symmetric functions of ``q^w_1, ..., q^w_n`` as Laurent polynomials."""
from __future__ import annotations

from typing import Sequence

from .algebra import LaurentPoly

__all__ = ["eval_sigma", "eval_power_sum", "newton_F", "elementary_all"]


def elementary_all(weights: Sequence[int]) -> list[LaurentPoly]:
    """``[sigma_0, ..., sigma_n]`` at ``(q^w_1, ..., q^w_n)``."""
    e = [LaurentPoly.one()] + [LaurentPoly.zero()] * len(weights)
    for i, w in enumerate(weights, start=1):
        for l in range(i, 0, -1):
            e[l] = e[l] + e[l - 1].shift(w)
    return e


def eval_sigma(weights: Sequence[int], l: int) -> LaurentPoly:
    if not 0 <= l <= len(weights):
        raise ValueError(f"l must lie in [0, {len(weights)}], got {l}")
    return elementary_all(weights)[l]


def eval_power_sum(weights: Sequence[int], l: int) -> LaurentPoly:
    if l < 1:
        raise ValueError(f"power sums need l >= 1, got {l}")
    terms: dict[int, int] = {}
    for w in weights:
        terms[l * w] = terms.get(l * w, 0) + 1
    return LaurentPoly(terms)


def newton_F(weights: Sequence[int], l: int) -> LaurentPoly:
    """The remainder ``F_l`` in ``l*sigma_l = (-1)^l sigma_1^l + F_l``."""
    if l < 2:
        raise ValueError(f"F_l is defined for l >= 2, got {l}")
    e = elementary_all(weights)
    sigma_l = e[l] if l < len(e) else LaurentPoly.zero()
    return sigma_l * l - e[1] ** l * (-1) ** l
