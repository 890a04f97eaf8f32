"""Localization of the equivariant T_{x,y}-genus and the classical genera it encodes."""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BivarPoly, QXYPoly, RationalFn, rf_is_constant, rf_series
from .fixedpoints import FixedPoint, FixedPointData, split_weights
from .symmetric import eval_sigma

__all__ = [
    "NotRigidError",
    "InternalFault",
    "CombinatorialCount",
    "GenusReport",
    "RigidityResult",
    "point_term",
    "equivariant_txy",
    "txy_genus",
    "rigidity_check",
    "chi_vector_series",
    "chi_vector_combinatorial",
    "chi_to_txy",
    "genus_report",
    "default_series_order",
]


class NotRigidError(ValueError):
    """The localization sum depends on q, so the chi^l are not defined."""


class InternalFault(RuntimeError):
    """Two routes that must agree did not; indicates a bug, never bad input."""


def point_term(p: FixedPoint) -> RationalFn:
    """``prod_j (x + y q^w_j) / (1 - q^w_j)`` for one fixed point, unsigned."""
    num = QXYPoly.one()
    for w in p.weights:
        num = num * QXYPoly._raw({(0, 1, 0): 1, (w, 0, 1): 1})
    return RationalFn(num, p.weights)


def equivariant_txy(d: FixedPointData) -> RationalFn:
    total = RationalFn(0)
    for p in d.points:
        term = point_term(p)
        total = total + (term if p.sign > 0 else -term)
    return total


def txy_genus(d: FixedPointData, at_infinity: bool = False) -> BivarPoly:
    """Limit of the localization sum as q -> 0 (or q -> infinity)."""
    terms: dict = {}
    for p in d.points:
        s = split_weights(p)
        xdeg, ydeg = (s.neg_count, s.pos_count) if at_infinity else (s.pos_count, s.neg_count)
        terms[(xdeg, ydeg)] = terms.get((xdeg, ydeg), 0) + p.sign * (-1) ** ydeg
    return BivarPoly(terms)


@dataclass(frozen=True)
class RigidityResult:
    rigid: bool
    constant: BivarPoly | None

    def __iter__(self):
        return iter((self.rigid, self.constant))


def rigidity_check(d: FixedPointData) -> RigidityResult:
    candidate = txy_genus(d, at_infinity=False)
    const = rf_is_constant(equivariant_txy(d), candidate)
    return RigidityResult(const is not None, const)


def default_series_order(d: FixedPointData) -> int:
    # past every pole shift q^(-sum of negative weights) at any fixed point
    return max((sum(abs(w) for w in p.weights) for p in d.points), default=0) + 1


def chi_vector_series(d: FixedPointData, order: int | None = None, check_rigid: bool = True) -> list[int]:
    """chi^0..chi^n as constant terms of ``sum_i eps_i sigma_l(q^w_i) / prod(1 - q^w_ij)``.

    Raises :class:`NotRigidError` on data whose genus depends on q.
    """
    if check_rigid and not rigidity_check(d).rigid:
        raise NotRigidError("localization sum is not constant in q; chi^l undefined")
    if order is None:
        order = default_series_order(d)
    n = d.half_dim
    chi = []
    for l in range(n + 1):
        total = None
        for p in d.points:
            term = rf_series(RationalFn(eval_sigma(p.weights, l), p.weights), order) * p.sign
            total = term if total is None else total + term
        if total is None:
            chi.append(0)
            continue
        stray = [e for e in total.nonzero_exponents() if e != 0]
        if stray:
            raise InternalFault(f"chi^{l}: nonconstant coefficients at q^{stray} survive on rigid data")
        c = total[0]
        if not c.is_constant():
            raise InternalFault(f"chi^{l}: constant term {c} is not an integer")
        chi.append(c.constant_value())
    return chi


@dataclass(frozen=True)
class CombinatorialCount:
    n_plus: tuple[int, ...]
    n_minus: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.n_plus) + sum(self.n_minus)


def chi_vector_combinatorial(d: FixedPointData) -> tuple[list[int], CombinatorialCount]:
    """chi^l = (-1)^l (n_l^+ - n_l^-), counting points by their number of negative weights."""
    n = d.half_dim
    plus = [0] * (n + 1)
    minus = [0] * (n + 1)
    for p in d.points:
        l = p.neg_count
        if p.sign > 0:
            plus[l] += 1
        else:
            minus[l] += 1
    chi = [(-1) ** l * (plus[l] - minus[l]) for l in range(n + 1)]
    return chi, CombinatorialCount(tuple(plus), tuple(minus))


def chi_to_txy(chi: list[int]) -> BivarPoly:
    n = len(chi) - 1
    return BivarPoly({(n - l, l): c for l, c in enumerate(chi)})


@dataclass(frozen=True)
class GenusReport:
    half_dim: int
    chi: tuple[int, ...]
    txy: BivarPoly
    signature: int
    todd: int
    top_chern: int
    euler: int
    rigid: bool
    counts: CombinatorialCount = field(repr=False, compare=False, default=None)

    @property
    def chi_y(self) -> dict[int, int]:
        return {l: c for l, c in enumerate(self.chi) if c}

    def to_json(self) -> dict:
        return {
            "half_dim": self.half_dim,
            "chi": list(self.chi),
            "txy": self.txy.to_json(),
            "signature": self.signature,
            "todd": self.todd,
            "top_chern": self.top_chern,
            "euler": self.euler,
            "rigid": self.rigid,
            "n_plus": list(self.counts.n_plus),
            "n_minus": list(self.counts.n_minus),
        }


def genus_report(d: FixedPointData) -> GenusReport:
    """Assemble all derived genera.

    On rigid data chi comes from the series route and is cross-checked
    against the fixed-point count; on non-rigid data only the q -> 0 limits
    are reported.
    """
    rigid = rigidity_check(d).rigid
    comb, counts = chi_vector_combinatorial(d)
    if rigid:
        chi = chi_vector_series(d, check_rigid=False)
        if chi != comb:
            raise InternalFault(f"series route {chi} disagrees with fixed-point count {comb}")
    else:
        chi = comb
    euler = d.m
    top_chern = sum((-1) ** l * c for l, c in enumerate(chi))
    if euler != top_chern + 2 * sum(counts.n_minus) or euler + top_chern != 2 * sum(counts.n_plus):
        raise InternalFault("Euler characteristic / top Chern number identities failed")
    return GenusReport(
        half_dim=d.half_dim,
        chi=tuple(chi),
        txy=chi_to_txy(chi),
        signature=sum(chi),
        todd=chi[0],
        top_chern=top_chern,
        euler=euler,
        rigid=rigid,
        counts=counts,
    )
