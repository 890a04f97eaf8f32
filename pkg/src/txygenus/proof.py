"""Executable form of the Vandermonde argument bounding the number of fixed points.

Given fixed-point data, the chi^l equations for ``l <= k = floor(n/2)`` are
rewritten through Newton's identities as a linear system whose coefficient
matrix has rows ``sigma_{1,i}^l``.  This module rebuilds every object of that
argument concretely (the right-hand side ``b``, the coefficients ``u`` of the
dependency among the reduced right-hand sides, the cyclic equalities) and
checks the identities that connect them exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import LaurentPoly, QuotientFn, RationalFn
from .fixedpoints import FixedPointData, reduce
from .genus import InternalFault, chi_vector_combinatorial, chi_vector_series, rigidity_check
from .symmetric import eval_power_sum, eval_sigma, newton_F

__all__ = [
    "PreconditionError",
    "ProofContext",
    "BVector",
    "UCoefficients",
    "build_context",
    "eval_sigma",
    "eval_power_sum",
    "newton_F",
    "cal_F",
    "row_sum",
    "b_vector",
    "u_coefficients",
    "verify_diagonal_system",
    "verify_partial_sums",
    "compatibility_residuals",
    "cyclic_defects",
    "vandermonde_det",
    "vandermonde_rank",
    "certify",
]


class PreconditionError(ValueError):
    """The construction does not apply to the given input."""


@dataclass(frozen=True)
class ProofContext:
    data: FixedPointData
    classes: tuple[tuple[int, ...], ...]
    multiplicities: tuple[int, ...]
    k: int
    sigma1: tuple[LaurentPoly, ...]

    @property
    def m(self) -> int:
        return len(self.classes)

    def f(self, i: int) -> RationalFn:
        """``1 / prod_j (1 - q^w_ij)`` for class ``i`` (0-based)."""
        return RationalFn(1, self.classes[i])


def build_context(d: FixedPointData, order: Sequence[int] | None = None) -> ProofContext:
    """Reduce the data and merge equal weight multisets into signed multiplicities.

    ``order`` optionally permutes the classes (indices into canonical order).
    """
    r = reduce(d)
    mult: dict[tuple[int, ...], int] = {}
    for p in r.points:
        mult[p.weights] = mult.get(p.weights, 0) + p.sign
    classes = [ws for ws, c in mult.items() if c]
    if order is not None:
        if sorted(order) != list(range(len(classes))):
            raise ValueError("order must be a permutation of the class indices")
        classes = [classes[i] for i in order]
    sigma1 = tuple(eval_sigma(ws, 1) for ws in classes)
    if len(set(sigma1)) != len(sigma1):
        raise InternalFault("distinct weight multisets produced equal sigma_1")
    return ProofContext(
        data=r,
        classes=tuple(classes),
        multiplicities=tuple(mult[ws] for ws in classes),
        k=d.half_dim // 2,
        sigma1=sigma1,
    )


def cal_F(ctx: ProofContext, l: int) -> RationalFn:
    """``sum_i eps_i F_l(q^w_i) f_i(q)`` with merged multiplicities."""
    if l < 2:
        raise ValueError(f"F_l is defined for l >= 2, got {l}")
    total = RationalFn(0)
    for i, ws in enumerate(ctx.classes):
        total = total + RationalFn(newton_F(ws, l) * ctx.multiplicities[i], ws)
    return total


def row_sum(ctx: ProofContext, l: int) -> RationalFn:
    """Left side of row ``l``: ``sum_i eps_i sigma_{1,i}^l f_i(q)``."""
    total = RationalFn(0)
    for i, ws in enumerate(ctx.classes):
        total = total + RationalFn(ctx.sigma1[i] ** l * ctx.multiplicities[i], ws)
    return total


@dataclass(frozen=True)
class BVector:
    entries: tuple[RationalFn, ...]
    chi: tuple[int, ...]
    rows_verified: bool

    def __getitem__(self, l: int) -> RationalFn:
        return self.entries[l]

    def __len__(self) -> int:
        return len(self.entries)


def b_vector(ctx: ProofContext, chi: Sequence[int] | None = None) -> BVector:
    """Right-hand side ``b_0..b_k`` of the Newton-reduced system.

    With ``chi=None`` the data must be rigid; chi comes from the series route
    and every row identity ``row_sum(l) == b_l`` is verified exactly.  A
    caller-supplied ``chi`` builds the hypothetical vector used when probing
    data that is not rigid; rows are then not checked.
    """
    hypothetical = chi is not None
    if chi is None:
        chi = chi_vector_series(ctx.data)
    chi = tuple(chi)
    if len(chi) != ctx.data.half_dim + 1:
        raise ValueError("chi must have half_dim + 1 entries")
    entries = []
    for l in range(ctx.k + 1):
        if l < 2:
            entries.append(RationalFn(chi[l]))
        else:
            entries.append((RationalFn(l * chi[l]) - cal_F(ctx, l)) * (-1) ** l)
    if not hypothetical:
        for l, b in enumerate(entries):
            if not row_sum(ctx, l).equivalent(b):
                raise InternalFault(f"row identity {l} of the reduced system failed")
    return BVector(tuple(entries), chi, rows_verified=not hypothetical)


@dataclass(frozen=True)
class UCoefficients:
    entries: tuple[QuotientFn, ...]

    def __getitem__(self, l: int) -> QuotientFn:
        return self.entries[l]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _check_nodes(sigma1: Sequence[LaurentPoly]) -> None:
    if len(set(sigma1)) != len(sigma1):
        raise PreconditionError("sigma_1 entries must be pairwise distinct")
    if any(s == 1 for s in sigma1):
        raise PreconditionError("a sigma_1 entry equals 1; the closed forms would divide by zero")


def u_coefficients(sigma1: Sequence[LaurentPoly]) -> UCoefficients:
    """Closed-form solution of ``W(q) u = 0`` normalised by ``u_0 = 1``."""
    m = len(sigma1)
    if m < 2:
        raise PreconditionError("need at least two sigma_1 entries")
    _check_nodes(sigma1)
    s = [None] + list(sigma1)  # 1-based like the rows of W
    one = LaurentPoly.one()
    u = [QuotientFn(1)]
    u.append(QuotientFn(s[1] - s[2], s[2] - one))
    for j in range(2, m):
        u.append(QuotientFn((s[1] - one) * (s[j] - s[j + 1]), (s[j] - one) * (s[j + 1] - one)))
    u.append(QuotientFn(s[m] * (one - s[1]), s[m] - one))
    return UCoefficients(tuple(u))


def _suffix_prefix(u: Sequence[QuotientFn]):
    prefix = [QuotientFn(0)]
    for x in u:
        prefix.append(prefix[-1] + x)
    total = prefix[-1]
    return prefix, total


def verify_diagonal_system(sigma1: Sequence[LaurentPoly], u: Sequence[QuotientFn]) -> bool:
    """Rows of ``W(q) u``: ``sigma_{1,i}(u_0+..+u_{i-1}) + (u_i+..+u_m) == 0`` for all i."""
    m = len(sigma1)
    if len(u) != m + 1:
        raise ValueError(f"expected {m + 1} coefficients, got {len(u)}")
    prefix, total = _suffix_prefix(list(u))
    for i in range(1, m + 1):
        row = prefix[i] * sigma1[i - 1] + (total - prefix[i])
        if not row.is_zero():
            return False
    return True


def verify_partial_sums(sigma1: Sequence[LaurentPoly], u: Sequence[QuotientFn]) -> bool:
    """``u_1+..+u_j == (s_1 - s_{j+1})/(s_{j+1} - 1)`` for j < m and ``u_1+..+u_m == -s_1``."""
    m = len(sigma1)
    one = LaurentPoly.one()
    acc = QuotientFn(0)
    for j in range(1, m + 1):
        acc = acc + u[j]
        if j < m:
            target = QuotientFn(sigma1[0] - sigma1[j], sigma1[j] - one)
        else:
            target = QuotientFn(-sigma1[0])
        if acc != target:
            return False
    return True


def compatibility_residuals(ctx: ProofContext, b: BVector, u: UCoefficients | None = None) -> list[tuple[int, bool]]:
    """Check the two compatibility computations for the system ``(sum_l u_l V_l) x = 0``.

    For each row ``l`` with ``1 <= l <= min(m, k)`` the off-diagonal part of
    the row, ``sum_{i != l} (sigma_{1,i}^l S_<l + sigma_{1,i}^{l-1} S_>=l) eps_i f_i``,
    is compared with ``(s_1 - 1)/(s_l - 1) * (b_l - s_l b_{l-1})``.  These are
    the closing steps of the argument; they presuppose the row identities, so
    ``b`` must be verified.  Returns ``(l, holds)`` pairs.
    """
    if not b.rows_verified:
        raise PreconditionError("compatibility needs row-verified b (rigid data)")
    if u is None:
        u = u_coefficients(ctx.sigma1)
    s = ctx.sigma1
    m = ctx.m
    one = LaurentPoly.one()
    x = [ctx.f(i) * ctx.multiplicities[i] for i in range(m)]
    prefix, total = _suffix_prefix(list(u))
    out = []
    for l in range(1, min(m, ctx.k) + 1):
        lower, upper = prefix[l], total - prefix[l]
        lhs = QuotientFn(0)
        for i in range(m):
            if i == l - 1:
                continue
            coeff = lower * s[i] ** l + upper * s[i] ** (l - 1)
            lhs = lhs + coeff * x[i]
        defect = QuotientFn._coerce(b[l]) - QuotientFn._coerce(b[l - 1]) * s[l - 1]
        rhs = QuotientFn(s[0] - one, s[l - 1] - one) * defect
        out.append((l, lhs == rhs))
    return out


def cyclic_defects(ctx: ProofContext, b: BVector, force: bool = False) -> list[RationalFn]:
    """``d_l = b_l - sigma_{1,l} b_{l-1}`` for ``l = 1..m``.

    Only defined when ``m <= k``; with ``force`` the defects are produced for
    ``l <= min(m, k)`` regardless.
    """
    m = ctx.m
    if m > ctx.k and not force:
        raise PreconditionError(f"m = {m} exceeds k = {ctx.k}; the cyclic equalities do not apply")
    top = min(m, ctx.k, len(b) - 1)
    return [b[l] - b[l - 1] * ctx.sigma1[l - 1] for l in range(1, top + 1)]


def vandermonde_det(nodes: Sequence[LaurentPoly]) -> LaurentPoly:
    """``prod_{i<j} (node_j - node_i)``."""
    det = LaurentPoly.one()
    for i, j in combinations(range(len(nodes)), 2):
        det = det * (nodes[j] - nodes[i])
    return det


def vandermonde_rank(sigma1: Sequence[LaurentPoly], k: int) -> int:
    """Rank of the ``(k+1) x m`` matrix with rows ``sigma_{1,i}^l``, ``l = 0..k``.

    The rank is certified by a nonvanishing leading Vandermonde minor on a
    maximal set of distinct columns.
    """
    distinct: list[LaurentPoly] = []
    for s in sigma1:
        if s not in distinct:
            distinct.append(s)
    r = min(len(distinct), k + 1)
    if r and vandermonde_det(distinct[:r]).is_zero():
        raise InternalFault("Vandermonde minor on distinct nodes vanished")
    return r


def certify(d: FixedPointData, force: bool = False) -> dict:
    """Run the cyclic-equality argument on concrete data and report the outcome.

    Non-rigid data is probed with the chi^l from the q -> 0 limit, and the
    certificate says so.
    """
    ctx = build_context(d)
    if ctx.m > ctx.k and not force:
        raise PreconditionError(
            f"after reduction m = {ctx.m} exceeds k = {ctx.k}; nothing to certify (use force)"
        )
    rigid = rigidity_check(ctx.data).rigid
    if rigid:
        b = b_vector(ctx)
    else:
        b = b_vector(ctx, chi=chi_vector_combinatorial(ctx.data)[0])
    defects = cyclic_defects(ctx, b, force=True)
    statuses = [{"l": l, "status": "zero" if dl.is_zero() else "nonzero"} for l, dl in enumerate(defects, 1)]
    failing = next((s["l"] for s in statuses if s["status"] == "nonzero"), None)
    # with every equality holding, b_0 = 0 propagates to b_0..b_m = 0, and the
    # invertible Vandermonde block then forces x = 0 on nonempty data
    zero_rhs = failing is None and all(b[l].is_zero() for l in range(min(ctx.m, len(b) - 1) + 1))
    if ctx.m == 0:
        verdict = "bounding: the fixed-point data cancels completely"
    elif failing is not None:
        verdict = f"impossible: cyclic equality b_{failing} = sigma_1,{failing} * b_{failing - 1} fails"
    elif zero_rhs:
        verdict = "impossible: b_0..b_m vanish, forcing x = 0 on nonempty data"
    else:
        verdict = "unresolved: every cyclic equality holds"
    return {
        "dataset_hash": d.digest(),
        "half_dim": d.half_dim,
        "k": ctx.k,
        "m": ctx.m,
        "rigid": rigid,
        "forced": bool(force and ctx.m > ctx.k),
        "chi": list(b.chi),
        "defects": statuses,
        "failing_index": failing,
        "zero_rhs": zero_rhs,
        "verdict": verdict,
    }
