"""Exact arithmetic over q-Laurent polynomials, bivariate polynomials in x, y,
truncated q-series and rational functions with factored denominators.

Everything here is immutable and uses Python integers, so coefficients never
overflow.  Three sparse polynomial carriers share one implementation:

* :class:`LaurentPoly`  -- ``Z[q, q^-1]``, keys are integer exponents
* :class:`BivarPoly`    -- ``Z[x, y]``, keys are ``(x_deg, y_deg)``
* :class:`QXYPoly`      -- ``Z[x, y][q, q^-1]``, keys are ``(q_exp, x_deg, y_deg)``

On top of those, :class:`RationalFn` keeps its denominator as a multiset of
weights standing for ``prod(1 - q^w)`` and :class:`QuotientFn` is a plain
numerator/denominator pair for quotients that are not of that shape.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping

__all__ = [
    "LaurentPoly",
    "BivarPoly",
    "QXYPoly",
    "QSeriesElem",
    "RationalFn",
    "QuotientFn",
    "geometric_expand",
    "lp_mul",
    "lp_add",
    "rf_add",
    "rf_is_constant",
    "rf_series",
    "X",
    "Y",
    "Q",
]


class _SparsePoly:
    """Shared machinery: a frozen ``{key: nonzero int}`` map."""

    __slots__ = ("_terms", "_hash")
    _one_key: object = None

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                key = self._check_key(key)
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficients must be integers, got {coeff!r}")
                acc[key] = acc.get(key, 0) + coeff
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _check_key(cls, key):
        return key

    @staticmethod
    def _add_keys(a, b):
        raise NotImplementedError

    @classmethod
    def constant(cls, c: int):
        return cls._raw({cls._one_key: c} if c else {})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls.constant(1)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return self.constant(other)
        return NotImplemented

    # -- container protocol -------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {self._one_key}

    def constant_value(self) -> int:
        return self._terms.get(self._one_key, 0)

    # -- ring operations ----------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.zero()
            return self._raw({k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        add_keys = self._add_keys
        out: dict = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = add_keys(ka, kb)
                out[k] = out.get(k, 0) + ca * cb
        return self._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


class LaurentPoly(_SparsePoly):
    """Laurent polynomial in ``q`` with integer coefficients."""

    __slots__ = ()
    _one_key = 0

    @classmethod
    def _check_key(cls, key):
        if not isinstance(key, int):
            raise TypeError(f"exponent must be an integer, got {key!r}")
        return key

    @staticmethod
    def _add_keys(a, b):
        return a + b

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    def low(self) -> int:
        return min(self._terms)

    def high(self) -> int:
        return max(self._terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return self._raw({e + k: c for e, c in self._terms.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """Replace ``q`` by ``1/q``."""
        return self._raw({-e: c for e, c in self._terms.items()})

    def __str__(self):
        return _format(self._terms, _fmt_q)

    def __repr__(self):
        return f"LaurentPoly({self})"


class BivarPoly(_SparsePoly):
    """Polynomial in ``x`` and ``y`` with integer coefficients."""

    __slots__ = ()
    _one_key = (0, 0)

    @classmethod
    def _check_key(cls, key):
        i, j = key
        if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
            raise ValueError(f"bivariate exponents must be nonnegative integers, got {key!r}")
        return (i, j)

    @staticmethod
    def _add_keys(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BivarPoly":
        return cls({(i, j): coeff})

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    def to_json(self) -> list:
        """``[[x_deg, y_deg, "coeff"], ...]`` sorted by monomial."""
        return [[i, j, str(c)] for (i, j), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> "BivarPoly":
        return cls({(int(i), int(j)): int(c) for i, j, c in data})

    def __str__(self):
        return _format(self._terms, _fmt_xy, key=lambda k: (-k[0], k[1]))

    def __repr__(self):
        return f"BivarPoly({self})"


class QXYPoly(_SparsePoly):
    """Laurent polynomial in ``q`` whose coefficients lie in ``Z[x, y]``."""

    __slots__ = ()
    _one_key = (0, 0, 0)

    @classmethod
    def _check_key(cls, key):
        e, i, j = key
        if i < 0 or j < 0:
            raise ValueError(f"x/y exponents must be nonnegative, got {key!r}")
        return (e, i, j)

    @staticmethod
    def _add_keys(a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2])

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return QXYPoly.from_laurent(other)
        if isinstance(other, BivarPoly):
            return QXYPoly.from_bivar(other)
        return super()._coerce(other)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "QXYPoly":
        return cls._raw({(e, 0, 0): c for e, c in p.items()})

    @classmethod
    def from_bivar(cls, p: BivarPoly) -> "QXYPoly":
        return cls._raw({(0, i, j): c for (i, j), c in p.items()})

    def q_exponents(self) -> set[int]:
        return {e for e, _, _ in self._terms}

    def coeff_of_q(self, e: int) -> BivarPoly:
        return BivarPoly._raw({(i, j): c for (ee, i, j), c in self._terms.items() if ee == e})

    def by_q(self) -> dict[int, BivarPoly]:
        out: dict[int, dict] = {}
        for (e, i, j), c in self._terms.items():
            out.setdefault(e, {})[(i, j)] = c
        return {e: BivarPoly._raw(t) for e, t in out.items()}

    def is_q_free(self) -> bool:
        return all(e == 0 for e, _, _ in self._terms)

    def __str__(self):
        return _format(self._terms, _fmt_qxy)

    def __repr__(self):
        return f"QXYPoly({self})"


X = BivarPoly.monomial(1, 0)
Y = BivarPoly.monomial(0, 1)
Q = LaurentPoly.monomial(1)


# -- pretty printing ---------------------------------------------------------

def _pow(name, e):
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{e}" if e > 0 else f"{name}^({e})"


def _fmt_q(k):
    return _pow("q", k)


def _fmt_xy(k):
    return "*".join(s for s in (_pow("x", k[0]), _pow("y", k[1])) if s)


def _fmt_qxy(k):
    return "*".join(s for s in (_pow("x", k[1]), _pow("y", k[2]), _pow("q", k[0])) if s)


def _format(terms, fmt, key=None) -> str:
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms, key=key):
        c = terms[k]
        mono = fmt(k)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def one_minus_q_pow(w: int) -> LaurentPoly:
    if w == 0:
        raise ValueError("weight must be nonzero")
    return LaurentPoly._raw({0: 1, w: -1})


def expand_denominator(weights: Iterable[int]) -> LaurentPoly:
    """``prod(1 - q^w)`` over the given weights."""
    out = LaurentPoly.one()
    for w in weights:
        out = out * one_minus_q_pow(w)
    return out


# -- truncated q-series ------------------------------------------------------

class QSeriesElem:
    """Truncated q-series ``sum_{e=low}^{order} c_e q^e`` with ``c_e`` in ``Z[x, y]``.

    Coefficients at exponents above ``order`` are unknown, not zero.
    """

    __slots__ = ("low", "order", "coeffs")

    def __init__(self, low: int, order: int, coeffs: Iterable[BivarPoly | int]):
        coeffs = tuple(c if isinstance(c, BivarPoly) else BivarPoly.constant(c) for c in coeffs)
        if order < low - 1:
            raise ValueError("order must be at least low - 1")
        if len(coeffs) != order - low + 1:
            raise ValueError("need exactly order - low + 1 coefficients")
        self.low = low
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, p: QXYPoly | LaurentPoly | BivarPoly | int, order: int) -> "QSeriesElem":
        """An exact polynomial viewed as a series known up to ``order``."""
        if isinstance(p, int):
            p = BivarPoly.constant(p)
        if isinstance(p, BivarPoly):
            p = QXYPoly.from_bivar(p)
        elif isinstance(p, LaurentPoly):
            p = QXYPoly.from_laurent(p)
        by_q = p.by_q()
        low = min(by_q) if by_q else 0
        low = min(low, order + 1)
        return cls(low, order, [by_q.get(e, BivarPoly.zero()) for e in range(low, order + 1)])

    def __getitem__(self, e: int) -> BivarPoly:
        if e > self.order:
            raise IndexError(f"exponent {e} lies past the truncation order {self.order}")
        if e < self.low:
            return BivarPoly.zero()
        return self.coeffs[e - self.low]

    def nonzero_exponents(self) -> list[int]:
        return [self.low + i for i, c in enumerate(self.coeffs) if c]

    def __add__(self, other: "QSeriesElem") -> "QSeriesElem":
        order = min(self.order, other.order)
        low = min(self.low, other.low)
        return QSeriesElem(low, order, [self[e] + other[e] for e in range(low, order + 1)])

    def __neg__(self):
        return QSeriesElem(self.low, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "QSeriesElem":
        if isinstance(other, (int, BivarPoly)):
            return QSeriesElem(self.low, self.order, [c * other for c in self.coeffs])
        # exact part of the product stops where either factor's unknown tail begins
        order = min(self.order + other.low, other.order + self.low)
        low = self.low + other.low
        if order < low:
            return QSeriesElem(low, low - 1, [])
        out = [BivarPoly.zero()] * (order - low + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ea = self.low + i
            for j, b in enumerate(other.coeffs):
                e = ea + other.low + j
                if e > order:
                    break
                if b:
                    out[e - low] = out[e - low] + a * b
        return QSeriesElem(low, order, out)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "QSeriesElem":
        if order > self.order:
            raise ValueError("cannot extend a series past its truncation order")
        order = max(order, self.low - 1)
        return QSeriesElem(self.low, order, self.coeffs[: order - self.low + 1])

    def __eq__(self, other):
        if not isinstance(other, QSeriesElem):
            return NotImplemented
        if self.order != other.order:
            return False
        low = min(self.low, other.low)
        return all(self[e] == other[e] for e in range(low, self.order + 1))

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*q^{self.low + i}" for i, c in enumerate(self.coeffs) if c) or "0"
        return f"QSeriesElem({body} + O(q^{self.order + 1}))"


def geometric_expand(w: int, order: int) -> QSeriesElem:
    """Expansion of ``1/(1 - q^w)`` around ``q = 0``, exact through ``q^order``."""
    if not isinstance(w, int) or w == 0:
        raise ValueError("weight must be a nonzero integer")
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [BivarPoly.zero()] * (order + 1)
    a = abs(w)
    one = BivarPoly.one()
    if w > 0:
        for e in range(0, order + 1, a):
            coeffs[e] = one
    else:
        # 1/(1 - q^-a) = -q^a / (1 - q^a)
        for e in range(a, order + 1, a):
            coeffs[e] = -one
    return QSeriesElem(0, order, coeffs)


# -- rational functions with factored denominators ---------------------------

class RationalFn:
    """``numerator / prod(1 - q^w)`` with the weights kept as a multiset.

    Negative weights are folded into the numerator on construction using
    ``1/(1 - q^-a) = -q^a/(1 - q^a)``, so the stored multiset is positive.
    Equality is equivalence of fractions, decided by cross-multiplication.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: QXYPoly | LaurentPoly | BivarPoly | int = 0, denominator: Iterable[int] = ()):
        num = _as_qxy(numerator)
        den: list[int] = []
        flips = 0
        shift = 0
        for w in denominator:
            if not isinstance(w, int) or w == 0:
                raise ValueError(f"denominator weights must be nonzero integers, got {w!r}")
            if w < 0:
                flips += 1
                shift -= w
                den.append(-w)
            else:
                den.append(w)
        if flips or shift:
            num = _shift_q(num, shift) * (-1) ** flips
        self.numerator = num
        self.denominator = tuple(sorted(den))

    @classmethod
    def _raw(cls, numerator: QXYPoly, denominator: tuple[int, ...]) -> "RationalFn":
        obj = cls.__new__(cls)
        obj.numerator = numerator
        obj.denominator = denominator
        return obj

    def expanded_denominator(self) -> LaurentPoly:
        return expand_denominator(self.denominator)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (int, LaurentPoly, BivarPoly, QXYPoly)):
            return RationalFn._raw(_as_qxy(other), ())
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b = Counter(self.denominator), Counter(other.denominator)
        common = a | b
        na = self.numerator * expand_denominator((common - a).elements())
        nb = other.numerator * expand_denominator((common - b).elements())
        return RationalFn._raw(na + nb, tuple(sorted(common.elements())))

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn._raw(
            self.numerator * other.numerator,
            tuple(sorted(self.denominator + other.denominator)),
        )

    __rmul__ = __mul__

    def equivalent(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        a, b = Counter(self.denominator), Counter(other.denominator)
        shared = a & b
        lhs = self.numerator * expand_denominator((b - shared).elements())
        rhs = other.numerator * expand_denominator((a - shared).elements())
        return lhs == rhs

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.equivalent(other)

    __hash__ = None

    def series(self, order: int) -> QSeriesElem:
        return rf_series(self, order)

    def constant_term_candidate(self) -> BivarPoly:
        """Coefficient of ``q^0`` in the expansion around ``q = 0``."""
        return rf_series(self, 0)[0]

    def to_quotient(self) -> "QuotientFn":
        return QuotientFn.from_factors(self.numerator, [one_minus_q_pow(w) for w in self.denominator])

    def __repr__(self):
        den = "*".join(f"(1 - q^{w})" for w in self.denominator) or "1"
        return f"RationalFn(({self.numerator}) / {den})"


def _as_qxy(p) -> QXYPoly:
    if isinstance(p, QXYPoly):
        return p
    if isinstance(p, LaurentPoly):
        return QXYPoly.from_laurent(p)
    if isinstance(p, BivarPoly):
        return QXYPoly.from_bivar(p)
    if isinstance(p, int):
        return QXYPoly.constant(p)
    raise TypeError(f"cannot use {type(p).__name__} as a q-polynomial")


def _shift_q(p: QXYPoly, k: int) -> QXYPoly:
    if not k:
        return p
    return QXYPoly._raw({(e + k, i, j): c for (e, i, j), c in p.items()})


def rf_add(a: RationalFn, b: RationalFn) -> RationalFn:
    return a + b


def rf_series(f: RationalFn, order: int) -> QSeriesElem:
    """Expansion of ``f`` around ``q = 0``, exact through ``q^order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = f.numerator
    if num.is_zero():
        return QSeriesElem(0, order, [BivarPoly.zero()] * (order + 1))
    low = min(num.q_exponents())
    # every stored weight is positive, so the denominator series start at q^0
    span = order - low
    if span < 0:
        return QSeriesElem(order + 1, order, [])
    series = QSeriesElem.from_poly(num, order)
    for w in f.denominator:
        series = series * geometric_expand(w, span)
    return series.truncate(order)


def rf_is_constant(f: RationalFn, candidate: BivarPoly | None = None) -> BivarPoly | None:
    """Return ``c`` if ``f`` equals the constant ``c`` in ``Z[x, y]``, else ``None``.

    Without a caller-supplied candidate the ``q -> 0`` limit is used; the
    answer is always confirmed by the exact identity ``num == c * den``.
    """
    if candidate is None:
        candidate = f.constant_term_candidate()
    expected = QXYPoly.from_bivar(candidate) * f.expanded_denominator()
    if f.numerator == expected:
        return candidate
    return None


# -- general quotients -------------------------------------------------------

class QuotientFn:
    """A quotient ``numerator / denominator`` of q-polynomials over ``Z[x, y]``.

    The denominator is kept as a multiset of polynomial factors, each scaled
    so its leading coefficient is positive.  Sums use the max-multiplicity
    union of the two factor multisets, so denominators stay small without
    ever taking a gcd.  Equality is decided by cross-multiplication after
    dropping shared factors.
    """

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator=0, denominator=1):
        den = _as_qxy(denominator)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        out = QuotientFn.from_factors(numerator, [den])
        self.numerator = out.numerator
        self.factors = out.factors

    @classmethod
    def _raw(cls, numerator: QXYPoly, factors: dict) -> "QuotientFn":
        out = object.__new__(cls)
        out.numerator = numerator
        out.factors = factors if not numerator.is_zero() else {}
        return out

    @classmethod
    def from_factors(cls, numerator, factors) -> "QuotientFn":
        """``numerator / prod(factors)``; each factor is normalised on the way in."""
        num = _as_qxy(numerator)
        fs: dict = {}
        for f in factors:
            f = _as_qxy(f)
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")
            f, sign = _normalise_factor(f)
            if sign < 0:
                num = -num
            if f != 1:
                fs[f] = fs.get(f, 0) + 1
        return cls._raw(num, fs)

    @property
    def denominator(self) -> QXYPoly:
        return _factor_product(self.factors)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, QuotientFn):
            return other
        if isinstance(other, RationalFn):
            return other.to_quotient()
        if isinstance(other, (int, LaurentPoly, BivarPoly, QXYPoly)):
            return cls._raw(_as_qxy(other), {})
        return NotImplemented

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        union = dict(self.factors)
        for f, k in other.factors.items():
            if union.get(f, 0) < k:
                union[f] = k
        num = self.numerator * _factor_product(_excess(union, self.factors))
        num = num + other.numerator * _factor_product(_excess(union, other.factors))
        return QuotientFn._raw(num, union)

    __radd__ = __add__

    def __neg__(self):
        return QuotientFn._raw(-self.numerator, self.factors)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        fs = dict(self.factors)
        for f, k in other.factors.items():
            fs[f] = fs.get(f, 0) + k
        return QuotientFn._raw(self.numerator * other.numerator, fs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero quotient")
        return self * QuotientFn.from_factors(other.denominator, [other.numerator])

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        lhs = self.numerator * _factor_product(_excess(other.factors, self.factors))
        rhs = other.numerator * _factor_product(_excess(self.factors, other.factors))
        return lhs == rhs

    __hash__ = None

    def __repr__(self):
        return f"QuotientFn(({self.numerator}) / ({self.denominator}))"


def _normalise_factor(f: QXYPoly) -> tuple[QXYPoly, int]:
    return (f, 1) if f.coeff(max(f)) > 0 else (-f, -1)


def _factor_product(factors: dict) -> QXYPoly:
    out = QXYPoly.one()
    for f, k in factors.items():
        out = out * f**k
    return out


def _excess(a: dict, b: dict) -> dict:
    """The part of factor multiset ``a`` not covered by ``b``."""
    return {f: k - b.get(f, 0) for f, k in a.items() if k > b.get(f, 0)}
