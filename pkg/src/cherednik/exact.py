"""Exact coefficient domains.

Scalars are either :class:`fractions.Fraction` (or plain ``int``) or
:class:`Cyclotomic` elements of Q(e) where e is a primitive l-th root of
unity. For l = 1, 2 the root of unity is rational and we never build a
:class:`Cyclotomic`; see :func:`root_of_unity`.

Also here: :class:`FormalParamPoly`, univariate polynomials in a formal
parameter (used to carry the k-dependence of singular vectors before
specializing), and text rendering/parsing of scalars.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import DomainError, IntegrityError

Rational = Fraction

# --------------------------------------------------------------------------
# dense univariate helpers over Q (coefficient lists, low degree first)


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    num = [Fraction(c) for c in num]
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise DomainError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        factor = num[shift + len(den) - 1] / lead
        quot[shift] = factor
        if factor:
            for i, d in enumerate(den):
                num[shift + i] -= factor * d
    return _trim(quot), _trim(num[: len(den) - 1])


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(l: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the l-th cyclotomic polynomial."""
    if l < 1:
        raise DomainError(f"cyclotomic order must be positive, got {l}")
    num = [Fraction(-1)] + [Fraction(0)] * (l - 1) + [Fraction(1)]
    for d in _divisors(l)[:-1]:
        num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
        assert not rem
    return tuple(int(c) for c in num)


class _FieldData:
    """Precomputed reduction data for Q[z]/Phi_l."""

    def __init__(self, l: int):
        self.order = l
        self.phi = cyclotomic_polynomial(l)
        self.degree = len(self.phi) - 1
        d = self.degree
        # reduce[j] = z^j mod Phi_l for 0 <= j <= 2d - 2
        table = []
        cur = [Fraction(0)] * d
        if d:
            cur[0] = Fraction(1)
        for j in range(max(2 * d - 1, 1)):
            table.append(tuple(cur))
            # multiply by z
            top = cur[-1] if d else Fraction(0)
            cur = [Fraction(0)] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.phi[i]
        self.reduce = table


@lru_cache(maxsize=None)
def _field(l: int) -> _FieldData:
    return _FieldData(l)


def totient(l: int) -> int:
    return _field(l).degree


class Cyclotomic:
    """An element of Q(e), e a primitive l-th root of unity.

    Stored as the residue modulo the l-th cyclotomic polynomial, so
    ``coeffs`` has exactly phi(l) rational entries. Instances are immutable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence = ()):
        data = _field(order)
        d = data.degree
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > d:
            acc = [Fraction(0)] * d
            for j, c in enumerate(coeffs):
                if c:
                    if j < len(data.reduce):
                        red = data.reduce[j]
                    else:
                        red = _reduce_power(order, j)
                    for i in range(d):
                        acc[i] += c * red[i]
            coeffs = acc
        else:
            coeffs = coeffs + [Fraction(0)] * (d - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- construction helpers
    @classmethod
    def gen(cls, order: int) -> "Cyclotomic":
        return cls(order, [0, 1])

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise DomainError(
                    f"cannot mix Q(e_{self.order}) and Q(e_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            d = len(self.coeffs)
            return Cyclotomic._raw(self.order, (Fraction(other),) + (Fraction(0),) * (d - 1))
        return None

    # -- predicates
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    # -- arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.order, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        data = _field(self.order)
        d = data.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for j in range(d, 2 * d - 1):
            c = prod[j]
            if c:
                red = data.reduce[j]
                for i in range(d):
                    out[i] += c * red[i]
        return Cyclotomic._raw(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise DomainError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return self._coerce(1 / self.coeffs[0])
        # extended Euclid: find u with self * u = 1 mod Phi
        phi = [Fraction(c) for c in _field(self.order).phi]
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since Phi is irreducible
        c = r1[0]
        return Cyclotomic(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DomainError("division by zero")
            return Cyclotomic._raw(self.order, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        acc = self._coerce(1)
        while exponent:
            if exponent & 1:
                acc = acc * base
            base = base * base
            exponent >>= 1
        return acc

    def __repr__(self):
        return f"Cyclotomic({self.order}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


@lru_cache(maxsize=None)
def _reduce_power(order: int, j: int) -> tuple:
    data = _field(order)
    j %= order
    if j < len(data.reduce):
        return data.reduce[j]
    return (Cyclotomic.gen(order) ** j).coeffs


Scalar = Union[int, Fraction, Cyclotomic]


@lru_cache(maxsize=None)
def root_of_unity(l: int, m: int = 1) -> Scalar:
    """e^m with e = exp(2 pi i / l), as an exact scalar.

    For l <= 2 this is a Fraction (1 or -1); otherwise a Cyclotomic.
    """
    m %= l
    if l == 1:
        return Fraction(1)
    if l == 2:
        return Fraction(-1) ** m
    return Cyclotomic(l, _reduce_power(l, m))


def qdiv(a: Scalar, b: Scalar) -> Scalar:
    """Exact a/b; never produces a float."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise DomainError("division by zero")
        return Fraction(a, b)
    if b == 0:
        raise DomainError("division by zero")
    return a / b


def inverse(a: Scalar) -> Scalar:
    return qdiv(1, a)


def cyclotomic_arith(a: Scalar, b: Scalar | None, op: str) -> Scalar:
    """Field operation ``op`` in {'add', 'mul', 'inv'} on exact scalars."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return inverse(a)
    raise DomainError(f"unknown operation {op!r}")


def as_rational(x: Scalar) -> Fraction | None:
    """Return x as a Fraction if it is rational, else None."""
    if isinstance(x, Cyclotomic):
        return x.coeffs[0] if x.is_rational() else None
    return Fraction(x)


def is_integer(x: Scalar) -> bool:
    q = as_rational(x)
    return q is not None and q.denominator == 1


def is_positive_integer(x: Scalar) -> bool:
    return is_integer(x) and as_rational(x) > 0


# --------------------------------------------------------------------------
# text rendering and parsing


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    """Canonical text: "a/b" for rationals, a polynomial in ``e`` otherwise,
    e.g. ``1/2 - 3/2*e^2``."""
    if not isinstance(x, Cyclotomic):
        return format_rational(x)
    parts = []
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        if j == 0:
            body = format_rational(abs(c))
        else:
            mono = "e" if j == 1 else f"e^{j}"
            body = mono if abs(c) == 1 else f"{format_rational(abs(c))}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)(?:\*(?P<mono1>e(?:\^\d+)?))?|(?P<mono2>e(?:\^\d+)?))$")


def parse_scalar(text: str, l: int = 1) -> Scalar:
    """Parse exact scalar text. Floats such as ``0.5`` are rejected.

    Accepts integers, ``a/b`` and, for l >= 3, polynomials in ``e``.
    """
    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty scalar")
    if "." in s:
        raise DomainError(f"floating point value not accepted: {text!r}")
    tokens = re.findall(r"[+-]?[^+-]+", s)
    if "".join(tokens) != s:
        raise DomainError(f"cannot parse scalar {text!r}")
    coeffs: dict[int, Fraction] = {}
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        body = tok.lstrip("+-")
        m = _TERM.match(body)
        if not m:
            raise DomainError(f"cannot parse scalar {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        mono = m.group("mono1") or m.group("mono2")
        power = 0
        if mono:
            power = int(mono[2:]) if "^" in mono else 1
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
    if all(p == 0 for p in coeffs):
        return coeffs.get(0, Fraction(0))
    if l < 1:
        raise DomainError("invalid order")
    total: Scalar = Fraction(0)
    for p, c in coeffs.items():
        total = total + c * root_of_unity(l, p)
    return total


# --------------------------------------------------------------------------
# polynomials in a formal parameter


class FormalParamPoly:
    """Univariate polynomial in a formal parameter (called kappa), with
    exact scalar coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def kappa(cls) -> "FormalParamPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "FormalParamPoly":
        return cls([c])

    @classmethod
    def falling_shift(cls, s: int) -> "FormalParamPoly":
        """(kappa - 1)(kappa - 2)...(kappa - s); the empty product is 1."""
        out = cls([1])
        for i in range(1, s + 1):
            out = out * cls([-i, 1])
        return out

    @classmethod
    def binomial(cls, a: int) -> "FormalParamPoly":
        """binomial(kappa, a) = kappa (kappa-1) ... (kappa-a+1) / a!."""
        out = cls([1])
        for i in range(a):
            out = out * cls([Fraction(-i, i + 1), Fraction(1, i + 1)])
        return out

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, FormalParamPoly):
            other = FormalParamPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        return other if isinstance(other, FormalParamPoly) else FormalParamPoly([other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return FormalParamPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return FormalParamPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return FormalParamPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return FormalParamPoly(out)

    __rmul__ = __mul__

    def __call__(self, value: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divmod(self, other: "FormalParamPoly") -> tuple["FormalParamPoly", "FormalParamPoly"]:
        if not other:
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        quot = [0] * max(len(rem) - len(den) + 1, 0)
        for shift in range(len(rem) - len(den), -1, -1):
            f = qdiv(rem[shift + len(den) - 1], lead)
            quot[shift] = f
            if f:
                for i, d in enumerate(den):
                    rem[shift + i] = rem[shift + i] - f * d
        return FormalParamPoly(quot), FormalParamPoly(rem[: len(den) - 1])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("k" if i == 1 else f"k^{i}")
                cs = format_scalar(c)
                terms.append(cs if not mono else (mono if cs == "1" else f"({cs})*{mono}"))
        return " + ".join(terms)


def formal_div_exact(p: FormalParamPoly, q: FormalParamPoly) -> FormalParamPoly:
    """p / q, where q must divide p exactly (else IntegrityError)."""
    quot, rem = p.divmod(q)
    if rem:
        raise IntegrityError(f"inexact division of {p!r} by {q!r}")
    return quot
