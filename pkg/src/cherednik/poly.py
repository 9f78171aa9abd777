"""Sparse multivariate polynomials over exact scalars.

A :class:`Polynomial` is a map from exponent tuples to nonzero scalars. The
variables are x1..xn, the coordinate functions on h. Group elements act by
``(g f)(v) = f(g^{-1} v)``, see :mod:`cherednik.groups` for the conventions.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .errors import DomainError, IntegrityError
from .exact import Scalar, format_scalar, parse_scalar, qdiv, root_of_unity
from .groups import GroupElement, Reflection

Monomial = tuple


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise DomainError(f"monomial {mono} does not have {nvars} exponents")
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean

    # ------------------------------------------------------------ constructors
    @classmethod
    def _wrap(cls, nvars: int, terms: dict) -> "Polynomial":
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._wrap(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, Fraction(1))

    @classmethod
    def var(cls, nvars: int, i: int) -> "Polynomial":
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = Fraction(1)) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar]) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            mono = [0] * n
            mono[i] = 1
            terms[tuple(mono)] = c
        return cls(n, terms)

    # ------------------------------------------------------------ basic queries
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), Fraction(0))

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._wrap(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, reverse=True)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    # ------------------------------------------------------------ arithmetic
    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DomainError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return self
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._wrap(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._wrap(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._wrap(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c: Scalar) -> "Polynomial":
        return Polynomial._wrap(self.nvars, {m: qdiv(v, c) for m, v in self.terms.items()})

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise DomainError("negative power of a polynomial")
        out = Polynomial.one(self.nvars)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def mul_var(self, i: int) -> "Polynomial":
        """x_i * self."""
        out = {}
        for m, c in self.terms.items():
            mm = list(m)
            mm[i] += 1
            out[tuple(mm)] = c
        return Polynomial._wrap(self.nvars, out)

    def derivative(self, i: int) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = m[i] * c
        return Polynomial._wrap(self.nvars, out)

    def directional_derivative(self, y: Sequence[Scalar]) -> "Polynomial":
        out = Polynomial.zero(self.nvars)
        for i, yi in enumerate(y):
            if yi:
                out = out + self.derivative(i).scale(yi)
        return out

    # ------------------------------------------------------------ evaluation
    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        if len(point) != self.nvars:
            raise DomainError(f"point of length {len(point)} for {self.nvars} variables")
        acc: Scalar = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term = term * x ** e
            acc = acc + term
        return acc

    def compose(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute polynomial ``values[i]`` for x_i."""
        if len(values) != self.nvars:
            raise DomainError("wrong number of substitution values")
        target = values[0].nvars if values else 0
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = values[i] ** e
            return powers[key]

        out = Polynomial.zero(target)
        for m, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    # ------------------------------------------------------------ I/O
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self.terms[m]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(m) if e)
            cs = format_scalar(c)
            if " " in cs:
                cs = f"({cs})"
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            else:
                body = f"{cs}*{mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    __str__ = to_text

    def to_json(self) -> list[dict]:
        return [{"exponents": list(m), "coefficient": format_scalar(self.terms[m])}
                for m in self.monomials()]

    @classmethod
    def from_json(cls, nvars: int, data: list[dict], l: int = 1) -> "Polynomial":
        return cls(nvars, {tuple(t["exponents"]): parse_scalar(t["coefficient"], l) for t in data})


def parse_poly(text: str, nvars: int, l: int = 1) -> Polynomial:
    """Parse text like ``3/2*x1^2*x2 - x2 + (1 + e)*x1``."""
    s = text.replace(" ", "")
    if "." in s:
        raise DomainError(f"floating point value not accepted: {text!r}")
    terms: list[str] = []
    depth, cur = 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and not cur.endswith(("*", "^")):
            terms.append(cur)
            cur = ""
        cur += ch
    if cur:
        terms.append(cur)
    out = Polynomial.zero(nvars)
    for tok in terms:
        sign = Fraction(1)
        while tok and tok[0] in "+-":
            if tok[0] == "-":
                sign = -sign
            tok = tok[1:]
        coeff: Scalar = sign
        exps = [0] * nvars
        for factor in re.findall(r"\([^()]*\)|[^*]+", tok):
            if factor.startswith("("):
                coeff = coeff * parse_scalar(factor[1:-1], l)
                continue
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if m:
                i = int(m.group(1)) - 1
                if not 0 <= i < nvars:
                    raise DomainError(f"variable x{i + 1} out of range")
                exps[i] += int(m.group(2) or 1)
            else:
                coeff = coeff * parse_scalar(factor, l)
        out = out + Polynomial(nvars, {tuple(exps): coeff})
    return out


# ---------------------------------------------------------------------------
# graded bases


@lru_cache(maxsize=None)
def graded_basis(n: int, d: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree d in n variables, in decreasing
    lexicographic order: (2,0), (1,1), (0,2) for n = d = 2."""
    if d < 0:
        raise DomainError("negative degree")
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for first in range(d, -1, -1):
        for rest in graded_basis(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def graded_dimension(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1) if d >= 0 else 0


# ---------------------------------------------------------------------------
# group action and divided differences


def act_monomial(g: GroupElement, mono: Monomial) -> tuple[Monomial, Scalar]:
    """g . x^mono = coeff * x^image."""
    image = [0] * g.n
    twist = 0
    for i, e in enumerate(mono):
        if e:
            j = g.perm[i]
            image[j] = e
            twist -= g.weights[j] * e
    return tuple(image), root_of_unity(g.l, twist)


def group_act_poly(g: GroupElement, f: Polynomial) -> Polynomial:
    if g.n != f.nvars:
        raise DomainError("group element and polynomial have different ranks")
    out = {}
    for m, c in f.terms.items():
        image, coeff = act_monomial(g, m)
        out[image] = c * coeff
    return Polynomial(f.nvars, out)


def divide_linear(f: Polynomial, alpha: Sequence[Scalar]) -> Polynomial:
    """Exact quotient f / alpha for a linear form alpha = sum alpha_i x_i.

    Raises IntegrityError if alpha does not divide f.
    """
    n = f.nvars
    a = next((i for i, x in enumerate(alpha) if x), None)
    if a is None:
        raise DomainError("division by the zero linear form")
    lead = alpha[a]
    rest = [(i, x) for i, x in enumerate(alpha) if x and i != a]
    # group f by the power of x_a: f = sum_e x_a^e f_e
    layers: dict[int, dict] = {}
    for m, c in f.terms.items():
        layers.setdefault(m[a], {})[m] = c
    if not layers:
        return Polynomial.zero(n)
    top = max(layers)
    quotient: dict = {}
    # q_{e-1} = (f_e - beta q_e) / lead, descending in e; beta = alpha - lead x_a
    carry: dict = {}  # beta * q_e, with the x_a exponent of q_e + 1 (i.e. e)
    for e in range(top, 0, -1):
        layer = dict(layers.get(e, {}))
        for m, c in carry.items():
            v = layer.get(m, 0) - c
            if v:
                layer[m] = v
            else:
                layer.pop(m, None)
        q_layer = {}
        for m, c in layer.items():
            mm = list(m)
            mm[a] -= 1
            q_layer[tuple(mm)] = qdiv(c, lead)
        quotient.update(q_layer)
        carry = {}
        for m, c in q_layer.items():
            for i, x in rest:
                mm = list(m)
                mm[i] += 1
                key = tuple(mm)
                v = carry.get(key, 0) + c * x
                if v:
                    carry[key] = v
                else:
                    carry.pop(key, None)
    # remaining: f_0 must equal beta * q_0
    layer = dict(layers.get(0, {}))
    for m, c in carry.items():
        v = layer.get(m, 0) - c
        if v:
            layer[m] = v
        else:
            layer.pop(m, None)
    if layer:
        raise IntegrityError(f"linear form {list(map(format_scalar, alpha))} does not divide {f}")
    return Polynomial(n, quotient)


def divided_difference(s: Reflection, f: Polynomial) -> Polynomial:
    """(f - s.f) / alpha_s, always an exact polynomial division."""
    return divide_linear(f - group_act_poly(s.element, f), s.alpha)


def evaluate(f: Polynomial, point: Sequence[Scalar]) -> Scalar:
    return f.evaluate(point)


def poly_arith(f: Polynomial, g, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "scalar_mul":
        return f.scale(g)
    raise DomainError(f"unknown operation {op!r}")


def elementary_symmetric(n: int, d: int) -> Polynomial:
    terms = {}
    for idx in itertools.combinations(range(n), d):
        m = [0] * n
        for i in idx:
            m[i] = 1
        terms[tuple(m)] = Fraction(1)
    return Polynomial(n, terms)
