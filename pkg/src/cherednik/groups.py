"""The groups S_n, G(l,1,n) = S_n x| (Z/lZ)^n and Z/lZ with their reflections.

Conventions (fixed here, used everywhere):

* A :class:`GroupElement` is a pair (perm, weights). It acts on a vector v in
  h = C^n by ``(g v)_j = e^{weights[j]} v[perm^{-1}(j)]``, i.e. by the
  monomial matrix D(weights) P(perm) with ``P e_i = e_{perm[i]}``.
* Products compose as matrices: (pi, w)(pi', w') = (pi pi', w + pi.w') where
  ``(pi.w')[j] = w'[pi^{-1}(j)]``.
* On a linear form a (an element of h^*) the contragredient action is
  ``(g a)(v) = a(g^{-1} v)``; in particular ``g . x_i = e^{-w[pi(i)]} x_{pi(i)}``.

With these conventions the reflection s_i^m multiplies the i-th coordinate of
a point by e^m, and sigma_{i,j}^{(m)} sends (.., x_i, .., x_j, ..) to
(.., e^m x_j, .., e^{-m} x_i, ..).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DomainError, IntegrityError
from .exact import Scalar, parse_scalar, qdiv, root_of_unity
from .linalg import determinant, matmul


@dataclass(frozen=True, order=True)
class GroupElement:
    perm: tuple[int, ...]
    weights: tuple[int, ...]
    l: int = 1

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise DomainError(f"not a permutation: {self.perm}")
        if len(self.weights) != len(self.perm):
            raise DomainError("weights and permutation have different lengths")
        object.__setattr__(self, "weights", tuple(w % self.l for w in self.weights))

    @classmethod
    def identity(cls, n: int, l: int = 1) -> "GroupElement":
        return cls(tuple(range(n)), (0,) * n, l)

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if (self.n, self.l) != (other.n, other.l):
            raise DomainError("elements of different groups")
        inv = self._perm_inverse()
        weights = tuple(self.weights[j] + other.weights[inv[j]] for j in range(self.n))
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        return GroupElement(perm, weights, self.l)

    def _perm_inverse(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
        return tuple(inv)

    def inverse(self) -> "GroupElement":
        inv = self._perm_inverse()
        weights = tuple(-self.weights[self.perm[i]] for i in range(self.n))
        return GroupElement(inv, weights, self.l)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and not any(self.weights)

    def order(self) -> int:
        g, k = self, 1
        while not g.is_identity():
            g, k = g * self, k + 1
        return k

    def matrix(self) -> list[list[Scalar]]:
        """Matrix of the action on h (columns = images of basis vectors)."""
        n = self.n
        m = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            j = self.perm[i]
            m[j][i] = root_of_unity(self.l, self.weights[j])
        return m

    def dual_matrix(self) -> list[list[Scalar]]:
        """Matrix of the contragredient action on h^* in the basis x_1..x_n."""
        n = self.n
        m = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            j = self.perm[i]
            m[j][i] = root_of_unity(self.l, -self.weights[j])
        return m

    def __str__(self):
        cycle = "".join(str(p + 1) for p in self.perm)
        return f"[{cycle};{','.join(map(str, self.weights))}]"


def act_on_vector(g: GroupElement, v: Sequence[Scalar]) -> list[Scalar]:
    """g acting on a point of h."""
    if len(v) != g.n:
        raise DomainError(f"vector of length {len(v)} for a group of rank {g.n}")
    inv = g._perm_inverse()
    return [root_of_unity(g.l, g.weights[j]) * v[inv[j]] for j in range(g.n)]


def act_on_covector(g: GroupElement, a: Sequence[Scalar]) -> list[Scalar]:
    """g acting on a linear form a = sum a_i x_i on h (contragredient action)."""
    if len(a) != g.n:
        raise DomainError(f"covector of length {len(a)} for a group of rank {g.n}")
    out: list[Scalar] = [Fraction(0)] * g.n
    for i in range(g.n):
        j = g.perm[i]
        out[j] = root_of_unity(g.l, -g.weights[j]) * a[i]
    return out


def pair(alpha: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc: Scalar = Fraction(0)
    for a, x in zip(alpha, v):
        if a and x:
            acc = acc + a * x
    return acc


@dataclass(frozen=True)
class Reflection:
    """A complex reflection with its root data.

    ``alpha`` is a linear form on h (coefficients on x_1..x_n) vanishing on
    the fixed hyperplane, normalized so its first nonzero coefficient is 1.
    ``alpha_check`` is a vector of h with ``alpha(alpha_check) = 2``.
    ``lam`` is the nontrivial eigenvalue on h^*. ``kind`` is ``"sigma"``
    (label (i, j, m)) or ``"s"`` (label (i, m)); indices are 0-based.
    """

    element: GroupElement
    alpha: tuple
    alpha_check: tuple
    lam: Scalar
    kind: str
    label: tuple

    def __str__(self):
        if self.kind == "sigma":
            i, j, m = self.label
            return f"sigma_{i + 1},{j + 1}^({m})"
        i, m = self.label
        return f"s_{i + 1}^{m}"


def _root_data(g: GroupElement) -> tuple[tuple, tuple, Scalar]:
    """alpha, alpha_check and lambda read off the matrix of g."""
    m = g.matrix()
    n = g.n
    diff = [[m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    row = next((r for r in diff if any(r)), None)
    col_idx = next((j for j in range(n) if any(diff[i][j] for i in range(n))), None)
    if row is None or col_idx is None:
        raise IntegrityError(f"{g} is the identity, not a reflection")
    lead = next(x for x in row if x)
    alpha = tuple(qdiv(x, lead) for x in row)
    # every row of (M - 1) must be a multiple of alpha: rank one
    for r in diff:
        k = next((qdiv(x, a) for x, a in zip(r, alpha) if a), 0)
        if any(x - k * a for x, a in zip(r, alpha)):
            raise IntegrityError(f"{g} fixes no hyperplane")
    col = [diff[i][col_idx] for i in range(n)]
    scale = qdiv(2, pair(alpha, col))
    alpha_check = tuple(scale * x for x in col)
    lam = qdiv(1, determinant(m))
    return alpha, alpha_check, lam


class ReflectionGroup:
    """G(l,1,n); l = 1 gives S_n and n = 1 gives Z/lZ."""

    def __init__(self, l: int, n: int):
        if l < 1 or n < 1:
            raise DomainError(f"need l >= 1 and n >= 1, got l={l}, n={n}")
        if (l, n) == (1, 1):
            raise DomainError("G(1,1,1) is trivial and has no reflections")
        self.l = l
        self.n = n
        self.reflections = self._build_reflections()

    # ---------------------------------------------------------------- naming
    @property
    def descriptor(self) -> str:
        if self.l == 1:
            return f"S({self.n})"
        if self.n == 1:
            return f"Z({self.l})"
        return f"G({self.l},1,{self.n})"

    def __repr__(self):
        return f"ReflectionGroup({self.descriptor})"

    def __eq__(self, other):
        return isinstance(other, ReflectionGroup) and (self.l, self.n) == (other.l, other.n)

    def __hash__(self):
        return hash((self.l, self.n))

    @property
    def dim(self) -> int:
        """Dimension of the space the group acts on (C^n, also for S_n)."""
        return self.n

    @property
    def rank(self) -> int:
        """Dimension of the reflection representation h."""
        return self.n - 1 if self.l == 1 else self.n

    @property
    def is_real(self) -> bool:
        return self.l <= 2

    @property
    def is_type_a(self) -> bool:
        return self.l == 1

    def root(self, m: int = 1) -> Scalar:
        return root_of_unity(self.l, m)

    # ---------------------------------------------------------------- elements
    def identity(self) -> GroupElement:
        return GroupElement.identity(self.n, self.l)

    def sigma(self, i: int, j: int, m: int = 0) -> GroupElement:
        """sigma_{i,j}^{(m)} with 0-based i != j."""
        perm = list(range(self.n))
        perm[i], perm[j] = j, i
        weights = [0] * self.n
        weights[i] = m
        weights[j] = -m
        return GroupElement(tuple(perm), tuple(weights), self.l)

    def s(self, i: int, m: int = 1) -> GroupElement:
        """s_i^m (0-based i)."""
        weights = [0] * self.n
        weights[i] = m
        return GroupElement(tuple(range(self.n)), tuple(weights), self.l)

    @cached_property
    def elements(self) -> list[GroupElement]:
        out = []
        for perm in itertools.permutations(range(self.n)):
            for weights in itertools.product(range(self.l), repeat=self.n):
                out.append(GroupElement(perm, weights, self.l))
        return sorted(out)

    @cached_property
    def generators(self) -> list[GroupElement]:
        """Simple transpositions, plus s_1 when l > 1."""
        gens = [self.sigma(i, i + 1) for i in range(self.n - 1)]
        if self.l > 1:
            gens.append(self.s(0, 1))
        return gens

    def order(self) -> int:
        return len(self.elements)

    # ---------------------------------------------------------------- reflections
    def _build_reflections(self) -> list[Reflection]:
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for m in range(self.l):
                    g = self.sigma(i, j, m)
                    out.append(Reflection(g, *_root_data(g), "sigma", (i, j, m)))
        for i in range(self.n):
            for m in range(1, self.l):
                g = self.s(i, m)
                out.append(Reflection(g, *_root_data(g), "s", (i, m)))
        return out

    def reflection_of(self, g: GroupElement) -> Reflection:
        for refl in self.reflections:
            if refl.element == g:
                return refl
        raise DomainError(f"{g} is not a reflection of {self.descriptor}")

    # ---------------------------------------------------------------- classes
    @cached_property
    def conjugacy_classes(self) -> list[list[GroupElement]]:
        elems = self.elements
        seen: set = set()
        classes = []
        for g in elems:
            if g in seen:
                continue
            orbit = sorted({h * g * h.inverse() for h in elems})
            seen.update(orbit)
            classes.append(orbit)
        return classes

    def conjugacy_class_reps(self) -> list[GroupElement]:
        return [cls[0] for cls in self.conjugacy_classes]


def build_group(l: int, n: int) -> ReflectionGroup:
    return ReflectionGroup(l, n)


_GROUP_RE = [
    (re.compile(r"^G\((\d+),1,(\d+)\)$"), lambda a, b: (int(a), int(b))),
    (re.compile(r"^S\((\d+)\)$"), lambda a: (1, int(a))),
    (re.compile(r"^Z\((\d+)\)$"), lambda a: (int(a), 1)),
]


def parse_group(text: str) -> ReflectionGroup:
    """Parse "G(l,1,n)", "S(n)" or "Z(l)"."""
    s = text.replace(" ", "")
    for pattern, conv in _GROUP_RE:
        m = pattern.match(s)
        if m:
            return ReflectionGroup(*conv(*m.groups()))
    raise DomainError(f"unrecognized group descriptor {text!r}")


# ---------------------------------------------------------------------------
# parameter functions


@dataclass(frozen=True)
class ParameterFunction:
    """A conjugation invariant function c on the reflections.

    ``kind`` is ``"typeA"`` (value k on every transposition), ``"wreath"``
    (k on every sigma_{i,j}^{(m)} and c[m-1] on every s_i^m) or ``"rank1"``
    (c[m-1] on s^m).
    """

    kind: str
    k: Scalar = Fraction(0)
    c: tuple = field(default_factory=tuple)

    @classmethod
    def type_a(cls, k) -> "ParameterFunction":
        return cls("typeA", k, ())

    @classmethod
    def wreath(cls, k, c: Sequence) -> "ParameterFunction":
        return cls("wreath", k, tuple(c))

    @classmethod
    def rank1(cls, c: Sequence) -> "ParameterFunction":
        return cls("rank1", Fraction(0), tuple(c))

    @classmethod
    def zero(cls, group: ReflectionGroup) -> "ParameterFunction":
        if group.l == 1:
            return cls.type_a(Fraction(0))
        c = (Fraction(0),) * (group.l - 1)
        return cls.rank1(c) if group.n == 1 else cls.wreath(Fraction(0), c)

    def check(self, group: ReflectionGroup) -> None:
        if group.l > 1 and len(self.c) != group.l - 1:
            raise DomainError(f"{group.descriptor} needs {group.l - 1} values c_1..c_{group.l - 1}")
        if self.kind == "typeA" and group.l != 1:
            raise DomainError("type A parameters need l = 1")
        if self.kind == "rank1" and group.n != 1:
            raise DomainError("rank-one parameters need n = 1")

    def value(self, refl: Reflection) -> Scalar:
        if refl.kind == "sigma":
            return self.k
        _, m = refl.label
        return self.c[m - 1]

    def describe(self) -> dict:
        from .exact import format_scalar

        out = {"kind": self.kind}
        if self.kind != "rank1":
            out["k"] = format_scalar(self.k)
        if self.c:
            out["c"] = [format_scalar(x) for x in self.c]
        return out


def parse_params(group: ReflectionGroup, k: str | None, c: Sequence[str] | None) -> ParameterFunction:
    kval = parse_scalar(k, group.l) if k is not None else Fraction(0)
    cvals = tuple(parse_scalar(x, group.l) for x in (c or []))
    if group.l == 1:
        return ParameterFunction.type_a(kval)
    if group.n == 1:
        params = ParameterFunction.rank1(cvals)
    else:
        params = ParameterFunction.wreath(kval, cvals)
    params.check(group)
    return params


def dunkl_weight(refl: Reflection, params: ParameterFunction) -> Scalar:
    """2 c_s / (1 - lambda_s), the coefficient of s in the grading element."""
    return qdiv(2 * params.value(refl), 1 - refl.lam)


def check_matrix_law(g: GroupElement, h: GroupElement) -> bool:
    """matrix(g h) == matrix(g) matrix(h)."""
    return (g * h).matrix() == matmul(g.matrix(), h.matrix())
