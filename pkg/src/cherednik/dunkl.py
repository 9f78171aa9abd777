"""Dunkl operators, the grading element h and the sl2 triple.

On the standard module M_c(tau) = C[h] (x) tau with tau one-dimensional,
y in h acts by

    T_y f = d_y f - sum_s 2 c_s / (1 - lambda_s) * alpha_s(y) * tau(s) * (f - s.f) / alpha_s

(tau trivial gives the usual Dunkl operator on the polynomial
representation). Divided differences of monomials are cached per
:class:`DunklSystem`, as are the operator matrices on each graded piece.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import UnsupportedError
from .exact import Scalar
from .groups import GroupElement, ParameterFunction, ReflectionGroup, dunkl_weight
from .poly import Monomial, Polynomial, divided_difference, graded_basis, group_act_poly

Character = Callable[[GroupElement], Scalar]


def trivial_character(g: GroupElement) -> Scalar:
    return Fraction(1)


def eta_character(l: int, p: int) -> Character:
    """The character eta^p of Z/lZ (or of the weight part of G(l,1,n) on
    its first coordinate): s^j -> e^{p j}."""
    from .exact import root_of_unity

    def chi(g: GroupElement) -> Scalar:
        return root_of_unity(l, p * sum(g.weights))

    chi.label = f"eta^{p % l}"
    return chi


class DunklSystem:
    """All Dunkl operators T_{y_1}..T_{y_n} for fixed (W, c, tau)."""

    def __init__(self, group: ReflectionGroup, params: ParameterFunction,
                 tau: Character | None = None):
        params.check(group)
        self.group = group
        self.params = params
        self.tau = tau or trivial_character
        self.n = group.n
        # (reflection, weight * tau(s)) pairs with nonzero weight
        self.terms = []
        for refl in group.reflections:
            w = dunkl_weight(refl, params)
            if w:
                self.terms.append((refl, w * self.tau(refl.element)))
        self._images: dict[tuple[Monomial, int], Polynomial] = {}
        self._matrices: dict[tuple[int, int], dict] = {}
        self._lock = threading.Lock()

    # --------------------------------------------------------------- T_y
    def image(self, mono: Monomial, i: int) -> Polynomial:
        """T_{y_i} x^mono (cached)."""
        key = (mono, i)
        hit = self._images.get(key)
        if hit is not None:
            return hit
        x = Polynomial.monomial(mono)
        out = x.derivative(i)
        for refl, w in self.terms:
            a = refl.alpha[i]
            if a:
                out = out - divided_difference(refl, x).scale(w * a)
        with self._lock:
            self._images[key] = out
        return out

    def apply(self, f: Polynomial, y: int | Sequence[Scalar]) -> Polynomial:
        """T_y f for y a basis index or a vector of h."""
        if isinstance(y, int):
            out: dict = {}
            for m, c in f.terms.items():
                for mm, v in self.image(m, y).terms.items():
                    nv = out.get(mm, 0) + c * v
                    if nv:
                        out[mm] = nv
                    else:
                        out.pop(mm, None)
            return Polynomial(f.nvars, out)
        out_p = Polynomial.zero(f.nvars)
        for i, yi in enumerate(y):
            if yi:
                out_p = out_p + self.apply(f, i).scale(yi)
        return out_p

    def matrix(self, degree: int, i: int) -> dict[Monomial, dict]:
        """Columns of T_{y_i} on the degree piece: monomial -> sparse image."""
        key = (degree, i)
        hit = self._matrices.get(key)
        if hit is None:
            hit = {m: self.image(m, i).terms for m in graded_basis(self.n, degree)}
            with self._lock:
                self._matrices[key] = hit
        return hit

    def operator(self, y: int | Sequence[Scalar]) -> "DunklOperator":
        return DunklOperator(self, y)

    # --------------------------------------------------------------- grading
    def lowest_eigenvalue(self, ambient: bool = False) -> Scalar:
        """h(tau) = rank/2 - sum_s 2c_s/(1 - lambda_s) tau(s).

        With ``ambient`` the dimension n of C^n is used instead of the rank;
        they differ only for S_n.
        """
        dim = self.group.dim if ambient else self.group.rank
        acc: Scalar = Fraction(dim, 2)
        for _, w in self.terms:
            acc = acc - w
        return acc

    def grading_apply(self, f: Polynomial) -> Polynomial:
        """The grading element sum_i x_i T_{y_i} + n/2 - sum_s c'_s s applied to
        f in the ambient space (on M_c(tau) the element s acts as tau(s) s)."""
        out = f.scale(Fraction(self.group.dim, 2))
        for i in range(self.n):
            out = out + self.apply(f, i).mul_var(i)
        for refl, w in self.terms:
            out = out - group_act_poly(refl.element, f).scale(w)
        return out


@dataclass(frozen=True)
class DunklOperator:
    system: DunklSystem
    direction: int | tuple

    def __call__(self, f: Polynomial) -> Polynomial:
        return self.system.apply(f, self.direction)


def dunkl_apply(T: DunklOperator, f: Polynomial) -> Polynomial:
    return T(f)


def lowest_eigenvalue(group: ReflectionGroup, params: ParameterFunction,
                      tau: Character | None = None, ambient: bool = False) -> Scalar:
    if tau is not None and group.rank > 1 and tau is not trivial_character:
        if getattr(tau, "dim", 1) != 1:
            raise UnsupportedError("only one-dimensional lowest weights are supported")
    return DunklSystem(group, params, tau).lowest_eigenvalue(ambient=ambient)


class SL2Triple:
    """E = 1/2 sum x_i^2 and F = -1/2 sum T_{y_i}^2 for real W.

    The sign of F is chosen so that [E, F] = h and [h, E] = 2E with h the
    grading element. For S_n the sums run over all n coordinates of C^n.
    """

    def __init__(self, group: ReflectionGroup, params: ParameterFunction):
        if not group.is_real:
            raise UnsupportedError(f"{group.descriptor} is not a real reflection group")
        self.system = DunklSystem(group, params)
        self.n = group.n

    def E(self, f: Polynomial) -> Polynomial:
        out = Polynomial.zero(f.nvars)
        for i in range(self.n):
            out = out + f.mul_var(i).mul_var(i)
        return out.scale(Fraction(1, 2))

    def F(self, f: Polynomial) -> Polynomial:
        out = Polynomial.zero(f.nvars)
        for i in range(self.n):
            out = out + self.system.apply(self.system.apply(f, i), i)
        return out.scale(Fraction(-1, 2))

    def H(self, f: Polynomial) -> Polynomial:
        return self.system.grading_apply(f)


def sl2_operators(group: ReflectionGroup, params: ParameterFunction) -> tuple[Callable, Callable]:
    triple = SL2Triple(group, params)
    return triple.E, triple.F
