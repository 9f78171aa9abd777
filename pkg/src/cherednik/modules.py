"""Graded quotients of the polynomial representation.

Everything here is computed degree by degree up to a cutoff N. Relation
spaces are kept as :class:`~cherednik.linalg.Echelon` bases of sparse
vectors indexed by monomials.

For S_n we work in C[x_1..x_n] = C[h] (x) C[x_1 + ... + x_n]. Passing
``translation=True`` additionally divides out the ideal generated by
x_1 + ... + x_n, which is done by the substitution
x_n -> -(x_1 + ... + x_{n-1}); the quotient then lives in n - 1 variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .dunkl import Character, DunklSystem, trivial_character
from .errors import DomainError, IntegrityError
from .exact import Scalar, format_scalar, qdiv
from .groups import GroupElement, ParameterFunction, ReflectionGroup, dunkl_weight
from .linalg import Echelon, determinant, det_one_minus, exterior_traces, kernel, solve
from .poly import Polynomial, act_monomial, graded_basis, graded_dimension

DEFAULT_CUTOFF = 20


def default_cutoff(n: int | None = None, r: int | None = None) -> int:
    """n*r + 2 when a degree-r complete intersection is expected, otherwise
    $CHEREDNIK_CUTOFF or 20."""
    if n is not None and r is not None:
        return n * r + 2
    return int(os.environ.get("CHEREDNIK_CUTOFF", DEFAULT_CUTOFF))


# ---------------------------------------------------------------------------
# sparse-vector helpers (vectors are dicts monomial -> scalar)


def _mul_var(vec: dict, i: int) -> dict:
    out = {}
    for m, c in vec.items():
        mm = list(m)
        mm[i] += 1
        out[tuple(mm)] = c
    return out


def _act(g: GroupElement, vec: dict) -> dict:
    out = {}
    for m, c in vec.items():
        image, coeff = act_monomial(g, m)
        out[image] = c * coeff
    return out


def _dunkl(system: DunklSystem, vec: dict, i: int) -> dict:
    return system.apply(Polynomial(system.n, vec), i).terms


class _TranslationReducer:
    """x_n -> -(x_1 + ... + x_{n-1}) on monomials, cached."""

    def __init__(self, n: int):
        self.n = n
        self.m = n - 1
        self._cache: dict = {}
        self._powers = [Polynomial.one(self.m)]
        self._linear = -Polynomial.linear([Fraction(1)] * self.m)

    def _power(self, e: int) -> Polynomial:
        while len(self._powers) <= e:
            self._powers.append(self._powers[-1] * self._linear)
        return self._powers[e]

    def monomial(self, mono: tuple) -> dict:
        hit = self._cache.get(mono)
        if hit is None:
            head = mono[:-1]
            hit = {}
            for mm, c in self._power(mono[-1]).terms.items():
                hit[tuple(a + b for a, b in zip(head, mm))] = c
            self._cache[mono] = hit
        return hit

    def vector(self, vec: dict) -> dict:
        out: dict = {}
        for m, c in vec.items():
            for mm, v in self.monomial(m).items():
                nv = out.get(mm, 0) + c * v
                if nv:
                    out[mm] = nv
                else:
                    out.pop(mm, None)
        return out

    def lift(self, mono: tuple) -> tuple:
        return mono + (0,)


# ---------------------------------------------------------------------------
# graded quotients


class GradedQuotient:
    """M_c(tau) / J truncated at ``cutoff``.

    ``ambient_relations[m]`` spans J in degree m inside C[x_1..x_n];
    ``relations[m]`` is what is actually divided out (the same, or its image
    modulo x_1 + ... + x_n when ``translation`` is set).
    """

    def __init__(self, group: ReflectionGroup, params: ParameterFunction, cutoff: int,
                 ambient_relations: list[Echelon], translation: bool = False,
                 tau: Character | None = None, generators: Sequence[Polynomial] = ()):
        if translation and not group.is_type_a:
            raise DomainError("translation reduction only applies to S_n")
        self.group = group
        self.params = params
        self.cutoff = cutoff
        self.tau = tau or trivial_character
        self.translation = translation
        self.generators = list(generators)
        self.ambient_relations = ambient_relations
        if translation:
            self._reducer = _TranslationReducer(group.n)
            self.nvars = group.n - 1
            self.relations = [Echelon(self._reducer.vector(v) for v in ech.basis())
                              for ech in ambient_relations]
        else:
            self._reducer = None
            self.nvars = group.n
            self.relations = ambient_relations

    # ----------------------------------------------------------- structure
    def dimension(self, m: int) -> int:
        return graded_dimension(self.nvars, m) - len(self.relations[m])

    def hilbert_series(self) -> list[int]:
        return [self.dimension(m) for m in range(self.cutoff + 1)]

    def quotient_basis(self, m: int) -> list[tuple]:
        piv = self.relations[m].rows
        return [mono for mono in graded_basis(self.nvars, m) if mono not in piv]

    def reduce(self, vec: dict) -> dict:
        """Normal form of a homogeneous vector given in quotient variables."""
        if not vec:
            return {}
        m = sum(next(iter(vec)))
        if m > self.cutoff:
            raise DomainError(f"degree {m} is beyond the cutoff {self.cutoff}")
        return self.relations[m].reduce(vec)

    def to_quotient_vars(self, f: Polynomial | dict) -> dict:
        vec = f.terms if isinstance(f, Polynomial) else f
        return self._reducer.vector(vec) if self._reducer else dict(vec)

    def act(self, g: GroupElement, mono: tuple) -> dict:
        """g applied to a quotient-variable monomial, in quotient variables."""
        if self._reducer:
            image, coeff = act_monomial(g, self._reducer.lift(mono))
            return {m: coeff * c for m, c in self._reducer.monomial(image).items()}
        image, coeff = act_monomial(g, mono)
        return {image: coeff}

    def multiply(self, a: tuple, b: tuple) -> dict:
        return self.reduce({tuple(x + y for x, y in zip(a, b)): Fraction(1)})

    def shift(self) -> Scalar:
        system = DunklSystem(self.group, self.params, self.tau)
        ambient = self.group.is_type_a and not self.translation
        return system.lowest_eigenvalue(ambient=ambient)

    def top_degree(self) -> int | None:
        dims = self.hilbert_series()
        if 0 not in dims:
            return None
        first_zero = dims.index(0)
        return first_zero - 1

    def describe(self) -> dict:
        fd = finite_dim_decide(self)
        return {
            "group": self.group.descriptor,
            "params": self.params.describe(),
            "cutoff": self.cutoff,
            "translation": self.translation,
            "hilbert": self.hilbert_series(),
            "finite": fd.finite,
            "dimension": fd.dimension,
        }


def submodule_closure(group: ReflectionGroup, params: ParameterFunction,
                      generators: Iterable[Polynomial], cutoff: int,
                      translation: bool = False, tau: Character | None = None,
                      close_dunkl: bool = True) -> GradedQuotient:
    """Smallest graded subspace containing ``generators`` and closed under
    multiplication by every x_i, the W-action and (with ``close_dunkl``)
    every Dunkl operator, computed through degree ``cutoff``.

    Only Dunkl images of vectors that are not already in x.J_{m-1} are
    computed: for such products T_y(x_i g) = x_i T_y g + (y, x_i) g - sum
    c_s (y, alpha_s)(alpha_s^vee, x_i) s.g lies in J_{m-1} once J_{m-2} and
    J_{m-1} are closed.
    """
    generators = list(generators)
    system = DunklSystem(group, params, tau)
    n = group.n
    gens: list[list[dict]] = [[] for _ in range(cutoff + 1)]
    for f in generators:
        if not f:
            continue
        if not f.is_homogeneous():
            raise DomainError(f"generator {f} is not homogeneous")
        d = f.degree()
        if d <= cutoff:
            gens[d].append(dict(f.terms))
    rel: list[Echelon | None] = [None] * (cutoff + 1)
    m = 0
    while m <= cutoff:
        ech = Echelon()
        if m > 0:
            for v in rel[m - 1].basis():
                for i in range(n):
                    ech.add(_mul_var(v, i))
        fresh = []
        queue = list(gens[m])
        while queue:
            v = queue.pop()
            if ech.add(v):
                fresh.append(v)
                for g in group.generators:
                    queue.append(_act(g, v))
        rel[m] = ech
        restart = None
        if close_dunkl and m > 0:
            for v in fresh:
                for i in range(n):
                    w = _dunkl(system, v, i)
                    if w and w not in rel[m - 1]:
                        gens[m - 1].append(w)
                        restart = m - 1
        m = restart if restart is not None else m + 1
    return GradedQuotient(group, params, cutoff, rel, translation, tau, generators)


def full_ring(group: ReflectionGroup, params: ParameterFunction, cutoff: int,
              translation: bool = False) -> GradedQuotient:
    return GradedQuotient(group, params, cutoff, [Echelon() for _ in range(cutoff + 1)], translation)


# ---------------------------------------------------------------------------
# the contravariant form


@dataclass
class GramMatrix:
    degree: int
    basis: list[tuple]
    entries: list[list[Scalar]]

    def is_symmetric(self) -> bool:
        n = len(self.basis)
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))


class ShapovalovForm:
    """B(x^mu, x^nu) = constant term of T^mu x^nu, with T^mu the monomial in
    Dunkl operators. Rows are built recursively: row(mu) = row(mu - e_i) o T_i.
    """

    def __init__(self, group: ReflectionGroup, params: ParameterFunction,
                 tau: Character | None = None):
        self.system = DunklSystem(group, params, tau)
        self.group = group
        self.params = params
        self.n = group.n
        self._rows: dict[int, dict] = {0: {(0,) * self.n: {(0,) * self.n: Fraction(1)}}}

    def rows(self, m: int) -> dict[tuple, dict]:
        """Sparse rows of the degree-m Gram matrix keyed by the left monomial."""
        if m in self._rows:
            return self._rows[m]
        prev = self.rows(m - 1)
        basis = graded_basis(self.n, m)
        cols = [self.system.matrix(m, i) for i in range(self.n)]
        out = {}
        for mu in basis:
            i = next(j for j, e in enumerate(mu) if e)
            lower = list(mu)
            lower[i] -= 1
            prow = prev[tuple(lower)]
            row = {}
            for nu in basis:
                acc = 0
                for rho, v in cols[i][nu].items():
                    p = prow.get(rho)
                    if p:
                        acc = acc + p * v
                if acc:
                    row[nu] = acc
            out[mu] = row
        self._rows[m] = out
        return out

    def value(self, f: Polynomial, g: Polynomial) -> Scalar:
        """B(f, g) for homogeneous f, g of the same degree (0 otherwise)."""
        if not f or not g or f.degree() != g.degree():
            return Fraction(0)
        rows = self.rows(f.degree())
        acc: Scalar = Fraction(0)
        for mu, a in f.terms.items():
            row = rows[mu]
            for nu, b in g.terms.items():
                v = row.get(nu)
                if v:
                    acc = acc + a * b * v
        return acc

    def matrix(self, m: int) -> GramMatrix:
        basis = list(graded_basis(self.n, m))
        rows = self.rows(m)
        return GramMatrix(m, basis, [[rows[mu].get(nu, Fraction(0)) for nu in basis] for mu in basis])

    def radical(self, m: int) -> list[dict]:
        return kernel(list(self.rows(m).values()), graded_basis(self.n, m))


def gram_matrix(group: ReflectionGroup, params: ParameterFunction, m: int,
                tau: Character | None = None) -> GramMatrix:
    return ShapovalovForm(group, params, tau).matrix(m)


def check_closed(group: ReflectionGroup, system: DunklSystem, rel: Sequence[Echelon]) -> list[str]:
    """Report every failure of x-, W- and Dunkl-closure of a graded subspace."""
    problems = []
    top = len(rel) - 1
    for m, ech in enumerate(rel):
        basis = ech.basis()
        for v in basis:
            for g in group.generators:
                if _act(g, v) not in ech:
                    problems.append(f"degree {m}: not W-stable")
                    break
            if m < top:
                for i in range(group.n):
                    if _mul_var(v, i) not in rel[m + 1]:
                        problems.append(f"degree {m}: x_{i + 1} leaves the subspace")
                        break
            if m > 0:
                for i in range(group.n):
                    if _dunkl(system, v, i) not in rel[m - 1]:
                        problems.append(f"degree {m}: T_{i + 1} leaves the subspace")
                        break
    return problems


def irreducible_quotient(group: ReflectionGroup, params: ParameterFunction, cutoff: int,
                         tau: Character | None = None, translation: bool | None = None,
                         check: bool = True) -> GradedQuotient:
    """L_c(tau) through degree ``cutoff``: the quotient by the Gram radical.

    The radical is checked to be closed under x_i, W and the Dunkl operators;
    a failure raises IntegrityError.
    """
    if translation is None:
        translation = group.is_type_a and tau is None
    form = ShapovalovForm(group, params, tau)
    rel = [Echelon(form.radical(m)) for m in range(cutoff + 1)]
    if check:
        problems = check_closed(group, form.system, rel)
        if problems:
            raise IntegrityError("Gram radical is not a submodule: " + "; ".join(problems[:3]))
    return GradedQuotient(group, params, cutoff, rel, translation, tau)


def radical_vanishes_on(Q: GradedQuotient) -> bool:
    """True iff the contravariant form descends to a nondegenerate form on
    every graded piece of Q through the cutoff, i.e. the Gram radical equals
    the relation space J (computed in the ambient ring).

    Degrees above the top nonzero degree are skipped: there J_m is everything
    and J_m lies in the radical because J is Dunkl-closed with J_0 = 0.
    """
    form = ShapovalovForm(Q.group, Q.params, Q.tau)
    top = Q.top_degree()
    last = Q.cutoff if top is None else top
    for m in range(last + 1):
        rows = form.rows(m)
        ech = Q.ambient_relations[m]
        for v in ech.basis():
            for mu, row in rows.items():
                acc = 0
                for nu, c in v.items():
                    x = row.get(nu)
                    if x:
                        acc = acc + x * c
                if acc:
                    return False
        free = [mono for mono in graded_basis(Q.group.n, m) if mono not in ech.rows]
        if free:
            sub = [[rows[a].get(b, Fraction(0)) for b in free] for a in free]
            if not determinant(sub):
                return False
    return True


# ---------------------------------------------------------------------------
# characters


@dataclass
class CharacterSeries:
    """sum_m coeffs[m] t^(shift + m)."""

    element: GroupElement | None
    shift: Scalar
    coeffs: list

    def aligned(self, shift: Scalar, length: int) -> list:
        offset = self.shift - shift
        if not (isinstance(offset, (int, Fraction)) or getattr(offset, "is_rational", lambda: False)()):
            raise DomainError("series shifts are not comparable")
        from .exact import as_rational

        off = as_rational(offset)
        if off is None or off.denominator != 1:
            raise DomainError(f"series shifts differ by a non-integer {format_scalar(offset)}")
        off = int(off)
        out = [Fraction(0)] * length
        for m, c in enumerate(self.coeffs):
            if 0 <= m + off < length:
                out[m + off] = c
        return out

    def __sub__(self, other: "CharacterSeries") -> "CharacterSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        b = other.aligned(self.shift, n)
        return CharacterSeries(self.element, self.shift, [x - y for x, y in zip(self.coeffs[:n], b)])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {"element": str(self.element) if self.element else None,
                "shift": format_scalar(self.shift),
                "coefficients": [format_scalar(c) for c in self.coeffs]}


def series_inverse(poly: Sequence, length: int) -> list:
    """Power series 1/poly to ``length`` terms; poly[0] must be invertible."""
    out = []
    c0 = poly[0]
    for m in range(length):
        acc = Fraction(1) if m == 0 else Fraction(0)
        for j in range(1, min(m, len(poly) - 1) + 1):
            if poly[j] and out[m - j]:
                acc = acc - poly[j] * out[m - j]
        out.append(qdiv(acc, c0))
    return out


def series_mul(a: Sequence, b: Sequence, length: int) -> list:
    out = [Fraction(0)] * length
    for i, x in enumerate(a[:length]):
        if x:
            for j, y in enumerate(b[: length - i]):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def character_series(Q: GradedQuotient, g: GroupElement) -> CharacterSeries:
    """Traces of g on the graded pieces of Q (times tau(g)), shifted by h(tau)."""
    coeffs = []
    tg = Q.tau(g)
    for m in range(Q.cutoff + 1):
        acc: Scalar = Fraction(0)
        for b in Q.quotient_basis(m):
            c = Q.reduce(Q.act(g, b)).get(b)
            if c:
                acc = acc + c
        coeffs.append(acc * tg)
    return CharacterSeries(g, Q.shift(), coeffs)


def hilbert_series(Q: GradedQuotient) -> list[int]:
    return Q.hilbert_series()


def inverse_det_dual(group: ReflectionGroup, g: GroupElement, length: int) -> list:
    """Series 1/det_{h^*}(1 - g t). For S_n, h is the (n-1)-dimensional
    reflection representation: det_{C^n}(1 - gt) / (1 - t)."""
    full = det_one_minus(g.dual_matrix())
    inv = series_inverse(full, length)
    if group.is_type_a:
        inv = series_mul(inv, [Fraction(1), Fraction(-1)], length)
    return inv


def det_reflection(group: ReflectionGroup, g: GroupElement) -> list:
    """Coefficients of det_h(1 - g t) on the reflection representation."""
    full = det_one_minus(g.matrix())
    if group.is_type_a:
        # divide by (1 - t)
        out, carry = [], Fraction(0)
        for c in full[:-1]:
            carry = carry + c
            out.append(carry)
        if carry + full[-1]:
            raise IntegrityError("det(1 - gt) is not divisible by 1 - t")
        return out
    return full


@dataclass
class RepData:
    """A finite-dimensional W-representation given by its matrices."""

    matrix_of: Callable[[GroupElement], list]
    dim: int
    label: str = ""

    def trace(self, g: GroupElement) -> Scalar:
        mat = self.matrix_of(g)
        acc: Scalar = Fraction(0)
        for i in range(self.dim):
            acc = acc + mat[i][i]
        return acc

    def wedge_traces(self, g: GroupElement) -> list:
        return exterior_traces(self.matrix_of(g))


def representation_matrix(g: GroupElement, basis: Sequence[Polynomial]) -> list[list]:
    """Matrix of g on span(basis): column j holds the coordinates of g.basis[j]."""
    from .poly import group_act_poly

    monos = sorted({m for f in basis for m in f.terms}, reverse=True)
    a = [[f.coefficient(m) for f in basis] for m in monos]
    cols = []
    for f in basis:
        img = group_act_poly(g, f)
        if any(m not in set(monos) for m in img.terms):
            raise IntegrityError("span is not W-stable")
        cols.append(solve(a, [img.coefficient(m) for m in monos]))
    k = len(basis)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def polynomial_rep(basis: Sequence[Polynomial], label: str = "U") -> RepData:
    cache: dict = {}

    def matrix_of(g):
        if g not in cache:
            cache[g] = representation_matrix(g, basis)
        return cache[g]

    return RepData(matrix_of, len(basis), label)


def central_value(group: ReflectionGroup, params: ParameterFunction, traces: Callable, dim: int) -> Scalar:
    """Scalar by which sum_s 2c_s/(1 - lambda_s) s acts on an irreducible
    representation with character ``traces``."""
    acc: Scalar = Fraction(0)
    for refl in group.reflections:
        w = dunkl_weight(refl, params)
        if w:
            acc = acc + w * traces(refl.element)
    return qdiv(acc, dim)


def lowest_weight_of(group: ReflectionGroup, params: ParameterFunction, traces: Callable, dim: int) -> Scalar:
    """h(tau) = rank/2 - (central element on tau)."""
    return Fraction(group.rank, 2) - central_value(group, params, traces, dim)


def standard_character(group: ReflectionGroup, params: ParameterFunction, traces: Callable,
                       dim: int, g: GroupElement, N: int, h_tau: Scalar | None = None) -> CharacterSeries:
    """chi_tau(g) t^h(tau) / det_{h^*}(1 - g t) through t^(h(tau) + N)."""
    if h_tau is None:
        h_tau = lowest_weight_of(group, params, traces, dim)
    chi = traces(g)
    inv = inverse_det_dual(group, g, N + 1)
    return CharacterSeries(g, h_tau, [chi * c for c in inv])


def closed_form_character(group: ReflectionGroup, params: ParameterFunction,
                          U: RepData, r: int, g: GroupElement, N: int) -> CharacterSeries:
    """t^h0 det_U(1 - g t^r) / det_{h^*}(1 - g t)."""
    h0 = DunklSystem(group, params).lowest_eigenvalue()
    num = [Fraction(0)] * (N + 1)
    for i, c in enumerate(det_one_minus(U.matrix_of(g))):
        if i * r <= N:
            num[i * r] = c
    return CharacterSeries(g, h0, series_mul(num, inverse_det_dual(group, g, N + 1), N + 1))


@dataclass
class EulerCheck:
    element: GroupElement
    ok: bool
    residual: CharacterSeries
    closed_form_residual: CharacterSeries
    lowest_weights: list


def euler_character_identity(Q: GradedQuotient, U: RepData, r: int, g: GroupElement,
                             N: int | None = None) -> EulerCheck:
    """Compare chi_A(g, t) with sum_i (-1)^i chi_{M_c(wedge^i U)}(g, t) and with
    the closed form, through degree N (default: Q's cutoff)."""
    group, params = Q.group, Q.params
    N = Q.cutoff if N is None else N
    if N > Q.cutoff:
        raise DomainError("N exceeds the quotient cutoff")
    chi_a = character_series(Q, g)
    chi_a = CharacterSeries(g, chi_a.shift, chi_a.coeffs[: N + 1])
    h0 = chi_a.shift
    total = [Fraction(0)] * (N + 1)
    lowest = []
    ell = U.dim
    for i in range(ell + 1):
        dim_i = _binom(ell, i)

        def tr(h, i=i):
            return U.wedge_traces(h)[i]

        h_i = lowest_weight_of(group, params, tr, dim_i)
        lowest.append(h_i)
        std = standard_character(group, params, tr, dim_i, g, N, h_i)
        part = std.aligned(h0, N + 1)
        sign = 1 if i % 2 == 0 else -1
        total = [a + sign * b for a, b in zip(total, part)]
    alt = CharacterSeries(g, h0, total)
    closed = closed_form_character(group, params, U, r, g, N)
    residual = alt - chi_a
    closed_res = closed - chi_a
    return EulerCheck(g, residual.is_zero() and closed_res.is_zero(), residual, closed_res, lowest)


def _binom(a: int, b: int) -> int:
    from math import comb

    return comb(a, b)


# ---------------------------------------------------------------------------
# finite-dimensional quotients


@dataclass
class FiniteDim:
    finite: bool
    dimension: int | None
    cutoff: int

    def __str__(self):
        return f"finite({self.dimension})" if self.finite else "unknown_at_cutoff"


def finite_dim_decide(Q: GradedQuotient) -> FiniteDim:
    """finite(total) if some graded piece through the cutoff vanishes (then all
    later ones do, the quotient being a graded ring generated in degree 0)."""
    dims = Q.hilbert_series()
    if 0 in dims:
        z = dims.index(0)
        return FiniteDim(True, sum(dims[:z]), Q.cutoff)
    return FiniteDim(False, None, Q.cutoff)


def gorenstein_check(Q: GradedQuotient) -> bool:
    """True iff the top graded piece is one-dimensional and multiplication
    A_i x A_{top-i} -> A_top is a perfect pairing for every i."""
    top = Q.top_degree()
    if top is None:
        raise DomainError("gorenstein_check needs a finite-dimensional quotient")
    socle = Q.quotient_basis(top)
    if len(socle) != 1:
        return False
    s = socle[0]
    for i in range(top + 1):
        left = Q.quotient_basis(i)
        right = Q.quotient_basis(top - i)
        if len(left) != len(right):
            return False
        mat = [[Q.multiply(a, b).get(s, Fraction(0)) for b in right] for a in left]
        if not determinant(mat):
            return False
    return True


# ---------------------------------------------------------------------------
# rank one: brute force on M_c(eta^p)


@dataclass
class Rank1BruteForce:
    dims: list[int]
    traces: list[list]          # traces[j][d] = trace of s^j on degree d of L
    singular_degrees: list[int]
    lowest_weights: dict         # degree -> m with lowest weight eta^m


def rank1_brute_force(c: Sequence[Scalar], l: int, p: int, cutoff: int) -> Rank1BruteForce:
    """L_c(eta^p) and the singular vectors of M_c(eta^p) in Z/lZ, from the Gram
    radical and kernels of the Dunkl operator (no closed formulas used)."""
    from .dunkl import eta_character
    from .groups import build_group

    group = build_group(l, 1)
    params = ParameterFunction.rank1(tuple(c))
    tau = eta_character(l, p)
    Q = irreducible_quotient(group, params, cutoff, tau=tau, translation=False)
    traces = []
    for j in range(l):
        g = group.s(0, j) if j else group.identity()
        traces.append(character_series(Q, g).coeffs)
    system = DunklSystem(group, params, tau)
    singular = []
    weights = {}
    for d in range(1, cutoff + 1):
        if not system.apply(Polynomial.monomial((d,)), 0):
            singular.append(d)
            weights[d] = (p - d) % l
    return Rank1BruteForce(Q.hilbert_series(), traces, singular, weights)


@dataclass
class GorensteinReducible:
    c: tuple
    l: int
    degree: int             # A = C[x] / (x^degree)
    smaller_singular: int   # a singular degree below it
    hilbert: list


def rank1_gorenstein_counterexample(l: int, candidates: Iterable[Sequence[Scalar]],
                                    cutoff: int = 12) -> GorensteinReducible | None:
    """First c among ``candidates`` for which M_c / (x^e), with x^e singular,
    is Gorenstein but not irreducible (the form has a nonzero radical on it)."""
    from .groups import build_group

    group = build_group(l, 1)
    for c in candidates:
        params = ParameterFunction.rank1(tuple(c))
        system = DunklSystem(group, params)
        singular = [d for d in range(1, cutoff) if not system.apply(Polynomial.monomial((d,)), 0)]
        if len(singular) < 2:
            continue
        e = singular[-1]
        Q = submodule_closure(group, params, [Polynomial.monomial((e,))], cutoff)
        if finite_dim_decide(Q).finite and gorenstein_check(Q) and not radical_vanishes_on(Q):
            return GorensteinReducible(tuple(c), l, e, singular[0], Q.hilbert_series())
    return None
