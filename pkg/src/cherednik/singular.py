"""Closed-form singular vectors and the parameter loci around them.

Residues at infinity use Res_inf omega = -(coefficient of z^-1 in the
expansion at infinity). Both families are expanded in a single variable:

* S_n:  prod_j (z - x_j)^k / (z - x_i) = z^(nk - 1) * prod_j (1 - x_j u)^k / (1 - x_i u)
  with u = 1/z;
* G(l,1,n): the integrand becomes x_i^q z^(pl - l - 1) times a power series
  in w = z^-l, whose coefficients are polynomials in k.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, IntegrityError
from .exact import (FormalParamPoly, Scalar, as_rational, formal_div_exact,
                    is_positive_integer, qdiv, root_of_unity)
from .groups import ParameterFunction, ReflectionGroup, build_group
from .dunkl import Character, DunklSystem
from .linalg import kernel
from .poly import Polynomial, graded_basis, group_act_poly


# ---------------------------------------------------------------------------
# parameter records


@dataclass(frozen=True)
class TypeAParams:
    n: int
    r: int

    def __post_init__(self):
        if self.n < 2 or self.r < 1:
            raise DomainError("need n >= 2 and r >= 1")
        if self.r % self.n == 0:
            raise DomainError(f"n = {self.n} divides r = {self.r}")

    @property
    def k(self) -> Fraction:
        return Fraction(self.r, self.n)

    @property
    def d(self) -> int:
        return math.gcd(self.r, self.n)

    def group(self) -> ReflectionGroup:
        return build_group(1, self.n)

    def params(self) -> ParameterFunction:
        return ParameterFunction.type_a(self.k)


@dataclass(frozen=True)
class WreathParams:
    """r = (p - 1) l + q with 1 <= q <= l - 1; s is the largest integer < p/n."""

    l: int
    n: int
    r: int
    k: Scalar = Fraction(0)
    c: tuple = ()

    def __post_init__(self):
        if self.l < 2 or self.n < 1 or self.r < 1:
            raise DomainError("need l >= 2, n >= 1, r >= 1")
        if self.r % self.l == 0:
            raise DomainError(f"l = {self.l} divides r = {self.r}")
        if self.c and len(self.c) != self.l - 1:
            raise DomainError(f"need {self.l - 1} values c_1..c_{self.l - 1}")

    @property
    def q(self) -> int:
        return self.r % self.l

    @property
    def p(self) -> int:
        return (self.r - self.q) // self.l + 1

    @property
    def s(self) -> int:
        return (self.p - 1) // self.n

    def with_c(self, c: Sequence[Scalar]) -> "WreathParams":
        return WreathParams(self.l, self.n, self.r, self.k, tuple(c))

    def group(self) -> ReflectionGroup:
        return build_group(self.l, self.n)

    def params(self) -> ParameterFunction:
        c = self.c or (Fraction(0),) * (self.l - 1)
        if self.n == 1:
            return ParameterFunction.rank1(c)
        return ParameterFunction.wreath(self.k, c)


# ---------------------------------------------------------------------------
# expansions at infinity


@dataclass
class LaurentTail:
    """z^exponent * sum_a coeffs[a] * v^a with v = z^-step.

    ``exponent`` may depend on the parameter; it is kept as a FormalParamPoly
    and must be an integer constant once assembled.
    """

    exponent: FormalParamPoly
    step: int
    coeffs: list

    def integral_exponent(self) -> int:
        if self.exponent.degree() > 0:
            raise IntegrityError(f"non-integral total exponent {self.exponent}")
        e = as_rational(self.exponent.coeffs[0] if self.exponent.coeffs else Fraction(0))
        if e is None or e.denominator != 1:
            raise IntegrityError(f"non-integral total exponent {self.exponent}")
        return int(e)

    def residue(self):
        """-(coefficient of z^-1); zero when no term has that exponent."""
        e = self.integral_exponent()
        a, rem = divmod(e + 1, self.step)
        if rem or a < 0 or a >= len(self.coeffs):
            if rem == 0 and a >= len(self.coeffs):
                raise DomainError("expansion truncated before the residue term")
            return None
        return self.coeffs[a]


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def _binom_scalar(mu: Scalar, a: int) -> Scalar:
    out: Scalar = Fraction(1)
    for i in range(a):
        out = qdiv(out * (mu - i), i + 1)
    return out


def typeA_singular(params: TypeAParams) -> list[Polynomial]:
    """f_i = Res_inf prod_j (z - x_j)^(r/n) dz / (z - x_i), i = 1..n."""
    n, r, k = params.n, params.r, params.k
    tail = LaurentTail(FormalParamPoly.constant(n * k - 1), 1, [])
    out = []
    binoms = [_binom_scalar(k, a) * (-1) ** a for a in range(r + 1)]
    for i in range(n):
        terms: dict = {}
        # [u^r] prod_j (1 - x_j u)^k * sum_b (x_i u)^b
        for comp in _compositions(r, n + 1):
            a, b = comp[:n], comp[n]
            coeff: Scalar = Fraction(1)
            for aj in a:
                coeff = coeff * binoms[aj]
            if not coeff:
                continue
            mono = list(a)
            mono[i] += b
            mono = tuple(mono)
            v = terms.get(mono, 0) + coeff
            if v:
                terms[mono] = v
            else:
                terms.pop(mono, None)
        tail.coeffs = [None] * r + [Polynomial(n, terms)]
        res = tail.residue()
        out.append(-res)
    return out


def _wreath_formal(params: WreathParams, i: int) -> dict:
    """mono -> FormalParamPoly: -[w^(p-1)] x_i^q prod_j (1 - x_j^l w)^kappa / (1 - x_i^l w)."""
    l, n, p, q = params.l, params.n, params.p, params.q
    binoms = [FormalParamPoly.binomial(a) * (-1) ** a for a in range(p)]
    terms: dict = {}
    for comp in _compositions(p - 1, n + 1):
        a, b = comp[:n], comp[n]
        coeff = FormalParamPoly.constant(1)
        for aj in a:
            coeff = coeff * binoms[aj]
        mono = [l * aj for aj in a]
        mono[i] += l * b + q
        mono = tuple(mono)
        terms[mono] = terms.get(mono, FormalParamPoly.constant(0)) - coeff
    return {m: c for m, c in terms.items() if c}


def wreath_exponent(params: WreathParams) -> FormalParamPoly:
    """Total z-exponent of the integrand: (p - n kappa) l - 1 + n l kappa - l."""
    kappa = FormalParamPoly.kappa()
    l, n, p = params.l, params.n, params.p
    return (FormalParamPoly.constant(p) - kappa * n) * l - 1 + kappa * (n * l) - l


def wreath_singular_formal(params: WreathParams) -> list[dict]:
    """The f_i with coefficients in Q[kappa], after exact division by
    (kappa - 1)...(kappa - s)."""
    tail = LaurentTail(wreath_exponent(params), params.l, [])
    e = tail.integral_exponent()
    if e != params.p * params.l - params.l - 1:
        raise IntegrityError("unexpected integrand exponent")
    norm = FormalParamPoly.falling_shift(params.s)
    out = []
    for i in range(params.n):
        raw = _wreath_formal(params, i)
        out.append({m: formal_div_exact(c, norm) for m, c in raw.items()})
    return out


def wreath_singular(params: WreathParams, check_locus: bool = True) -> list[Polynomial]:
    """f_i = Res_inf z^((p - nk) l - 1) / ((k-1)...(k-s)) prod_j (z^l - x_j^l)^k x_i^q dz / (z^l - x_i^l)."""
    if check_locus and params.c and er_residual(params):
        raise DomainError("parameters are not on E_r")
    out = []
    for formal in wreath_singular_formal(params):
        terms = {m: c(params.k) for m, c in formal.items()}
        f = Polynomial(params.n, terms)
        if not f:
            raise IntegrityError("wreath singular vector vanished")
        out.append(f)
    return out


# ---------------------------------------------------------------------------
# parameter loci


def er_coefficients(l: int, q: int) -> list[Scalar]:
    """[2 (1 - e^(-jq)) / (1 - e^(-j)) for j = 1..l-1]."""
    out = []
    for j in range(1, l):
        out.append(qdiv(2 * (1 - root_of_unity(l, -j * q)), 1 - root_of_unity(l, -j)))
    return out


def er_residual(params: WreathParams) -> Scalar:
    """l (n-1) k + 2 sum_j c_j (1 - e^(-jq)) / (1 - e^(-j)) - r."""
    c = params.c or (Fraction(0),) * (params.l - 1)
    acc: Scalar = params.l * (params.n - 1) * params.k - params.r
    for cj, a in zip(c, er_coefficients(params.l, params.q)):
        acc = acc + cj * a
    return acc


def solve_er(l: int, n: int, r: int, k: Scalar, c_free: Sequence[Scalar] = ()) -> WreathParams:
    """Point of E_r with the given k and c_1..c_{l-2}, solving for c_{l-1}."""
    c_free = tuple(c_free) or (Fraction(0),) * (l - 2)
    if len(c_free) != l - 2:
        raise DomainError(f"need {l - 2} free values c_1..c_{l - 2}")
    base = WreathParams(l, n, r, k, c_free + (Fraction(0),))
    lead = er_coefficients(l, base.q)[-1]
    last = qdiv(-er_residual(base), lead)
    return base.with_c(c_free + (last,))


def sigma_r(params: WreathParams) -> set[Fraction]:
    """{P/Q : gcd(P, Q) = 1, 1 <= P <= p - 1, 1 <= Q <= n}."""
    return {Fraction(P, Q) for P in range(1, params.p) for Q in range(1, params.n + 1)
            if math.gcd(P, Q) == 1}


def sigma_r_contains(k: Scalar, params: WreathParams) -> bool:
    q = as_rational(k)
    return q is not None and q in sigma_r(params)


def support_member(point: Sequence[Scalar], params: TypeAParams,
                   fs: Sequence[Polynomial] | None = None) -> bool:
    """All f_i vanish at the point."""
    if len(point) != params.n:
        raise DomainError(f"point needs {params.n} coordinates")
    fs = fs if fs is not None else typeA_singular(params)
    return all(not f.evaluate(point) for f in fs)


def pattern_member(point: Sequence[Scalar], params: TypeAParams) -> bool:
    """Every multiplicity of a coordinate value is divisible by n/d."""
    if len(point) != params.n:
        raise DomainError(f"point needs {params.n} coordinates")
    step = params.n // params.d
    counts: dict = {}
    for x in point:
        counts[x] = counts.get(x, 0) + 1
    return all(m % step == 0 for m in counts.values())


def pattern_point(pattern: Sequence[int], rng: random.Random) -> list[Fraction]:
    """Coordinates with the given multiplicities, distinct small rational values
    per block, shuffled."""
    values: list[Fraction] = []
    while len(values) < len(pattern):
        v = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
        if v not in values:
            values.append(v)
    point = [v for v, m in zip(values, pattern) for _ in range(m)]
    rng.shuffle(point)
    return point


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# residue lemma


@dataclass
class ResidueReport:
    residues: list
    polynomial: bool
    implication_holds: bool


def residue_lemma_oracle(mu: Sequence[Scalar], y: Sequence[Scalar]) -> ResidueReport:
    """For a(z) = prod_j (z - y_j)^mu_j with distinct y_j, compute
    Res_inf z^i a(z) dz for i = 0..p-2 and whether a is a polynomial."""
    p = len(mu)
    if p != len(y) or p == 0:
        raise DomainError("need equally many exponents and points")
    if len(set(y)) != p:
        raise DomainError("points must be distinct")
    M = as_rational(sum(mu, Fraction(0)))
    if M is None or M.denominator != 1:
        raise DomainError("sum of exponents must be an integer")
    M = int(M)
    if M <= -p:
        raise DomainError("sum of exponents must exceed -p")
    # c_a = [u^a] prod_j (1 - y_j u)^mu_j
    top = M + p - 1
    series = [Fraction(1)] + [Fraction(0)] * max(top, 0)
    for mj, yj in zip(mu, y):
        factor = [_binom_scalar(mj, a) * (-yj) ** a for a in range(len(series))]
        new = [Fraction(0)] * len(series)
        for i, s in enumerate(series):
            if s:
                for j in range(len(series) - i):
                    if factor[j]:
                        new[i + j] = new[i + j] + s * factor[j]
        series = new
    residues = []
    for i in range(p - 1):
        idx = M + i + 1
        residues.append(-series[idx] if 0 <= idx < len(series) else Fraction(0))
    polynomial = all((q := as_rational(m)) is not None and q.denominator == 1 and q >= 0 for m in mu)
    vanish = all(not x for x in residues)
    return ResidueReport(residues, polynomial, (not vanish) or polynomial)


# ---------------------------------------------------------------------------
# rank one


@dataclass
class Rank1Data:
    l: int
    c: tuple

    def f(self, p: int) -> Scalar:
        """f_c(e^p) = sum_j 2 c_j / (1 - e^(-j)) e^(pj)."""
        acc: Scalar = Fraction(0)
        for j, cj in enumerate(self.c, start=1):
            if cj:
                acc = acc + qdiv(2 * cj, 1 - root_of_unity(self.l, -j)) * root_of_unity(self.l, p * j)
        return acc

    def gap(self, p: int, m: int) -> Scalar:
        return self.f(p) - self.f(m)

    def multiplicity(self, p: int, m: int) -> int:
        """[M_c(eta^p) : L_c(eta^m)]; the diagonal p = m is 1."""
        l = self.l
        if (p - m) % l == 0:
            return 1
        d = self.gap(p, m)
        if not is_positive_integer(d):
            return 0
        return int((int(as_rational(d)) - (p - m)) % l == 0)

    def b(self, p: int) -> int | None:
        """Smallest positive integer f_c(e^p) - f_c(e^m) congruent to p - m mod l."""
        best = None
        for m in range(self.l):
            if m % self.l == p % self.l:
                continue
            d = self.gap(p, m)
            if is_positive_integer(d):
                v = int(as_rational(d))
                if (v - (p - m)) % self.l == 0 and (best is None or v < best):
                    best = v
        return best

    def singular_degrees(self, p: int) -> dict[int, int]:
        """degree -> m for the singular vectors of M_c(eta^p) predicted by the multiplicities."""
        return {int(as_rational(self.gap(p, m))): m for m in range(self.l)
                if (p - m) % self.l and self.multiplicity(p, m)}

    def phi(self, p: int, e: int) -> Scalar:
        """T x^e = phi(e) x^(e-1) on M_c(eta^p)."""
        return e - self.f(p) + self.f(p - e)

    def character(self, p: int, j: int, N: int) -> list:
        """Coefficients of t^(h + d), d = 0..N, of Tr(s^j t^h) on L_c(eta^p)."""
        b = self.b(p)
        out = []
        for d in range(N + 1):
            if b is not None and d >= b:
                out.append(Fraction(0))
            else:
                out.append(root_of_unity(self.l, p * j - d * j))
        return out

    def lowest_weight(self, p: int) -> Scalar:
        return Fraction(1, 2) - self.f(p)

    def params(self) -> ParameterFunction:
        return ParameterFunction.rank1(self.c)


def rank1_data(c: Sequence[Scalar], l: int) -> Rank1Data:
    if l < 2:
        raise DomainError("rank-one data needs l >= 2")
    if len(c) != l - 1:
        raise DomainError(f"need {l - 1} values c_1..c_{l - 1}")
    return Rank1Data(l, tuple(c))


def c_from_values(l: int, values: Sequence[Scalar]) -> tuple:
    """c with f_c(e^p) = values[p] (the values must sum to zero)."""
    if len(values) != l:
        raise DomainError(f"need {l} values")
    if sum(values, Fraction(0)):
        raise DomainError("values of f_c on the l-th roots of unity sum to zero")
    c = []
    for j in range(1, l):
        a: Scalar = Fraction(0)
        for p, v in enumerate(values):
            a = a + v * root_of_unity(l, -p * j)
        a = qdiv(a, l)
        c.append(qdiv(a * (1 - root_of_unity(l, -j)), 2))
    return tuple(c)


def resonant_point(l: int, rng: random.Random, p: int | None = None, m: int | None = None,
                   gap: int | None = None) -> Rank1Data:
    """Random c for which f_c(e^p) - f_c(e^m) is a positive integer congruent
    to p - m mod l."""
    p = rng.randrange(l) if p is None else p
    if m is None:
        m = rng.choice([x for x in range(l) if x != p])
    if gap is None:
        base = (p - m) % l or l
        gap = base + l * rng.randrange(3)
    values = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(l)]
    values[p] = values[m] + gap
    mean = sum(values, Fraction(0)) / l
    values = [v - mean for v in values]
    return rank1_data(c_from_values(l, values), l)


# ---------------------------------------------------------------------------
# generic solver


def generic_singular_solver(group: ReflectionGroup, params: ParameterFunction, degree: int,
                            tau: Character | None = None) -> list[Polynomial]:
    """Basis of the degree-d vectors killed by every Dunkl operator."""
    if degree < 1:
        raise DomainError("degree must be positive")
    system = DunklSystem(group, params, tau)
    rows: dict = {}
    for i in range(group.n):
        for nu, img in system.matrix(degree, i).items():
            for rho, v in img.items():
                rows.setdefault((i, rho), {})[nu] = v
    basis = kernel(list(rows.values()), graded_basis(group.n, degree))
    return [Polynomial(group.n, v) for v in basis]


def weight_pattern(group: ReflectionGroup, fs: Sequence[Polynomial], q: int) -> bool:
    """s_i^m f_j = e^(-mq [i = j]) f_j for all i, j, m; and transpositions permute the f_j."""
    n, l = group.n, group.l
    for i in range(n):
        for m in range(1, l):
            g = group.s(i, m)
            for j, f in enumerate(fs):
                expect = f.scale(root_of_unity(l, -m * q)) if i == j else f
                if group_act_poly(g, f) != expect:
                    return False
    return permutes(group, fs)


def permutes(group: ReflectionGroup, fs: Sequence[Polynomial]) -> bool:
    """sigma_{i,j} f_a = f_{sigma(a)} for all transpositions."""
    n = group.n
    for i in range(n):
        for j in range(i + 1, n):
            g = group.sigma(i, j, 0)
            for a, f in enumerate(fs):
                b = j if a == i else i if a == j else a
                if group_act_poly(g, f) != fs[b]:
                    return False
    return True
