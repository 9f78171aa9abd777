import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cherednik.dunkl import DunklSystem, eta_character
from cherednik.errors import DomainError
from cherednik.exact import root_of_unity
from cherednik.groups import ParameterFunction, build_group
from cherednik.modules import rank1_brute_force
from cherednik.poly import Polynomial, parse_poly
from cherednik.singular import (TypeAParams, WreathParams, c_from_values, er_residual,
                                generic_singular_solver, partitions, pattern_member, pattern_point,
                                permutes, rank1_data, residue_lemma_oracle, resonant_point, sigma_r,
                                sigma_r_contains, solve_er, support_member, typeA_singular,
                                weight_pattern, wreath_singular)

from conftest import to_sympy_poly

X = sympy.symbols("x1:5")
U, K = sympy.symbols("u kappa")
fr = st.fractions(min_value=-4, max_value=4, max_denominator=7)


def killed(group, params, fs):
    S = DunklSystem(group, params)
    return all(not S.apply(f, i) for f in fs for i in range(group.n))


# ---------------------------------------------------------------- type A

@pytest.mark.parametrize("n,r", [(2, 1), (2, 3), (3, 2), (3, 1)])
def test_typeA_matches_sympy_expansion(n, r):
    tp = TypeAParams(n, r)
    fs = typeA_singular(tp)
    k = sympy.Rational(r, n)
    xs = X[:n]
    for i, f in enumerate(fs):
        gen = sympy.prod([(1 - x * U) ** k for x in xs]) / (1 - xs[i] * U)
        coeff = sympy.series(gen, U, 0, r + 1).removeO().coeff(U, r)
        assert to_sympy_poly(f, xs) == sympy.expand(-coeff)


def test_typeA_21():
    f1, f2 = typeA_singular(TypeAParams(2, 1))
    assert f2 == -f1
    assert f1 == parse_poly("x2 - x1", 2).scale(Fraction(1, 2))


@pytest.mark.parametrize("n,r", [(2, 1), (2, 3), (3, 2), (3, 4), (4, 3), (4, 2)])
def test_typeA_properties(n, r):
    tp = TypeAParams(n, r)
    fs = typeA_singular(tp)
    assert all(f.is_homogeneous() and f.degree() == r for f in fs)
    assert not sum(fs[1:], fs[0])
    assert killed(tp.group(), tp.params(), fs)
    assert permutes(tp.group(), fs)


@pytest.mark.parametrize("n,r", [(2, 3), (3, 2), (3, 4)])
def test_typeA_solver_kernel(n, r):
    tp = TypeAParams(n, r)
    kernel = generic_singular_solver(tp.group(), tp.params(), r)
    assert len(kernel) == n - 1


def test_typeA_rejects_divisible():
    with pytest.raises(DomainError):
        TypeAParams(3, 6)


# ---------------------------------------------------------------- wreath

def wreath_oracle(l, n, r, k):
    """-x_i^q [w^(p-1)] prod (1 - x_j^l w)^kappa / (1 - x_i^l w) / prod (kappa - i), via sympy."""
    q = r % l
    p = (r - q) // l + 1
    s = (p - 1) // n
    xs = X[:n]
    out = []
    for i in range(n):
        gen = sympy.prod([(1 - x**l * U) ** K for x in xs]) / (1 - xs[i] ** l * U)
        coeff = sympy.series(gen, U, 0, p).removeO().coeff(U, p - 1)
        norm = sympy.prod([K - j for j in range(1, s + 1)])
        expr = sympy.cancel(-xs[i] ** q * coeff / norm)
        out.append(sympy.expand(expr.subs(K, k)))
    return out


@pytest.mark.parametrize("l,n,r,k", [(2, 2, 3, Fraction(1, 3)), (3, 2, 5, Fraction(2, 5)), (2, 2, 9, Fraction(1)),
                                     (2, 2, 9, Fraction(2)), (2, 3, 7, Fraction(1, 2))])
def test_wreath_matches_sympy(l, n, r, k):
    W = solve_er(l, n, r, k, (Fraction(1, 3),) * (l - 2))
    fs = wreath_singular(W)
    kk = sympy.Rational(k.numerator, k.denominator)
    assert [to_sympy_poly(f, X[:n]) for f in fs] == wreath_oracle(l, n, r, kk)


@pytest.mark.parametrize("l,n,r", [(2, 2, 1), (2, 2, 3), (3, 2, 1), (3, 2, 2), (3, 2, 4)])
def test_wreath_k0_is_power(l, n, r):
    W = solve_er(l, n, r, Fraction(0))
    fs = wreath_singular(W)
    for i, f in enumerate(fs):
        assert list(f.terms) == [tuple(r if j == i else 0 for j in range(n))]


def test_wreath_example_degree1():
    W = solve_er(2, 2, 1, Fraction(1, 4))
    fs = wreath_singular(W)
    assert all(f.degree() == 1 for f in fs)
    assert killed(W.group(), W.params(), fs)


@pytest.mark.parametrize("k", [Fraction(1), Fraction(2), Fraction(3, 2)])
def test_wreath_s_positive_exact_division(k):
    W = solve_er(2, 2, 9, k)
    assert (W.p, W.s) == (5, 2)
    fs = wreath_singular(W)
    assert all(f and f.degree() == 9 for f in fs)
    assert killed(W.group(), W.params(), fs)


@settings(max_examples=12, deadline=None)
@given(k=fr, c1=fr, case=st.sampled_from([(2, 2, 1), (2, 2, 3), (3, 2, 1), (3, 2, 2), (2, 3, 3)]))
def test_wreath_singular_on_locus(k, c1, case):
    l, n, r = case
    W = solve_er(l, n, r, k, (c1,) * (l - 2))
    assert er_residual(W) == 0
    fs = wreath_singular(W)
    assert killed(W.group(), W.params(), fs)
    assert weight_pattern(W.group(), fs, W.q)


@pytest.mark.parametrize("l,n,r", [(2, 2, 3), (3, 2, 2)])
def test_wreath_solver_kernel_dim(l, n, r):
    W = solve_er(l, n, r, Fraction(1, 5), (Fraction(1, 7),) * (l - 2))
    assert len(generic_singular_solver(W.group(), W.params(), r)) == n


def test_wreath_off_locus_rejected():
    with pytest.raises(DomainError):
        wreath_singular(WreathParams(2, 2, 3, Fraction(1), (Fraction(1),)))


# ---------------------------------------------------------------- loci

@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 4), r=st.integers(1, 15).filter(lambda r: r % 2), k=fr, c=fr)
def test_er_l2_formula(n, r, k, c):
    assert er_residual(WreathParams(2, n, r, k, (c,))) == 2 * (n - 1) * k + 2 * c - r


def test_er_examples():
    assert er_residual(WreathParams(2, 2, 3, Fraction(1, 2), (Fraction(1),))) == 0
    assert er_residual(WreathParams(3, 2, 2, Fraction(0), (Fraction(0), Fraction(0)))) == -2


def test_er_l3_matches_sympy():
    # c_j (1 - e^{-jq}) / (1 - e^{-j}) summed, with e a numeric root of unity
    e = sympy.exp(2 * sympy.pi * sympy.I / 3)
    W = WreathParams(3, 2, 5, Fraction(1, 4), (Fraction(2, 3), Fraction(-1, 5)))
    q = W.q
    expected = 3 * sympy.Rational(1, 4) + 2 * sum(
        sympy.Rational(c.numerator, c.denominator) * (1 - e ** (-j * q)) / (1 - e ** (-j))
        for j, c in enumerate(W.c, start=1)) - 5
    ours = er_residual(W)
    ours_num = sum(sympy.Rational(a.numerator, a.denominator) * e**j for j, a in enumerate(ours.coeffs))
    assert abs(complex(sympy.N(ours_num - expected, 30))) < 1e-20


def test_sigma_r():
    W = WreathParams(2, 2, 3)
    assert sigma_r(W) == {Fraction(1), Fraction(1, 2)}
    assert sigma_r_contains(Fraction(1, 2), W)
    assert not sigma_r_contains(Fraction(1, 3), W)
    assert sigma_r(WreathParams(3, 2, 2)) == set()
    assert not sigma_r_contains(root_of_unity(3, 1), WreathParams(3, 2, 5))


def test_support_examples():
    tp = TypeAParams(4, 2)
    pt = [Fraction(x) for x in (1, 1, 5, 5)]
    assert support_member(pt, tp) and pattern_member(pt, tp)
    pt = [Fraction(x) for x in (1, 2, 3, 4)]
    assert not support_member(pt, tp) and not pattern_member(pt, tp)
    assert support_member([Fraction(7, 3)] * 4, tp)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6), case=st.sampled_from([(4, 2), (6, 4), (3, 1), (4, 1)]))
def test_support_predicates_agree(seed, case):
    tp = TypeAParams(*case)
    fs = typeA_singular(tp)
    rng = random.Random(seed)
    pats = list(partitions(tp.n))
    pat = pats[seed % len(pats)]
    pt = pattern_point(pat, rng)
    assert support_member(pt, tp, fs) == pattern_member(pt, tp)


# ---------------------------------------------------------------- residue lemma

def residue_sympy(mu, y, i):
    """Res_inf z^i a(z) dz = -[u^-1] u^(-2-i) a(1/u)."""
    M = sum(mu)
    series = sympy.prod([(1 - yy * U) ** m for m, yy in zip(mu, y)])
    need = int(M) + i + 1
    if need < 0:
        return 0
    s = sympy.series(series, U, 0, need + 1).removeO()
    return -s.coeff(U, need)


@pytest.mark.parametrize("mu,y", [((1, 1), (1, 2)), ((Fraction(1, 2), Fraction(1, 2)), (1, 2)),
                                  ((Fraction(3, 2), Fraction(1, 2), -1), (0, 3, -2)),
                                  ((Fraction(1, 3), Fraction(2, 3), 2), (1, -1, Fraction(1, 2)))])
def test_residues_match_sympy(mu, y):
    mu = [Fraction(m) for m in mu]
    y = [Fraction(v) for v in y]
    rep = residue_lemma_oracle(mu, y)
    smu = [sympy.Rational(m.numerator, m.denominator) for m in mu]
    sy = [sympy.Rational(v.numerator, v.denominator) for v in y]
    assert [sympy.Rational(r.numerator, r.denominator) for r in rep.residues] == \
        [sympy.nsimplify(residue_sympy(smu, sy, i)) for i in range(len(mu) - 1)]
    assert rep.implication_holds


def test_residue_examples():
    rep = residue_lemma_oracle([Fraction(1), Fraction(1)], [Fraction(1), Fraction(2)])
    assert rep.polynomial and rep.residues == [0]
    rep = residue_lemma_oracle([Fraction(1, 2), Fraction(1, 2)], [Fraction(1), Fraction(2)])
    assert not rep.polynomial and rep.residues[0] != 0


def test_residue_hypotheses_enforced():
    with pytest.raises(DomainError):
        residue_lemma_oracle([Fraction(1, 2), Fraction(1, 3)], [Fraction(0), Fraction(1)])
    with pytest.raises(DomainError):
        residue_lemma_oracle([Fraction(-1), Fraction(-1)], [Fraction(0), Fraction(1)])


# ---------------------------------------------------------------- rank one

def test_rank1_example():
    d = rank1_data((Fraction(3, 2),), 2)
    assert d.gap(0, 1) == 3
    assert d.multiplicity(0, 1) == 1 and d.b(0) == 3
    assert d.multiplicity(1, 0) == 0


def test_rank1_generic():
    d = rank1_data((Fraction(1, 7), Fraction(2, 9)), 3)
    assert all(d.multiplicity(p, m) == 0 for p in range(3) for m in range(3) if p != m)
    assert d.b(0) is None


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_c_from_values_roundtrip(l):
    vals = [Fraction(i * i - 3, 2) for i in range(l)]
    mean = sum(vals) / l
    vals = [v - mean for v in vals]
    d = rank1_data(c_from_values(l, vals), l)
    assert [d.f(p) for p in range(l)] == vals


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10**6), l=st.sampled_from([2, 3, 4]))
def test_rank1_matches_brute_force(seed, l):
    d = resonant_point(l, random.Random(seed))
    for p in range(l):
        b = d.b(p)
        N = max([2 * (b or l)] + list(d.singular_degrees(p)))
        bf = rank1_brute_force(d.c, l, p, N)
        for j in range(l):
            assert bf.traces[j] == d.character(p, j, N)
        assert bf.lowest_weights == d.singular_degrees(p)
        # phi(e) is the scalar of T on x^e
        S = DunklSystem(build_group(l, 1), d.params(), eta_character(l, p))
        for e in range(1, 4):
            assert S.apply(Polynomial.monomial((e,)), 0) == Polynomial.monomial((e - 1,), d.phi(p, e))


def test_generic_solver_generic_params_empty():
    G = build_group(3, 2)
    P = ParameterFunction.wreath(Fraction(2, 9), (Fraction(1, 13), Fraction(3, 17)))
    assert all(not generic_singular_solver(G, P, d) for d in range(1, 5))
