from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cherednik.dunkl import DunklSystem, SL2Triple, eta_character, lowest_eigenvalue
from cherednik.errors import UnsupportedError
from cherednik.exact import root_of_unity
from cherednik.groups import ParameterFunction, act_on_vector, build_group
from cherednik.poly import Polynomial, graded_basis, group_act_poly, parse_poly

from conftest import to_sympy_poly

X = sympy.symbols("x1:4")
E = sympy.Symbol("e")
coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(n, max_deg=4):
    mono = st.tuples(*[st.integers(0, max_deg)] * n)
    return st.dictionaries(mono, coef, min_size=1, max_size=5).map(lambda d: Polynomial(n, d))


def sympy_dunkl_typeA(f, i, k, n):
    """Textbook S_n Dunkl operator, computed symbolically."""
    out = sympy.diff(f, X[i])
    for j in range(n):
        if j != i:
            swapped = f.subs({X[i]: X[j], X[j]: X[i]}, simultaneous=True)
            out -= k * sympy.cancel((f - swapped) / (X[i] - X[j]))
    return sympy.expand(out)


def sympy_dunkl_B2(f, i, k, c):
    j = 1 - i
    swap = f.subs({X[i]: X[j], X[j]: X[i]}, simultaneous=True)
    flip = f.subs({X[i]: -X[j], X[j]: -X[i]}, simultaneous=True)
    neg = f.subs(X[i], -X[i])
    out = sympy.diff(f, X[i])
    out -= k * (sympy.cancel((f - swap) / (X[i] - X[j])) + sympy.cancel((f - flip) / (X[i] + X[j])))
    out -= c * sympy.cancel((f - neg) / X[i])
    return sympy.expand(out)


@settings(max_examples=25, deadline=None)
@given(f=polys(3), k=coef)
def test_typeA_matches_textbook_formula(f, k):
    G = build_group(1, 3)
    S = DunklSystem(G, ParameterFunction.type_a(k))
    kk = sympy.Rational(k.numerator, k.denominator)
    for i in range(3):
        assert to_sympy_poly(S.apply(f, i), X) == sympy_dunkl_typeA(to_sympy_poly(f, X), i, kk, 3)


@settings(max_examples=25, deadline=None)
@given(f=polys(2), k=coef, c=coef)
def test_B2_matches_textbook_formula(f, k, c):
    G = build_group(2, 2)
    S = DunklSystem(G, ParameterFunction.wreath(k, (c,)))
    kk, cc = (sympy.Rational(v.numerator, v.denominator) for v in (k, c))
    for i in range(2):
        assert to_sympy_poly(S.apply(f, i), X) == sympy_dunkl_B2(to_sympy_poly(f, X), i, kk, cc)


def test_rank1_cyclic_matches_symbolic():
    # T f = f' - sum_j 2c_j/(1 - e^-j) (f(x) - f(e^-j x)) / x, reduced mod Phi_3
    l = 3
    c = (Fraction(1, 3), Fraction(-2, 5))
    G = build_group(l, 1)
    S = DunklSystem(G, ParameterFunction.rank1(c))
    phi = sympy.cyclotomic_poly(l, E)
    x = X[0]
    for d in range(1, 7):
        ours = S.apply(Polynomial.monomial((d,)), 0)
        # e^-j = e^(l-j); 1/(1 - e^-j) computed by sympy's inversion mod Phi
        expected = 0
        for j, cj in enumerate(c, start=1):
            inv = sympy.invert(1 - E ** (l - j), phi, E)
            expected += 2 * sympy.Rational(cj.numerator, cj.denominator) * inv * (1 - E ** ((l - j) * d)) * x ** (d - 1)
        expected = d * x ** (d - 1) - expected
        diff = sympy.expand(to_sympy_poly(ours, X, E) - expected)
        assert sympy.rem(sympy.Poly(diff, x, E).as_expr(), phi, E) == 0


def test_hand_values():
    S = DunklSystem(build_group(1, 2), ParameterFunction.type_a(Fraction(1, 3)))
    assert S.apply(parse_poly("x1", 2), 0) == Polynomial.constant(2, Fraction(2, 3))
    R = DunklSystem(build_group(2, 1), ParameterFunction.rank1((Fraction(1, 3),)))
    assert R.apply(parse_poly("x1", 1), 0) == Polynomial.constant(1, Fraction(1, 3))


@pytest.mark.parametrize("l,n,params", [
    (1, 3, ParameterFunction.type_a(Fraction(2, 3))),
    (2, 2, ParameterFunction.wreath(Fraction(1, 2), (Fraction(1),))),
    (3, 2, ParameterFunction.wreath(Fraction(1, 5), (Fraction(2, 7), 1 + root_of_unity(3, 1)))),
])
def test_commutativity_and_equivariance(l, n, params):
    G = build_group(l, n)
    S = DunklSystem(G, params)
    for d in range(6):
        for m in graded_basis(n, d):
            f = Polynomial.monomial(m)
            for i in range(n):
                for j in range(i + 1, n):
                    assert S.apply(S.apply(f, j), i) == S.apply(S.apply(f, i), j)
    # g T_y g^{-1} = T_{g y}
    for g in G.generators:
        ginv = g.inverse()
        for m in graded_basis(n, 4):
            f = Polynomial.monomial(m)
            for i in range(n):
                y = [Fraction(int(a == i)) for a in range(n)]
                lhs = group_act_poly(g, S.apply(group_act_poly(ginv, f), i))
                assert lhs == S.apply(f, act_on_vector(g, y))


@pytest.mark.parametrize("n,r", [(2, 1), (2, 3), (3, 2), (3, 4), (4, 3)])
def test_typeA_lowest_eigenvalue(n, r):
    G = build_group(1, n)
    assert lowest_eigenvalue(G, ParameterFunction.type_a(Fraction(r, n))) == Fraction((1 - r) * (n - 1), 2)


@pytest.mark.parametrize("l,n,params", [
    (1, 3, ParameterFunction.type_a(Fraction(2, 3))),
    (3, 2, ParameterFunction.wreath(Fraction(1, 5), (Fraction(2, 7), root_of_unity(3, 2)))),
])
def test_grading_element_acts_by_degree(l, n, params):
    G = build_group(l, n)
    S = DunklSystem(G, params)
    h = S.lowest_eigenvalue(ambient=True)
    for d in range(5):
        for m in graded_basis(n, d):
            f = Polynomial.monomial(m)
            assert S.grading_apply(f) == f.scale(h + d)


@pytest.mark.parametrize("l,n,params", [
    (1, 3, ParameterFunction.type_a(Fraction(2, 3))),
    (2, 2, ParameterFunction.wreath(Fraction(1, 2), (Fraction(1),))),
])
def test_sl2_relations(l, n, params):
    T = SL2Triple(build_group(l, n), params)
    for d in range(6):
        for m in graded_basis(n, d):
            f = Polynomial.monomial(m)
            assert T.E(T.F(f)) - T.F(T.E(f)) == T.H(f)
            assert T.H(T.E(f)) - T.E(T.H(f)) == T.E(f).scale(2)
            assert T.H(T.F(f)) - T.F(T.H(f)) == T.F(f).scale(-2)


def test_sl2_one_variable_weyl_algebra():
    T = SL2Triple(build_group(2, 1), ParameterFunction.rank1((Fraction(0),)))
    x = parse_poly("x1", 1)
    assert T.E(T.F(x)) - T.F(T.E(x)) == x.scale(Fraction(3, 2))


def test_sl2_example_value():
    T = SL2Triple(build_group(1, 3), ParameterFunction.type_a(Fraction(2, 3)))
    x1 = parse_poly("x1", 3)
    # ambient grading eigenvalue 3/2 - 3k + 1 at k = 2/3 on degree 1
    assert T.E(T.F(x1)) - T.F(T.E(x1)) == x1.scale(Fraction(1, 2))


def test_sl2_needs_real_group():
    with pytest.raises(UnsupportedError):
        SL2Triple(build_group(3, 2), ParameterFunction.wreath(0, (0, 0)))


def test_eta_character_values():
    G = build_group(4, 1)
    chi = eta_character(4, 3)
    assert chi(G.s(0, 1)) == root_of_unity(4, 3)
    assert chi(G.identity()) == 1
