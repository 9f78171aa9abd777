import sys

import sympy

from cherednik.exact import Cyclotomic
from cherednik.poly import Polynomial


def to_sympy_scalar(x, e):
    """Exact scalar as a sympy expression in the symbol e."""
    if isinstance(x, Cyclotomic):
        return sum(sympy.Rational(c.numerator, c.denominator) * e**j for j, c in enumerate(x.coeffs))
    return sympy.Rational(x.numerator, x.denominator) if hasattr(x, "denominator") else sympy.Integer(x)


def to_sympy_poly(f: Polynomial, xs, e=None):
    e = e if e is not None else sympy.Symbol("e")
    out = 0
    for mono, c in f.terms.items():
        term = to_sympy_scalar(c, e)
        for x, a in zip(xs, mono):
            term *= x**a
        out += term
    return sympy.expand(out)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
