import sympy

from clusterforge.laurent import LaurentPolynomial


def golden(text: str, n: int) -> LaurentPolynomial:
    """Laurent polynomial from a rational expression in u1..un written out by hand."""
    syms = sympy.symbols(" ".join(f"u{i}" for i in range(1, n + 1)))
    if n == 1:
        syms = (syms,)
    expr = sympy.expand(sympy.sympify(text, locals={str(s): s for s in syms}))
    terms = {}
    for mono, coeff in expr.as_coefficients_dict().items():
        powers = mono.as_powers_dict()
        exp = tuple(int(powers.get(s, 0)) for s in syms)
        terms[exp] = terms.get(exp, 0) + int(coeff)
    return LaurentPolynomial(tuple(str(s) for s in syms), terms)


# one line per acceptance criterion, filled in by test_acceptance.py
RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
