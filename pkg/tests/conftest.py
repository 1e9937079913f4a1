import pytest

from hyperjac.curve import C1, C2
from hyperjac.exactfield import QQ, make_quadfield
from hyperjac.jacobian import jacobian, subgroup_closure
from hyperjac.poly import Poly

_acceptance_lines = []


@pytest.fixture
def record_acceptance():
    """Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(number, ok, detail):
        _acceptance_lines.append(f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
        print(_acceptance_lines[-1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def Qi():
    return make_quadfield(-1)


@pytest.fixture(scope="session")
def Qm3():
    return make_quadfield(-3)


@pytest.fixture(scope="session")
def c1_group():
    """The 19 elements of J1(Q), generated by [2*(0,1) - D_inf]."""
    from hyperjac.curve import AffinePoint

    J = jacobian(C1, QQ)
    g = J.from_points(AffinePoint(0, 1), AffinePoint(0, 1))
    return subgroup_closure([g], 19)


@pytest.fixture(scope="session")
def c2_generators(Qm3):
    s = Qm3.gen
    J = jacobian(C2, Qm3)
    g1 = J.make(Poly(Qm3, [1, 1, 1]), Poly(Qm3, [-s, -s]), 2)
    g2 = J.make([1], [0, 0, -1, -1], 2)
    return g1, g2


@pytest.fixture(scope="session")
def c2_group(c2_generators):
    return subgroup_closure(list(c2_generators), 63)


# the 18 nonzero elements of J1(Q) as printed in the source, in its notation
PRINTED_C1_TRIPLES = [
    ("x^2", "-2x + 1"), ("x - 1", "-x^3"), ("x", "x^3 - 1"), ("x", "x^3 + 1"), ("x^2 - x", "-1"),
    ("x^2 - x", "-2x + 1"), ("1", "x^3 - x^2"), ("x^2 - 2x + 1", "x"), ("x - 1", "x^3 - 2"),
    ("x - 1", "-x^3 + 2"), ("x^2 - 2x + 1", "-x"), ("1", "-x^3 + x^2"), ("x^2 - x", "2x - 1"),
    ("x^2 - x", "1"), ("x", "-x^3 - 1"), ("x", "-x^3 + 1"), ("x - 1", "x^3"), ("x^2", "2x - 1"),
]


@pytest.fixture(scope="session")
def printed_c1_triples():
    return [(a, b, 2) for a, b in PRINTED_C1_TRIPLES]


@pytest.fixture(scope="session")
def paper_reports():
    from hyperjac.pipeline import verify_paper

    return {r.name: r for r in verify_paper()}
