import random

import pytest

from hyperjac.curve import C1, C2, INF_PLUS, AffinePoint, make_curve, twist
from hyperjac.errors import BadReduction, EmptyWitnessList, NotInert
from hyperjac.finfield import make_fp, make_fp2
from hyperjac.jacobian import jacobian, subgroup_closure
from hyperjac.zeta import (
    LPolynomial,
    TorsionBoundReport,
    count_points,
    format_factored,
    jacobian_order,
    l_polynomial,
    quadratic_extension,
    strip_prime,
    torsion_bound,
    weil_bound_ok,
)

X6_PLUS_1 = make_curve([1, 0, 0, 0, 0, 0, 1], "x6+1")


def _pair_count(coeffs, p, n=None):
    """Oracle: count pairs (x, y) with y^2 = f(x) over F_p or F_p(sqrt n) by trying every y.

    Uses its own tuple arithmetic, independent of the finfield module.
    """
    if n is None:
        elems = [(a, 0) for a in range(p)]
    else:
        elems = [(a, b) for a in range(p) for b in range(p)]

    def mul(u, v):
        return ((u[0] * v[0] + (n or 0) * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    squares = {}
    for y in elems:
        s = mul(y, y)
        squares[s] = squares.get(s, 0) + 1
    total = 0
    for x in elems:
        acc = (0, 0)
        for c in reversed(coeffs):
            acc = mul(acc, x)
            acc = ((acc[0] + c) % p, acc[1])
        total += squares.get(acc, 0)
    lc_square = (coeffs[6] % p, 0) in squares
    return total + (2 if lc_square else 0)


class TestCounting:
    def test_c1_over_f3(self):
        # f1(0), f1(1), f1(2) = 1, 1, 2 mod 3: squares at x = 0, 1 give four affine points,
        # 2 is a non-residue, and lc = 1 gives two points at infinity
        assert [sum(c * x**i for i, c in enumerate(C1.coeffs)) % 3 for x in range(3)] == [1, 1, 2]
        assert count_points(C1, make_fp(3)) == 6

    @pytest.mark.parametrize(
        "C, p",
        [(C1, 3), (C1, 5), (C1, 11), (C1, 23), (C2, 5), (C2, 11), (X6_PLUS_1, 5), (X6_PLUS_1, 7)],
    )
    def test_against_pair_oracle(self, C, p):
        assert count_points(C, make_fp(p)) == _pair_count(C.coeffs, p)
        F2 = quadratic_extension(p)
        assert count_points(C, F2) == _pair_count(C.coeffs, p, F2.d)

    def test_x6_plus_1_symmetry(self):
        F5 = make_fp(5)
        xs = [x for x in range(5) if (x**6 + 1) % 5 == 0]
        assert sorted(xs) == sorted((-x) % 5 for x in xs)
        assert count_points(X6_PLUS_1, F5) == _pair_count(X6_PLUS_1.coeffs, 5)

    def test_twisted_count(self):
        # over F_p, #C + #C^(d) = 2(p + 1) when d is a non-residue
        p = 11
        assert count_points(C1, make_fp(p)) + count_points(twist(C1, -1), make_fp(p)) == 2 * (p + 1)

    def test_bad_prime_rejected(self):
        with pytest.raises(BadReduction):
            count_points(C1, make_fp(13))
        with pytest.raises(BadReduction):
            l_polynomial(C2, 3)

    def test_parallel_matches_sequential(self):
        F = make_fp2(31, -1)
        assert count_points(C1, F, workers=3) == count_points(C1, F, workers=1) == 862

    def test_extension_choice_does_not_matter(self):
        assert count_points(C1, make_fp2(11, -1)) == count_points(C1, make_fp2(11, 2))
        assert count_points(C1, make_fp2(5, -3)) == count_points(C1, make_fp2(5, 2))


class TestLPolynomial:
    def test_p_squared_orders_via_p1_pm1(self):
        L = l_polynomial(C1, 11)
        assert L(1) * L(-1) == 17689 == 7**2 * 19**2
        L = l_polynomial(C2, 5)
        assert L(1) * L(-1) == 441 == 21**2

    @pytest.mark.parametrize("C, p", [(C1, 3), (C1, 5), (C1, 11), (C2, 5), (C2, 11)])
    def test_functional_equation_consistency(self, C, p):
        L = l_polynomial(C, p)
        assert L.count(1) == count_points(C, make_fp(p))
        assert L.count(2) == count_points(C, quadratic_extension(p))

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 17, 19, 23, 29, 31, 37, 41])
    def test_weil_bound(self, p):
        L = l_polynomial(C1, p)
        assert weil_bound_ok(L)
        assert abs(L.c1) <= int(4 * p**0.5)

    def test_p_squared_order_from_counts_over_p_squared(self):
        # |J(F_{p^2})| is also P2(1) for the L-polynomial of the base change, built from N2 and N4
        L = l_polynomial(C1, 5)
        n2, n4 = L.count(2), L.count(4)
        q = 25
        a1 = n2 - (q + 1)
        a2 = ((q + 1 - n2) ** 2 - (q * q + 1 - n4)) // 2
        assert 1 + a1 + a2 + q * a1 + q * q == jacobian_order(C1, 5, 2)

    def test_weil_violation_rejected(self):
        from hyperjac.errors import NonIntegralC2

        with pytest.raises(NonIntegralC2):
            LPolynomial(3, 10, 0)


class TestJacobianOrders:
    @pytest.mark.parametrize(
        "C, p, order",
        [
            (C1, 11, 17689),
            (C1, 31, 831744),
            (C1, 5, 361),
            (C1, 17, 76608),
            (C2, 5, 441),
            (C2, 11, 13104),
        ],
    )
    def test_reference_orders(self, C, p, order):
        assert jacobian_order(C, p, 2) == order

    def test_p23_order(self):
        assert jacobian_order(C1, 23, 2) == 274113
        assert format_factored(274113) == "3^2 * 7 * 19 * 229"

    def test_p23_certificate(self):
        """J1(F_529) contains a subgroup of order 9 and exponent 3, so 9 divides its order.

        The printed value 91371 = 3 * 7 * 19 * 229 has a single factor of 3.
        """
        F = make_fp2(23, -1)
        J = jacobian(C1, F)
        rng = random.Random(0)
        pts = []
        while len(pts) < 6:
            x = F.element(rng.randrange(F.order))
            y = F.sqrt(C1.poly(F)(x))
            if y is not None:
                pts.append(AffinePoint(x, y))
        Ds = [J.from_points(P, INF_PLUS) for P in pts]
        assert all(274113 * D == J.identity for D in Ds)
        three_part = [(274113 // 9) * D for D in Ds]
        sub = subgroup_closure(three_part, 9, J)
        assert len(sub) == 9
        assert all(3 * E == J.identity for E in sub)
        assert 91371 % 9 != 0

    def test_small_field_orders(self):
        assert jacobian_order(C1, 3, 1) == 19
        assert jacobian_order(C1, 5, 1) == 19
        assert jacobian_order(C2, 5, 1) == 21


class TestTorsionBound:
    def test_reference_bounds(self):
        assert torsion_bound(C1, -1, [11, 23, 31]).bound == 19
        assert torsion_bound(C1, -3, [5, 17]).bound == 19
        assert torsion_bound(C2, -3, [5, 11]).bound == 63

    @pytest.mark.parametrize("C, d, primes", [(C1, -1, [11, 23, 31]), (C1, -3, [5, 17]), (C2, -3, [5, 11])])
    def test_bound_divides_orders(self, C, d, primes):
        report = torsion_bound(C, d, primes)
        for w in report.witnesses:
            assert w.order % report.bound == 0
            assert w.prime_to_p == strip_prime(w.order, w.p)
        assert report.plain_gcd == report.bound

    def test_more_witnesses_never_increase(self):
        b2 = torsion_bound(C1, -1, [11, 23]).bound
        b3 = torsion_bound(C1, -1, [11, 23, 31]).bound
        assert b2 % b3 == 0

    def test_errors(self):
        with pytest.raises(EmptyWitnessList):
            torsion_bound(C1, -1, [])
        with pytest.raises(NotInert):
            torsion_bound(C1, -1, [5])
        with pytest.raises(BadReduction):
            torsion_bound(C1, -1, [11, 13])

    def test_text_roundtrip(self):
        report = torsion_bound(C2, -3, [5, 11])
        text = report.to_text()
        assert "order_factored = 2^4 * 3^2 * 7 * 13" in text
        assert TorsionBoundReport.from_text(text) == report


class TestBoundSoundness:
    def test_witness_dividing_the_torsion(self):
        # 19 | |J1(Q(i))| and p = 19 is inert: stripping 19 from N_19 must not erase the 19-part
        report = torsion_bound(C1, -1, [11, 19])
        assert report.stripped_gcd == 7
        assert report.bound == 7 * 19**2
        assert report.bound % 19 == 0

    def test_adding_p19_keeps_bound(self):
        assert torsion_bound(C1, -1, [11, 23, 31, 19]).bound == 19

    def test_single_witness(self):
        report = torsion_bound(C1, -1, [11])
        assert report.unbounded == (11,)
        assert report.bound == 17689
        assert TorsionBoundReport.from_text(report.to_text()) == report

    def test_duplicates_ignored(self):
        assert torsion_bound(C2, -3, [5, 5, 11]) == torsion_bound(C2, -3, [5, 11])
