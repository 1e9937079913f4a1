import json
from importlib import resources

import pytest

from hyperjac.curve import INF_MINUS, INF_PLUS, AffinePoint, is_on_curve
from hyperjac.errors import GroupSmallerThanBound, PointNotOnCurve, RankNotAsserted
from hyperjac.exactfield import QQ
from hyperjac.pipeline import (
    INCONCLUSIVE,
    TORSION_IMPOSSIBLE,
    TORSION_POSSIBLE,
    all_ok,
    enumerate_k_points,
    find_instance,
    instance_from_dict,
    k_group,
    load_instance,
    obstruction_check,
    run_instance,
)
from hyperjac.poly import Poly
from hyperjac.serialize import parse_point


def _raw(name):
    return json.loads(resources.files("hyperjac.instances").joinpath(f"{name}.json").read_text())


def _points(strings, K):
    return {parse_point(p, K) for p in strings}


class TestEnumeratePoints:
    SIX = ["inf+", "inf-", ["1", "1"], ["1", "-1"], ["0", "1"], ["0", "-1"]]

    @pytest.mark.parametrize("name", ["c1_qi", "c1_q-3"])
    def test_c1_six_points(self, name):
        spec = load_instance(name)
        assert set(enumerate_k_points(spec)) == _points(self.SIX, spec.field)

    def test_c2_ten_points(self, Qm3):
        spec = find_instance("C2", -3)
        pts = enumerate_k_points(spec)
        s = Qm3.gen
        expected = {INF_PLUS, INF_MINUS}
        expected |= {AffinePoint(x, y) for x in (0, -1) for y in (1, -1)}
        for x in ((-1 + s) / 2, (-1 - s) / 2):
            expected |= {AffinePoint(Qm3(x), Qm3(x - 1)), AffinePoint(Qm3(x), Qm3(1 - x))}
        assert set(pts) == {AffinePoint(Qm3(P.x), Qm3(P.y)) if isinstance(P, AffinePoint) else P for P in expected}
        assert len(pts) == 10

    @pytest.mark.parametrize("name", ["c1_qi", "c1_q-3", "c2_q-3"])
    def test_point_set_invariants(self, name):
        spec = load_instance(name)
        K = spec.field
        pts = set(enumerate_k_points(spec))
        for P in pts:
            assert is_on_curve(spec.curve, P, K)
            if isinstance(P, AffinePoint):
                assert AffinePoint(P.x, -P.y) in pts
                assert AffinePoint(K(P.x).conj(), K(P.y).conj()) in pts
        weierstrass = [P for P in pts if isinstance(P, AffinePoint) and not P.y]
        assert (len(pts) - len(weierstrass)) % 2 == 0


class TestObstruction:
    def test_paper_instances_have_no_survivors(self, paper_reports):
        for r in paper_reports.values():
            assert r.survivors == []
            assert r.conclusion == TORSION_IMPOSSIBLE

    def test_artificial_survivor(self):
        x = Poly.x(QQ)
        res = obstruction_check([AffinePoint(2, 5), AffinePoint(0, 1), INF_PLUS], x)
        assert res.survivors == [AffinePoint(2, 5)]
        assert res.conclusion == TORSION_POSSIBLE

    def test_infinity_never_survives(self):
        res = obstruction_check([INF_PLUS, INF_MINUS], Poly(QQ, [1]))
        assert res.survivors == []
        assert res.conclusion == TORSION_IMPOSSIBLE

    def test_zero_side_condition_rejected(self):
        with pytest.raises(ValueError):
            obstruction_check([], Poly(QQ))

    def test_side_conditions_loaded(self):
        x = Poly.x(QQ)
        spec = load_instance("c1_qi")
        assert spec.side_condition == x * (x - 1) * (x**3 - 4 * x**2 + x + 1)
        spec = load_instance("c2_q-3")
        assert spec.side_condition == x * (x + 1) * (x**2 + x + 1) * (x**3 - 3 * x - 1)


class TestGuards:
    def test_rank_not_asserted(self):
        data = _raw("c1_qi")
        data["asserted_rank_zero"] = False
        spec = instance_from_dict(data)
        with pytest.raises(RankNotAsserted):
            enumerate_k_points(spec)

    def test_insufficient_seeds(self):
        data = _raw("c2_q-3")
        data["seed_divisors"] = []
        data["seed_points"] = ["inf+", "inf-"]
        spec = instance_from_dict(data)
        with pytest.raises(GroupSmallerThanBound) as exc:
            k_group(spec, 63)
        assert exc.value.found < 63
        report = run_instance(spec)
        assert report.conclusion == INCONCLUSIVE
        assert not all_ok([report])

    def test_bad_seed(self):
        data = _raw("c1_qi")
        data["seed_points"].append(["2", "2"])
        with pytest.raises(PointNotOnCurve):
            instance_from_dict(data)

    def test_anchor_mismatch_is_reported(self):
        data = _raw("c1_q-3")
        data["anchors"]["bound"] = 13
        report = run_instance(instance_from_dict(data))
        assert report.mismatches
        assert not all_ok([report])


class TestReports:
    def test_summary(self, paper_reports):
        r = paper_reports["C2/Q(sqrt(-3))"]
        assert r.torsion.bound == 63 and r.group_order == 63 and r.structure == [3, 21]
        assert len(r.points) == 10
        assert r.torsion.bound % r.group_order == 0

    def test_errata_recorded(self, paper_reports):
        r = paper_reports["C1/Q(i)"]
        assert r.anchors_ok
        assert len(r.errata) == 1 and "274113" in r.errata[0]

    def test_all_ok(self, paper_reports):
        assert all_ok(list(paper_reports.values()))

    def test_determinism(self, paper_reports):
        again = run_instance(load_instance("c1_q-3"))
        assert again.to_text() == paper_reports["C1/Q(sqrt(-3))"].to_text()

    def test_more_witnesses_keep_conclusion(self):
        data = _raw("c1_qi")
        data["witness_primes"] = [11, 23, 31, 43, 47]
        spec = instance_from_dict(data)
        report = run_instance(spec)
        assert report.torsion.bound == 19
        assert report.conclusion == TORSION_IMPOSSIBLE

    def test_load_from_path(self, tmp_path):
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(_raw("c1_q-3")))
        assert load_instance(path).d == -3
        assert load_instance(str(path)).curve.label == "C1"


def test_single_witness_is_inconclusive():
    data = _raw("c1_q-3")
    data["witness_primes"] = [5]
    report = run_instance(instance_from_dict(data))
    assert report.conclusion == INCONCLUSIVE
    assert not all_ok([report])


def test_witness_dividing_torsion_keeps_conclusion():
    data = _raw("c1_qi")
    data["witness_primes"] = [11, 23, 31, 19]
    report = run_instance(instance_from_dict(data))
    assert report.torsion.bound == 19
    assert report.conclusion == TORSION_IMPOSSIBLE
