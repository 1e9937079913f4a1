"""End-to-end replay for one (curve, quadratic field) instance.

torsion bound -> rank-zero input -> group enumeration -> point extraction
-> side condition -> conclusion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .curve import (
    AffinePoint,
    CurvePoint,
    Genus2Curve,
    InfinityPoint,
    infinity_points,
    is_on_curve,
    make_curve,
)
from .errors import GroupSmallerThanBound, PointNotOnCurve, RankNotAsserted
from .exactfield import QQ, make_quadfield
from .jacobian import (
    MumfordDivisor,
    extract_points,
    group_structure,
    jacobian,
    subgroup_closure,
)
from .poly import Poly, roots_deg_le2_exact
from .serialize import parse_point, parse_poly, point_to_json
from .zeta import TorsionBoundReport, format_factored, torsion_bound

TORSION_IMPOSSIBLE = "torsion_impossible"
TORSION_POSSIBLE = "torsion_possible_witness"
INCONCLUSIVE = "inconclusive"

BUILTIN_INSTANCES = ("c1_qi", "c1_q-3", "c2_q-3")


@dataclass
class InstanceSpec:
    name: str
    curve: Genus2Curve
    d: int
    claimed_torsion: str
    asserted_rank_zero: bool
    rank_provenance: str
    witness_primes: List[int]
    seed_points: List[CurvePoint]
    seed_divisors: List[Tuple[str, str, int]]
    side_condition: Poly
    anchors: dict = field(default_factory=dict)
    errata: dict = field(default_factory=dict)

    @property
    def field(self):
        return make_quadfield(self.d)

    def __post_init__(self):
        K = self.field
        for P in self.seed_points:
            if not is_on_curve(self.curve, P, K):
                raise PointNotOnCurve(f"seed {P} is not on {self.curve.label}")

    def seed_elements(self) -> List[MumfordDivisor]:
        J = jacobian(self.curve, self.field)
        return [J.make(parse_poly(a, self.field), parse_poly(b, self.field), d) for a, b, d in self.seed_divisors]


def instance_from_dict(data: dict) -> InstanceSpec:
    K = make_quadfield(data["d"])
    curve = make_curve(data["coefficients"], data.get("label", ""))
    side = Poly(QQ, [1])
    for factor in data.get("side_condition_factors", []):
        side = side * Poly(QQ, factor)
    if "side_condition" in data:
        side = Poly(QQ, data["side_condition"])
    return InstanceSpec(
        name=data.get("name", f"{curve.label}/Q(sqrt({data['d']}))"),
        curve=curve,
        d=int(data["d"]),
        claimed_torsion=data.get("claimed_torsion", ""),
        asserted_rank_zero=bool(data.get("asserted_rank_zero", False)),
        rank_provenance=data.get("rank_provenance", ""),
        witness_primes=[int(p) for p in data["witness_primes"]],
        seed_points=[parse_point(p, K) for p in data.get("seed_points", [])],
        seed_divisors=[(s["a"], s["b"], int(s["d"])) for s in data.get("seed_divisors", [])],
        side_condition=side,
        anchors=data.get("anchors", {}),
        errata=data.get("errata", {}),
    )


def load_instance(source: Union[str, Path]) -> InstanceSpec:
    """Load an instance from a JSON file path or a built-in name such as ``c1_qi``."""
    path = Path(source)
    if path.suffix == ".json" and path.exists():
        return instance_from_dict(json.loads(path.read_text()))
    text = resources.files("hyperjac.instances").joinpath(f"{source}.json").read_text()
    return instance_from_dict(json.loads(text))


def builtin_instances() -> List[InstanceSpec]:
    return [load_instance(name) for name in BUILTIN_INSTANCES]


def find_instance(label: str, d: int) -> InstanceSpec:
    for spec in builtin_instances():
        if spec.curve.label.lower() == label.lower() and spec.d == d:
            return spec
    raise KeyError(f"no built-in instance for {label} over Q(sqrt({d}))")


def _generators(spec: InstanceSpec) -> List[MumfordDivisor]:
    J = jacobian(spec.curve, spec.field)
    pts = spec.seed_points
    gens = [J.from_points(P, Q) for i, P in enumerate(pts) for Q in pts[i:]]
    gens += spec.seed_elements()
    return list(dict.fromkeys(g for g in gens if not g.is_zero()))


def k_group(spec: InstanceSpec, bound: int) -> List[MumfordDivisor]:
    """J(K) as generated by the seeds; raises GroupSmallerThanBound if it misses the bound."""
    if not spec.asserted_rank_zero:
        raise RankNotAsserted(f"{spec.name}: rank zero not asserted, enumeration would not be exhaustive")
    J = jacobian(spec.curve, spec.field)
    elements = subgroup_closure(_generators(spec), bound, J)
    if len(elements) != bound:
        raise GroupSmallerThanBound(len(elements), bound, elements)
    return elements


def points_from_group(spec: InstanceSpec, elements: Sequence[MumfordDivisor]) -> List[CurvePoint]:
    """All K-points of the curve, read off the supports of the group elements.

    Every affine point P gives the nonzero class [P - inf-], whose triple has a
    linear a vanishing at x(P), so scanning all a's is exhaustive.
    """
    K = spec.field
    found: Dict[CurvePoint, None] = {}
    for P in infinity_points(spec.curve, K):
        found[P] = None
    for D in elements:
        for P in extract_points(D, roots_deg_le2_exact):
            if is_on_curve(spec.curve, P, K):
                found[P] = None
    return sorted(found, key=lambda P: P.sort_key())


def enumerate_k_points(spec: InstanceSpec, bound: Optional[int] = None) -> List[CurvePoint]:
    if bound is None:
        bound = torsion_bound(spec.curve, spec.d, spec.witness_primes).bound
    return points_from_group(spec, k_group(spec, bound))


@dataclass
class ObstructionResult:
    survivors: List[CurvePoint]
    conclusion: str


def obstruction_check(points: Sequence[CurvePoint], side_condition: Poly) -> ObstructionResult:
    """Points that could carry the claimed torsion: affine with side_condition(x) != 0.

    Points at infinity never survive.
    """
    if not side_condition:
        raise ValueError("side condition must be a nonzero polynomial")
    survivors = []
    for P in points:
        if isinstance(P, InfinityPoint):
            continue
        x = P.x
        field_ = getattr(x, "field", None) or QQ
        if side_condition.map_coeffs(field_, field_)(x):
            survivors.append(P)
    return ObstructionResult(survivors, TORSION_POSSIBLE if survivors else TORSION_IMPOSSIBLE)


@dataclass
class VerificationReport:
    name: str
    claimed_torsion: str
    rank_provenance: str
    torsion: TorsionBoundReport
    group_order: int
    structure: List[int]
    points: List[CurvePoint]
    survivors: List[CurvePoint]
    conclusion: str
    mismatches: List[str] = field(default_factory=list)
    errata: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def anchors_ok(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        lines = [
            "[instance]",
            f"name = {self.name}",
            f"claimed_torsion = {self.claimed_torsion}",
            f"rank_provenance = {self.rank_provenance}",
            f"group_order = {self.group_order}",
            f"structure = {self.structure}",
            f"points = {json.dumps([point_to_json(P) for P in self.points])}",
            f"survivors = {json.dumps([point_to_json(P) for P in self.survivors])}",
            f"conclusion = {self.conclusion}",
            f"anchors_ok = {str(self.anchors_ok).lower()}",
        ]
        lines += [f"mismatch = {m}" for m in self.mismatches]
        lines += [f"erratum = {e}" for e in self.errata]
        lines += [f"note = {n}" for n in self.notes]
        return "\n".join(lines) + "\n\n" + self.torsion.to_text()

    def summary(self) -> str:
        return (
            f"{self.name}: bound {self.torsion.bound}, |J(K)| = {self.group_order} "
            f"{self.structure}, {len(self.points)} points, "
            f"{len(self.survivors)} survivors -> {self.conclusion} for {self.claimed_torsion}"
        )


def _check_anchors(spec: InstanceSpec, report: VerificationReport) -> None:
    anchors, errata = spec.anchors, spec.errata.get("witness_orders", {})
    for w in report.torsion.witnesses:
        printed = anchors.get("witness_orders", {}).get(str(w.p))
        if printed is None or printed == w.order:
            continue
        fix = errata.get(str(w.p))
        if fix and fix["printed"] == printed and fix["corrected"] == w.order:
            report.errata.append(
                f"p = {w.p}: printed {printed} = {format_factored(printed)}, "
                f"computed {w.order} = {format_factored(w.order)} ({fix['note']})"
            )
        else:
            report.mismatches.append(f"p = {w.p}: expected order {printed}, computed {w.order}")
    if "bound" in anchors and anchors["bound"] != report.torsion.bound:
        report.mismatches.append(f"bound: expected {anchors['bound']}, computed {report.torsion.bound}")
    if "structure" in anchors and anchors["structure"] != report.structure:
        report.mismatches.append(f"structure: expected {anchors['structure']}, computed {report.structure}")
    if "points" in anchors:
        expected = {parse_point(p, spec.field) for p in anchors["points"]}
        if expected != set(report.points):
            report.mismatches.append("point set differs from the anchored list")


def run_instance(spec: InstanceSpec) -> VerificationReport:
    tb = torsion_bound(spec.curve, spec.d, spec.witness_primes)
    notes = ["points at infinity are treated as failing the side condition"]
    if tb.unbounded:
        report = VerificationReport(
            spec.name, spec.claimed_torsion, spec.rank_provenance, tb, 0, [], [], [], INCONCLUSIVE,
            notes=notes + [f"{tb.unbounded[0]}-torsion is unconstrained by a single witness; add another prime"],
        )
        _check_anchors(spec, report)
        return report
    try:
        elements = k_group(spec, tb.bound)
    except GroupSmallerThanBound as gap:
        elements = gap.elements
        points = points_from_group(spec, elements)
        report = VerificationReport(
            spec.name, spec.claimed_torsion, spec.rank_provenance, tb, len(elements),
            group_structure(elements), points, [], INCONCLUSIVE,
            notes=notes + [f"seeds generate {gap.found} of {gap.bound} elements; no conclusion drawn"],
        )
        _check_anchors(spec, report)
        return report
    structure = group_structure(elements)
    points = points_from_group(spec, elements)
    obs = obstruction_check(points, spec.side_condition)
    report = VerificationReport(
        spec.name, spec.claimed_torsion, spec.rank_provenance, tb, len(elements), structure,
        points, obs.survivors, obs.conclusion, notes=notes,
    )
    _check_anchors(spec, report)
    return report


def verify_paper() -> List[VerificationReport]:
    return [run_instance(spec) for spec in builtin_instances()]


def all_ok(reports: Sequence[VerificationReport]) -> bool:
    return all(r.anchors_ok and r.conclusion == TORSION_IMPOSSIBLE for r in reports)
