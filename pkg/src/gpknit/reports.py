"""Analysis reports: Gorenstein projective catalog, singularity category, orbit presentations."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .arknit.gprj import names
from .arknit.sub import sub_stable_component
from .gpclass import (
    gp_indecomposables,
    is_one_gorenstein_omega,
    is_self_injective,
    syzygy_classes,
    verify_omega_g,
)
from .presentation import QuadraticPresentation

SCHEMA = 1


@dataclass
class AnalysisReport:
    algebra: dict
    projectives: list[str]
    nonprojectives: list[dict]
    classes: list[dict]
    omega_g: bool
    one_gorenstein: bool
    one_gorenstein_witness: list[str]
    self_injective: bool
    singularity: dict
    orbit_presentations: list[dict]
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return dict(schema=SCHEMA, **asdict(self))

    @classmethod
    def from_json(cls, doc: dict) -> "AnalysisReport":
        if doc.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
        body = {k: v for k, v in doc.items() if k != "schema"}
        return cls(**body)


def _cycle_order(q) -> list:
    """Vertices of a single-cycle component in arrow order, starting at the first (0 X)."""
    start = next((x for x in q.vertices if x.kind == "sub0"), q.vertices[0])
    out, cur = [start], start
    while True:
        nxt = q.successors(cur)
        if not nxt or nxt[0] == start:
            return out
        cur = nxt[0]
        out.append(cur)


def orbit_presentation(pres: QuadraticPresentation, cls, seed: int = 0) -> dict:
    """kZ_{3l}/I² for one class, with the vertex dictionary along the cycle."""
    q = sub_stable_component(pres, cls, seed)
    order = _cycle_order(q)
    d = len(order)
    return {
        "component": cls.component,
        "period": cls.period,
        "quiver": f"Z_{d}",
        "algebra": f"kZ_{d}/I^2",
        "vertices": d,
        "arrows": [[i, (i + 1) % d] for i in range(d)],
        "relations": "all paths of length 2",
        "dictionary": {str(i): x.label for i, x in enumerate(order)},
    }


def singularity_summary(periods: list[int], one_gorenstein: bool) -> dict:
    factors = [{"category": f"D^b(mod k)/[{p}]", "shift_period": p} for p in periods]
    return {
        "factors": factors,
        "trivial": not factors,
        "conditional": not one_gorenstein,
    }


def analyze(pres: QuadraticPresentation, seed: int = 0) -> AnalysisReport:
    cat = gp_indecomposables(pres, seed)
    nm = names(pres, seed)
    classes = syzygy_classes(pres, seed).classes
    og = verify_omega_g(pres, seed)
    g1 = is_one_gorenstein_omega(pres, seed)
    nonproj = [
        {
            "name": nm.of(e),
            "arrow": e.arrow,
            "component": e.component,
            "dims": list(e.module.dim_vector),
            "omega": nm.omega(nm.of(e)),
            "certificate_period": e.certificate.period,
        }
        for e in cat.nonprojectives
    ]
    cls_json = [
        {"component": c.component, "period": c.period, "members": [nm.of(e) for e in c.members]} for c in classes
    ]
    return AnalysisReport(
        algebra={
            "name": pres.name,
            "dimension": pres.dimension,
            "vertices": list(pres.vertices),
            "arrows": [[a.name, a.source, a.target] for a in pres.arrows],
            "relations": [list(r) for r in sorted(pres.relations)],
        },
        projectives=nm.projectives,
        nonprojectives=nonproj,
        classes=cls_json,
        omega_g=og.is_omega_g,
        one_gorenstein=g1.holds,
        one_gorenstein_witness=list(g1.witness),
        self_injective=is_self_injective(pres),
        singularity=singularity_summary([c.period for c in classes], g1.holds),
        orbit_presentations=[orbit_presentation(pres, c, seed) for c in classes],
        failures=list(og.failures),
    )


def singularity_text(rep: AnalysisReport) -> str:
    s = rep.singularity
    if s["trivial"]:
        line = "singularity category trivial"
    else:
        line = "D_sg(Λ) ≃ " + " × ".join(f["category"] for f in s["factors"])
    if s["conditional"]:
        line += "  (conditional on Λ Gorenstein)"
    return line + "\n"


def orbits_text(rep: AnalysisReport) -> str:
    if not rep.orbit_presentations:
        return "no stable components\n"
    lines = []
    for o in rep.orbit_presentations:
        lines.append(f"class {o['component']} (period {o['period']}): {o['algebra']}")
        for i, lab in o["dictionary"].items():
            lines.append(f"  {i}: {lab}")
    return "\n".join(lines) + "\n"


def simple_pairs(pres: QuadraticPresentation, seed: int = 0) -> list[tuple[str, str]]:
    """(S_A, S_{Σ A}) for every catalog non-projective A; Σ is the cyclic predecessor."""
    nm = names(pres, seed)
    return [(f"S[{a}]", f"S[{nm.sigma(a)}]") for a in nm.nonprojectives]


def simple_pairs_text(pairs: list[tuple[str, str]]) -> str:
    if not pairs:
        return "no simple modules of projective dimension 2 from non-projectives\n"
    lines = [f"τ_B^-1 {s} ≅ Ω_B({t})" for s, t in pairs]
    lines.append("Ext^2_B(S, S') ≅ D Hom_B(S', S) for each pair (quoted, not computed)")
    return "\n".join(lines) + "\n"
