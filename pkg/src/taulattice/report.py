"""The end-to-end pipeline, its versioned JSON report and DOT rendering.

Report fields (schema version 1):

    schema_version      always 1
    algebra             name, fingerprint, field characteristic, vertices, arrows, relations, dimension
    bounds              node_bound and dim_bound used for enumeration
    enumeration         complete flag, reason when incomplete, node and edge counts
    counts              torsion_classes, covers, bricks, semibricks, tau_tilting_modules,
                        join_irreducibles (null when enumeration is incomplete)
    torsion_classes     canonical pair names, largest class first
    bricks              dimension vectors of the bricks, in canonical order
    hasse               covers as {upper, lower, brick}, with brick an index into ``bricks``
    lattice             verdict and witness for each lattice property (null when incomplete)
    conditions          verdicts for the eight equivalent conditions, with evidence
    cross_validation    status and detail of every consistency check
    timings             seconds per stage; present only when requested, since it is not reproducible
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Optional

from .algebra import BoundQuiverPresentation, build_algebra
from .lattice import (
    as_lattice,
    is_boolean,
    is_distributive,
    is_hasse_regular,
    is_join_semidistributive,
    is_lower_semimodular,
    is_meet_semidistributive,
    is_upper_semimodular,
    join_irreducibles,
)
from .tau_tilting import (
    DEFAULT_DIM_BOUND,
    DEFAULT_NODE_BOUND,
    LabeledHasseQuiver,
    enumerate_mutation_graph,
    enumerate_semibricks,
    labeled_hasse_quiver,
)
from .theorem import ConditionReport, CrossValidation, cross_validate

SCHEMA_VERSION = 1


def _dims(B) -> str:
    return "(" + ",".join(map(str, B.dims)) + ")"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(q: LabeledHasseQuiver) -> str:
    """One digraph: nodes are torsion classes, arrows go from larger to smaller classes
    and carry the dimension vector of their brick label."""
    lines = ["digraph torsion_classes {", "  rankdir=TB;", "  node [shape=box];"]
    index = q.poset.index
    for k, T in enumerate(q.poset.elements):
        lines.append(f"  n{k} [label={_quote(T.name)}];")
    for upper, lower, b in q.arrows():
        lines.append(f"  n{index[upper]} -> n{index[lower]} [label={_quote(_dims(q.bricks[b]))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class RunReport:
    data: dict
    conditions: ConditionReport
    validation: CrossValidation
    quiver: Optional[LabeledHasseQuiver] = None
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self, include_timings: bool = False) -> str:
        data = dict(self.data)
        if include_timings:
            data["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return json.dumps(data, indent=2, sort_keys=False) + "\n"

    def dot(self) -> Optional[str]:
        return render_dot(self.quiver) if self.quiver is not None else None

    def summary(self) -> str:
        d = self.data
        lines = [f"algebra     {d['algebra']['name'] or d['algebra']['fingerprint']}",
                 f"field       {d['algebra']['field']}",
                 f"dimension   {d['algebra']['dimension']}"]
        e = d["enumeration"]
        state = "complete" if e["complete"] else f"incomplete: {e['reason']}"
        lines.append(f"enumeration {e['nodes']} pairs, {e['edges']} mutations ({state})")
        if d["counts"] is not None:
            c = d["counts"]
            lines.append(f"counts      {c['torsion_classes']} torsion classes, {c['bricks']} bricks, "
                         f"{c['semibricks']} semibricks, {c['tau_tilting_modules']} tau-tilting modules")
            for prop, v in d["lattice"].items():
                lines.append(f"  {prop:<22} {v['verdict']}")
        lines.append("conditions")
        for c, v in self.conditions.verdicts.items():
            lines.append(f"  ({c}){' ' if len(c) == 1 else ''} {v.value.value:<12} {v.evidence}")
        if self.conditions.inconsistent:
            lines.append("  FLAG: verdicts are inconsistent with the equivalence")
        lines.append("checks")
        for chk in self.validation.checks:
            lines.append(f"  {chk.name:<30} {chk.status:<8} {chk.detail}")
        return "\n".join(lines) + "\n"


def _property(rep) -> dict:
    witness = None
    if rep.witness is not None:
        witness = [getattr(x, "name", str(x)) for x in rep.witness]
    return {"verdict": rep.verdict, "witness": witness}


def run_presentation(pres: BoundQuiverPresentation, node_bound: int = DEFAULT_NODE_BOUND,
                     dim_bound: int = DEFAULT_DIM_BOUND, oracle: bool = False) -> RunReport:
    """enumerate -> torsion poset -> lattice checks -> conditions -> cross-validation."""
    timings = {}
    t0 = time.perf_counter()
    alg = build_algebra(pres)
    g = enumerate_mutation_graph(alg, node_bound, dim_bound)
    timings["enumerate"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    validation = cross_validate(alg, node_bound, dim_bound, oracle=oracle, graph=g)
    conditions = validation.report
    timings["validate"] = time.perf_counter() - t0

    data = {
        "schema_version": SCHEMA_VERSION,
        "algebra": {
            "name": pres.name,
            "fingerprint": pres.fingerprint(),
            "field": pres.field.p,
            "vertices": list(pres.vertices),
            "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in pres.arrows],
            "relations": [list(r) for r in pres.relations],
            "dimension": alg.dimension,
        },
        "bounds": {"node_bound": node_bound, "dim_bound": dim_bound},
        "enumeration": {"complete": g.complete, "reason": g.reason or None,
                        "nodes": len(g.nodes), "edges": len(g.edges)},
        "counts": None,
        "torsion_classes": [p.name() for p in g.nodes],
        "bricks": None,
        "hasse": None,
        "lattice": None,
    }
    quiver = None
    if g.complete:
        t0 = time.perf_counter()
        quiver = labeled_hasse_quiver(g)
        P = quiver.poset
        L = as_lattice(P)
        bricks = quiver.bricks
        data["counts"] = {
            "torsion_classes": len(P),
            "covers": len(quiver.labels),
            "bricks": len(bricks),
            "semibricks": len(enumerate_semibricks(bricks)),
            "tau_tilting_modules": sum(p.is_tau_tilting for p in g.nodes),
            "join_irreducibles": len(join_irreducibles(L)),
        }
        data["bricks"] = [list(B.dims) for B in bricks]
        data["hasse"] = [{"upper": u.name, "lower": l.name, "brick": b} for u, l, b in quiver.arrows()]
        data["lattice"] = {
            "upper_semimodular": _property(is_upper_semimodular(L)),
            "lower_semimodular": _property(is_lower_semimodular(L)),
            "distributive": _property(is_distributive(L)),
            "boolean": _property(is_boolean(L)),
            "join_semidistributive": _property(is_join_semidistributive(L)),
            "meet_semidistributive": _property(is_meet_semidistributive(L)),
            "hasse_regular": _property(is_hasse_regular(P, alg.n)),
        }
        timings["lattice"] = time.perf_counter() - t0
    data["conditions"] = conditions.to_dict()
    data["cross_validation"] = validation.to_dict()
    return RunReport(data, conditions, validation, quiver, timings)
