"""JSON schemas for decompositions, graphs, cones, series and reports.

Every rational number travels as an exact string "p/q" (or "p"); the wire
format never contains floats.  Serialization orders are canonical so that
identical inputs always produce byte-identical reports.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .complexes import Decomposition, DualCell, Polytope
from .cones import Cone
from .exact import fr
from .graphs import Edge, TropicalGraph


def rat_str(x) -> str:
    x = fr(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(x) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("expected a rational, got a bool")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    raise ValueError(f"expected a rational, got {type(x).__name__}")


def vec_str(v) -> list:
    return [rat_str(x) for x in v]


def parse_vec(v) -> tuple:
    return tuple(parse_rat(x) for x in v)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


# ---------------------------------------------------------------------------
# decompositions


def decomposition_to_dict(dec: Decomposition) -> dict:
    return {
        "ambient_dim": dec.ambient_dim,
        "polytopes": [
            {
                "id": pid,
                "ineqs": [vec_str(tuple(a) + (b,)) for a, b in p.ineqs],
                **({"dim": p.dim} if p.dim is not None else {}),
            }
            for pid, p in sorted(dec.polytopes.items())
        ],
        "faces": sorted([q, p] for q, p in dec.face_pairs),
        "dual_cells": [
            {
                "id": pid,
                "vertices": [vec_str(v) for v in d.vertices],
                "rays": [vec_str(r) for r in d.rays],
            }
            for pid, d in sorted(dec.dual_cells.items())
        ],
        "split_set": sorted(dec.split_set),
    }


def decomposition_from_dict(data: dict) -> Decomposition:
    n = int(data["ambient_dim"])
    polytopes = []
    for p in data["polytopes"]:
        rows = []
        for row in p["ineqs"]:
            row = parse_vec(row)
            if len(row) != n + 1:
                raise ValueError(f"polytope {p['id']}: inequality row of wrong length")
            rows.append((row[:-1], row[-1]))
        polytopes.append(Polytope(str(p["id"]), tuple(rows), p.get("dim")))
    dual_cells = [
        DualCell(
            str(d["id"]),
            tuple(parse_vec(v) for v in d["vertices"]),
            tuple(parse_vec(r) for r in d.get("rays", [])),
        )
        for d in data["dual_cells"]
    ]
    faces = [(str(q), str(p)) for q, p in data.get("faces", [])]
    return Decomposition(n, polytopes, faces, dual_cells, data.get("split_set", []))


# ---------------------------------------------------------------------------
# graphs


def graph_to_dict(graph: TropicalGraph, collapse=None) -> dict:
    out = {
        "vertices": [{"id": v, "polytope": p} for v, p in sorted(graph.vertices)],
        "edges": [
            {
                "id": e.id,
                "ends": list(e.ends),
                "kind": e.kind,
                **({"direction": [int(x) for x in e.direction]}
                   if e.direction is not None else {}),
                **({"maps_to": e.maps_to} if e.maps_to is not None else {}),
            }
            for e in graph.edges
        ],
        **({"split_order": list(graph.split_order)}
           if graph.split_order is not None else {}),
    }
    if collapse is not None:
        out["collapse"] = collapse
    return out


def graph_from_dict(data: dict) -> TropicalGraph:
    vertices = tuple((str(v["id"]), str(v["polytope"])) for v in data["vertices"])
    edges = tuple(
        Edge(
            id=str(e["id"]),
            ends=(str(e["ends"][0]), str(e["ends"][1])),
            kind=e.get("kind", "tropical"),
            direction=tuple(int(x) for x in e["direction"])
            if e.get("direction") is not None
            else None,
            maps_to=e.get("maps_to"),
        )
        for e in data["edges"]
    )
    split_order = tuple(data["split_order"]) if "split_order" in data else None
    return TropicalGraph(vertices, edges, split_order)


def collapse_from_dict(data: dict) -> tuple[dict, object]:
    """Returns (vertex_map, to_graph) where to_graph is a dict or a path string."""
    c = data["collapse"]
    return dict(c["vertex_map"]), c["to_graph"]


# ---------------------------------------------------------------------------
# cones and lattices


def cone_to_dict(cone: Cone) -> dict:
    m = cone.minimal()
    return {
        "ambient_dim": m.ambient_dim,
        "rays": sorted(vec_str(r) for r in m.rays),
        "lineality": sorted(vec_str(l) for l in m.lineality),
        "ineqs": sorted(vec_str(a) for a in m.ineqs),
        "eqs": sorted(vec_str(a) for a in m.eqs),
        "dim": m.dim(),
    }


def cone_from_dict(data: dict) -> Cone:
    return Cone(
        int(data["ambient_dim"]),
        rays=[parse_vec(r) for r in data["rays"]],
        lineality=[parse_vec(l) for l in data["lineality"]],
    )


def lattice_to_dict(lattice) -> dict:
    return {
        "ambient_dim": lattice.ambient_dim,
        "basis": [[int(x) for x in b] for b in lattice.basis],
    }


# ---------------------------------------------------------------------------
# Novikov series


def series_to_list(series) -> list:
    return [
        {"coeff": rat_str(c), "area": rat_str(a), "monomial": [int(x) for x in m]}
        for c, a, m in series.terms
    ]


def series_from_list(data, num_vars) -> "NovikovSeries":
    from .potential import NovikovSeries

    return NovikovSeries(
        num_vars,
        tuple(
            (parse_rat(t["coeff"]), parse_rat(t["area"]), tuple(int(x) for x in t["monomial"]))
            for t in data
        ),
    )
