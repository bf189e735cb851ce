"""Machine-readable analysis reports.

Each report is a JSON-ready dict with deterministic ordering: identical
inputs always serialize to identical bytes.
"""

from __future__ import annotations

import hashlib

from . import __version__
from .complexes import Decomposition, is_tropical_fiber
from .graphs import TropicalGraph, is_rigid, split_edges, vertex_positions
from .potential import NovikovSeries, bg_potential, leading_terms
from .serialize import (
    canonical_json,
    cone_to_dict,
    decomposition_to_dict,
    lattice_to_dict,
    rat_str,
    series_to_list,
    vec_str,
)
from .splitting import (
    QuasiSplitGraph,
    cone_condition,
    discrepancy,
    index_shift,
    is_rigid_split,
    relative_position_cone,
)
from .symmetry import component_splitting, multiplicity, symmetry_group


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _head(command: str, inputs: dict) -> dict:
    return {
        "tool": "tropsplit",
        "version": __version__,
        "command": command,
        "inputs": {k: digest(canonical_json(v).encode()) for k, v in sorted(inputs.items())},
    }


def graph_report(dec: Decomposition, graph: TropicalGraph, inputs: dict) -> dict:
    w = vertex_positions(dec, graph)
    out = _head("graph-check", inputs)
    out.update(
        {
            "valid": True,
            "realizable": w.realizable,
            "realizable_weakly": w.realizable_weakly,
            "dim": w.dim,
            "vertex_order": list(w.vertex_order),
            "witness": vec_str(w.witness) if w.witness is not None else None,
            "rigid": is_rigid(dec, graph) if w.realizable else None,
            "split_edges": list(split_edges(dec, graph)),
        }
    )
    return out


def split_report(q: QuasiSplitGraph, eta, inputs: dict, i_br=None) -> dict:
    data = discrepancy(q)
    cc = cone_condition(q, eta)
    out = _head("split-check", inputs)
    out.update(
        {
            "eta": vec_str(eta),
            "split_order": list(q.split_order),
            "w_cone": cone_to_dict(relative_position_cone(q)),
            "w_dim": relative_position_cone(q).dim(),
            "disc_cone": cone_to_dict(data.disc),
            "disc_dim": cc.disc_dim,
            "expected_disc_dim": cc.expected_disc_dim,
            "disc_dim_matches": cc.disc_dim == cc.expected_disc_dim,
            "projected_eta": [vec_str(p) for p in cc.projected_eta],
            "scalings_cone": cone_to_dict(cc.D),
            "cone_condition_holds": cc.holds,
            "genericity_certified": cc.certified,
            "genericity_violations": [
                cc.certificate_labels[i] for i in cc.certificate.violations
            ],
            "accepted": cc.holds and cc.certified,
            "rigid_split": is_rigid_split(q),
        }
    )
    if i_br is not None:
        i_split, i_red = index_shift(q, i_br)
        out["index_shift"] = {"i_br": int(i_br), "i_split": i_split, "i_red": i_red}
    return out


def _group_dict(group) -> dict:
    return {
        "complex_dimension": group.complex_dimension,
        "torsion_order": group.torsion_order,
        "exponent_lattice": lattice_to_dict(group.exponent_lattice),
        "variables": ["/".join(str(p) for p in v) for v in group.variables],
    }


def symmetry_report(dec: Decomposition, graph: TropicalGraph, framed: bool,
                    inputs: dict, split_edge_ids=None) -> dict:
    group = symmetry_group(dec, graph, framed=framed, split_edge_ids=split_edge_ids)
    comps = component_splitting(dec, graph, split_edge_ids=split_edge_ids)
    out = _head("symmetry", inputs)
    out.update(
        {
            "framed": framed,
            "group": _group_dict(group),
            "component_splitting": [_group_dict(g) for g in comps],
            "component_dims": [g.complex_dimension for g in comps],
        }
    )
    return out


def mult_report(q: QuasiSplitGraph, inputs: dict) -> dict:
    out = _head("mult", inputs)
    out["multiplicity"] = multiplicity(q)
    return out


def potential_report(normals, constants, lam, inputs: dict) -> dict:
    series = bg_potential(normals, constants, lam)
    out = _head("potential-bg", inputs)
    out.update(
        {
            "num_vars": series.num_vars,
            "num_terms": len(series.terms),
            "series": series_to_list(series),
            "leading": series_to_list(leading_terms(series)),
        }
    )
    return out


def combine_report(series: NovikovSeries, inputs: dict) -> dict:
    out = _head("potential-combine", inputs)
    out.update(
        {
            "num_vars": series.num_vars,
            "series": series_to_list(series),
            "valuation": rat_str(series.valuation()) if not series.is_zero() else None,
        }
    )
    return out


def cut_report(dec: Decomposition, inner: str, lam, inputs: dict) -> dict:
    out = _head("cut", inputs)
    top = sorted(p.id for p in dec.polytopes.values() if p.dim == dec.ambient_dim)
    out.update(
        {
            "decomposition": decomposition_to_dict(dec),
            "inner_cell": inner,
            "num_cells": len(dec.polytopes),
            "num_top_cells": len(top),
            "tropical_fiber": is_tropical_fiber(dec, inner, lam),
        }
    )
    return out
