"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 input error.  All reports are
canonical JSON on stdout (or the -o target); diagnostics go to stderr.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction
from importlib import resources

import click

from . import fixtures, reports
from .complexes import DecompositionError, toric_cut
from .diagram import dual_complex_svg
from .graphs import GraphError
from .potential import split_contribution
from .serialize import (
    canonical_json,
    collapse_from_dict,
    decomposition_from_dict,
    graph_from_dict,
    parse_rat,
    parse_vec,
    series_from_list,
)
from .splitting import QuasiSplitGraph, SplitError

INPUT_ERROR = 2
NEGATIVE = 1


def _fail(message: str, code: int = INPUT_ERROR):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _fail(f"cannot read {path}: {exc}")


def _load_json_or_inline(arg: str):
    """Accept either a path or an inline JSON literal."""
    try:
        return json.loads(arg)
    except json.JSONDecodeError:
        return _load_json(arg)


def _emit(report: dict, output: str | None):
    text = canonical_json(report)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _load_dec(path: str):
    try:
        return decomposition_from_dict(_load_json(path))
    except (DecompositionError, ValueError, KeyError, TypeError) as exc:
        _fail(f"bad decomposition {path}: {exc}")


def _load_graph_dict(path: str) -> dict:
    data = _load_json(path)
    if not isinstance(data, dict) or "vertices" not in data:
        _fail(f"{path} is not a graph file")
    return data


def _build_quasi_split(dec, top_dict, base_dir: str):
    if "collapse" not in top_dict:
        _fail("graph file has no collapse block; a quasi-split input needs one")
    vertex_map, to_graph = collapse_from_dict(top_dict)
    if isinstance(to_graph, str):
        base_dict = _load_json(os.path.join(base_dir, to_graph))
    else:
        base_dict = to_graph
    try:
        return QuasiSplitGraph(
            dec,
            graph_from_dict(base_dict),
            graph_from_dict(top_dict),
            vertex_map,
        ), base_dict
    except (SplitError, GraphError, ValueError, KeyError) as exc:
        _fail(f"bad quasi-split input: {exc}")


@click.group()
def main():
    """Exact combinatorics of split tropical graphs."""


# ---------------------------------------------------------------------------


@main.command("cut")
@click.option("--normals", required=True, help="JSON file or literal: list of integer normals")
@click.option("--constants", required=True, help="JSON file or literal: list of rationals")
@click.option("--eps", required=True, help="JSON file or literal: list of positive rationals")
@click.option("--lambda", "lambda_", required=True, help="JSON file or literal: interior point")
@click.option("-o", "--output", default=None,
              help="write the decomposition file here, ready for the other commands")
@click.option("--diagram", default=None, help="write an SVG sketch of the dual complex")
def cut_cmd(normals, constants, eps, lambda_, output, diagram):
    """Multiple-cut decomposition of a moment polytope.

    The report goes to stdout; -o saves the decomposition itself.
    """
    data = {
        "normals": _load_json_or_inline(normals),
        "constants": _load_json_or_inline(constants),
        "epsilons": _load_json_or_inline(eps),
        "lambda": _load_json_or_inline(lambda_),
    }
    try:
        lam = parse_vec(data["lambda"])
        dec, inner = toric_cut(
            data["normals"],
            [parse_rat(c) for c in data["constants"]],
            [parse_rat(e) for e in data["epsilons"]],
            lam,
        )
    except (DecompositionError, ValueError) as exc:
        _fail(str(exc))
    report = reports.cut_report(dec, inner, lam, {"cut_input": data})
    _emit(report, None)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(report["decomposition"]) + "\n")
    if diagram:
        with open(diagram, "w", encoding="utf-8") as fh:
            fh.write(dual_complex_svg(dec))


@main.group("graph")
def graph_group():
    """Tropical graph commands."""


@graph_group.command("check")
@click.argument("dec_path")
@click.argument("graph_path")
@click.option("-o", "--output", default=None)
@click.option("--diagram", default=None, help="SVG of the dual complex with the witness")
def graph_check(dec_path, graph_path, output, diagram):
    """Invariants, realizability and rigidity of a tropical graph."""
    dec = _load_dec(dec_path)
    gd = _load_graph_dict(graph_path)
    try:
        graph = graph_from_dict(gd)
        report = reports.graph_report(dec, graph, {"dec": _load_json(dec_path), "graph": gd})
    except (GraphError, ValueError, KeyError) as exc:
        _fail(f"bad graph: {exc}")
    _emit(report, output)
    if diagram:
        from .graphs import vertex_positions

        w = vertex_positions(dec, graph)
        positions = None
        edges = None
        if w.witness is not None:
            n = dec.ambient_dim
            positions = {
                v: w.witness[i * n : (i + 1) * n] for i, v in enumerate(w.vertex_order)
            }
            edges = [e.ends for e in graph.edges]
        with open(diagram, "w", encoding="utf-8") as fh:
            fh.write(dual_complex_svg(dec, positions, edges))
    if not report["realizable"]:
        sys.exit(NEGATIVE)


@main.group("split")
def split_group():
    """Split tropical graph commands."""


@split_group.command("check")
@click.argument("dec_path")
@click.argument("qsplit_path")
@click.option("--eta", required=True, help="cone direction, comma-separated rationals")
@click.option("--i-br", default=None, type=int, help="broken index for the dimension bookkeeping")
@click.option("-o", "--output", default=None)
def split_check(dec_path, qsplit_path, eta, i_br, output):
    """Relative-position cone, discrepancy cone, cone condition, rigidity."""
    dec = _load_dec(dec_path)
    top_dict = _load_graph_dict(qsplit_path)
    q, base_dict = _build_quasi_split(dec, top_dict, os.path.dirname(qsplit_path))
    try:
        eta_vec = tuple(Fraction(part.strip()) for part in eta.split(","))
    except ValueError as exc:
        _fail(f"bad eta: {exc}")
    try:
        report = reports.split_report(
            q, eta_vec,
            {"dec": _load_json(dec_path), "top": top_dict, "base": base_dict},
            i_br=i_br,
        )
    except (SplitError, ValueError) as exc:
        _fail(str(exc))
    _emit(report, output)
    if not report["accepted"]:
        sys.exit(NEGATIVE)


@main.command("symmetry")
@click.argument("dec_path")
@click.argument("graph_path")
@click.option("--framed", is_flag=True, default=False)
@click.option("-o", "--output", default=None)
def symmetry_cmd(dec_path, graph_path, framed, output):
    """Dimension, torsion, and component splitting of the symmetry group."""
    dec = _load_dec(dec_path)
    gd = _load_graph_dict(graph_path)
    inputs = {"dec": _load_json(dec_path), "graph": gd}
    try:
        if "collapse" in gd:
            q, base_dict = _build_quasi_split(dec, gd, os.path.dirname(graph_path))
            report = reports.symmetry_report(
                dec, q.top, framed, inputs, split_edge_ids=q.top_split_ids
            )
        else:
            report = reports.symmetry_report(dec, graph_from_dict(gd), framed, inputs)
    except (GraphError, ValueError, KeyError) as exc:
        _fail(f"bad graph: {exc}")
    _emit(report, output)


@main.command("mult")
@click.argument("dec_path")
@click.argument("qsplit_path")
@click.option("-o", "--output", default=None)
def mult_cmd(dec_path, qsplit_path, output):
    """Multiplicity: order of the framed tropical symmetry group."""
    dec = _load_dec(dec_path)
    top_dict = _load_graph_dict(qsplit_path)
    q, base_dict = _build_quasi_split(dec, top_dict, os.path.dirname(qsplit_path))
    try:
        report = reports.mult_report(
            q, {"dec": _load_json(dec_path), "top": top_dict, "base": base_dict}
        )
    except GraphError as exc:
        click.echo(f"verdict: {exc}", err=True)
        sys.exit(NEGATIVE)
    _emit(report, output)


@main.group("potential")
def potential_group():
    """Novikov series commands."""


@potential_group.command("bg")
@click.option("--normals", required=True)
@click.option("--constants", required=True)
@click.option("--lambda", "lambda_", required=True)
@click.option("-o", "--output", default=None)
def potential_bg(normals, constants, lambda_, output):
    """Batyrev-Givental potential of a moment polytope."""
    data = {
        "normals": _load_json_or_inline(normals),
        "constants": _load_json_or_inline(constants),
        "lambda": _load_json_or_inline(lambda_),
    }
    try:
        report = reports.potential_report(
            data["normals"],
            [parse_rat(c) for c in data["constants"]],
            parse_vec(data["lambda"]),
            {"potential_input": data},
        )
    except ValueError as exc:
        _fail(str(exc))
    _emit(report, output)


@potential_group.command("combine")
@click.option("--mult", "mult_", required=True, type=int)
@click.option("--split-edges", "split_edges_", required=True, type=int)
@click.option("--d-black", required=True, type=int)
@click.option("--sign", required=True, type=click.Choice(["+1", "-1"]))
@click.argument("series_paths", nargs=-1, required=True)
@click.option("-o", "--output", default=None)
def potential_combine(mult_, split_edges_, d_black, sign, series_paths, output):
    """Split composition weight: scaled product of component series."""
    series = []
    data_in = []
    for path in series_paths:
        data = _load_json_or_inline(path)
        data_in.append(data)
        try:
            series.append(series_from_list(data["terms"], int(data["num_vars"])))
        except (KeyError, ValueError, TypeError) as exc:
            _fail(f"bad series {path}: {exc}")
    try:
        combined = split_contribution(
            mult_, split_edges_, d_black, int(sign), series
        )
    except ValueError as exc:
        _fail(str(exc))
    report = reports.combine_report(combined, {"series": data_in})
    _emit(report, output)


# ---------------------------------------------------------------------------
# corpus


def corpus_cases() -> list:
    """The bundled worked-example fixtures and how to analyse each."""
    return [
        {"name": "rigid-square-gamma1", "kind": "graph",
         "dec": "square_plain", "graph": "fig_rigid_gamma1"},
        {"name": "rigid-square-gamma2", "kind": "graph",
         "dec": "square_plain", "graph": "fig_rigid_gamma2"},
        {"name": "rigid-square-relative-cone", "kind": "split",
         "dec": "square_plain", "graph": "fig_rigid_gamma2", "eta": ["1", "-1"]},
        {"name": "square-split-ray21", "kind": "split",
         "dec": "square_split", "graph": "fig_square_top1", "eta": ["1", "-1"]},
        {"name": "square-split-ray21-reversed-eta", "kind": "split",
         "dec": "square_split", "graph": "fig_square_top1", "eta": ["-1", "1"]},
        {"name": "square-split-ray0m1", "kind": "split",
         "dec": "square_split", "graph": "fig_square_top2", "eta": ["-1", "1"]},
        {"name": "cube-nongeneric", "kind": "split",
         "dec": "cube_split", "graph": "fig_cube_top1", "eta": ["1", "1", "0"]},
        {"name": "cube-split-accepted", "kind": "split",
         "dec": "cube_split", "graph": "fig_cube_top2", "eta": ["3/4", "1", "0"]},
        {"name": "cube-symmetry-framed", "kind": "symmetry",
         "dec": "cube_split", "graph": "fig_cube_top2", "framed": True},
        {"name": "cube-symmetry-unframed", "kind": "symmetry",
         "dec": "cube_split", "graph": "fig_cube_top2", "framed": False},
        {"name": "cube-mult", "kind": "mult",
         "dec": "cube_split", "graph": "fig_cube_top2"},
        {"name": "drop-single", "kind": "split",
         "dec": "square_split", "graph": "fig_drop_single_top", "eta": ["1", "-3"]},
        {"name": "drop-three", "kind": "split",
         "dec": "square_split", "graph": "fig_drop_three_top", "eta": ["1", "-3"]},
        {"name": "four-split-accepted", "kind": "split",
         "dec": "square_split", "graph": "fig_four_top", "eta": ["5", "1"]},
        {"name": "four-split-rejected", "kind": "split",
         "dec": "square_split", "graph": "fig_four_top_prime", "eta": ["5", "1"]},
        {"name": "toric-square", "kind": "cut", "input": "toric_square"},
        {"name": "potential-square", "kind": "potential", "input": "toric_square"},
        {"name": "potential-hirzebruch", "kind": "potential", "input": "hirzebruch_two"},
    ]


def run_corpus_case(case: dict) -> dict:
    if case["kind"] in ("graph", "split", "symmetry", "mult"):
        dec_dict = fixtures.DECOMPOSITIONS[case["dec"]]()
        dec = decomposition_from_dict(dec_dict)
        top_dict = fixtures.GRAPHS[case["graph"]]()
    if case["kind"] == "graph":
        return reports.graph_report(
            dec, graph_from_dict(top_dict), {"dec": dec_dict, "graph": top_dict}
        )
    if case["kind"] in ("split", "mult") or (
        case["kind"] == "symmetry" and "collapse" in top_dict
    ):
        vertex_map, to_graph = collapse_from_dict(top_dict)
        base_dict = fixtures.GRAPHS[to_graph]()
        q = QuasiSplitGraph(
            dec, graph_from_dict(base_dict), graph_from_dict(top_dict), vertex_map
        )
        inputs = {"dec": dec_dict, "top": top_dict, "base": base_dict}
        if case["kind"] == "split":
            return reports.split_report(q, parse_vec(case["eta"]), inputs)
        if case["kind"] == "mult":
            return reports.mult_report(q, inputs)
        return reports.symmetry_report(
            dec, q.top, case["framed"], inputs, split_edge_ids=q.top_split_ids
        )
    if case["kind"] == "symmetry":
        return reports.symmetry_report(
            dec, graph_from_dict(top_dict), case["framed"],
            {"dec": dec_dict, "graph": top_dict},
        )
    if case["kind"] == "cut":
        data = getattr(fixtures, case["input"])()
        lam = parse_vec(data["lambda"])
        dec, inner = toric_cut(
            data["normals"],
            [parse_rat(c) for c in data["constants"]],
            [parse_rat(e) for e in data["epsilons"]],
            lam,
        )
        return reports.cut_report(dec, inner, lam, {"cut_input": data})
    if case["kind"] == "potential":
        data = getattr(fixtures, case["input"])()
        return reports.potential_report(
            data["normals"],
            [parse_rat(c) for c in data["constants"]],
            parse_vec(data["lambda"]),
            {"potential_input": data},
        )
    raise ValueError(f"unknown corpus case kind {case['kind']}")


def expected_report_path(name: str):
    return resources.files("tropsplit").joinpath("corpus", f"{name}.expected.json")


@main.group("corpus")
def corpus_group():
    """Bundled worked-example regression corpus."""


@corpus_group.command("run")
def corpus_run():
    """Re-run every bundled fixture and diff against the stored reports."""
    failures = 0
    for case in corpus_cases():
        name = case["name"]
        got = canonical_json(run_corpus_case(case))
        path = expected_report_path(name)
        try:
            want = path.read_text(encoding="utf-8").strip()
        except FileNotFoundError:
            click.echo(f"MISSING  {name} (no stored report)")
            failures += 1
            continue
        if got == want:
            click.echo(f"ok       {name}")
        else:
            click.echo(f"DIFFERS  {name}")
            failures += 1
    if failures:
        click.echo(f"{failures} corpus case(s) failed", err=True)
        sys.exit(NEGATIVE)


@corpus_group.command("export")
@click.argument("directory")
def corpus_export(directory):
    """Write the bundled fixture inputs (decompositions, graphs, toric data)
    as JSON files into DIRECTORY."""
    os.makedirs(directory, exist_ok=True)
    for name, builder in fixtures.DECOMPOSITIONS.items():
        with open(os.path.join(directory, f"{name}.dec.json"), "w", encoding="utf-8") as fh:
            fh.write(canonical_json(builder()) + "\n")
    for name, builder in fixtures.GRAPHS.items():
        data = builder()
        if "collapse" in data and isinstance(data["collapse"]["to_graph"], str):
            data["collapse"]["to_graph"] = data["collapse"]["to_graph"] + ".graph.json"
        with open(os.path.join(directory, f"{name}.graph.json"), "w", encoding="utf-8") as fh:
            fh.write(canonical_json(data) + "\n")
    for name in ("toric_square", "toric_cube", "hirzebruch_two"):
        with open(os.path.join(directory, f"{name}.json"), "w", encoding="utf-8") as fh:
            fh.write(canonical_json(getattr(fixtures, name)()) + "\n")
    click.echo(f"fixtures written to {directory}")


@corpus_group.command("regenerate")
@click.option("--corpus-dir", default=None, help="write into this directory instead of the package")
def corpus_regenerate(corpus_dir):
    """Rewrite the stored expected reports (development helper)."""
    for case in corpus_cases():
        got = canonical_json(run_corpus_case(case))
        if corpus_dir:
            path = os.path.join(corpus_dir, f"{case['name']}.expected.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(got + "\n")
        else:
            target = expected_report_path(case["name"])
            with open(str(target), "w", encoding="utf-8") as fh:
                fh.write(got + "\n")
        click.echo(f"wrote    {case['name']}")


if __name__ == "__main__":
    main()
