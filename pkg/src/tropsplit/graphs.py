"""Tropical graphs: vertex-polytope labels, integer edge directions,
realizability by vertex positions, rigidity, and edge-collapse morphisms.

Vertex positions live in the dual complex: the position of v ranges over
the dual cell of its polytope label, and each tropical edge e = (a, b)
forces position(a) - position(b) onto the positive span of its direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import Decomposition
from .exact import vdot, vec
from .polyhedra import Polyhedron

TROPICAL = "tropical"
INTERIOR = "interior"
BOUNDARY = "boundary"
EDGE_KINDS = (TROPICAL, INTERIOR, BOUNDARY)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple  # (a, b): direction condition reads pos(a) - pos(b)
    kind: str = TROPICAL
    direction: tuple | None = None  # integer vector for tropical edges
    maps_to: str | None = None  # explicit image under a collapse, optional

    def __post_init__(self):
        if self.kind not in EDGE_KINDS:
            raise GraphError(f"edge {self.id}: unknown kind {self.kind}")
        if self.direction is not None:
            object.__setattr__(self, "direction", tuple(int(x) for x in self.direction))


@dataclass(frozen=True)
class TropicalGraph:
    vertices: tuple  # pairs (vertex id, polytope id)
    edges: tuple  # Edge
    split_order: tuple | None = None  # optional user ordering of split edges

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((str(v), str(p)) for v, p in self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate vertex ids")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise GraphError("duplicate edge ids")
        object.__setattr__(self, "_label", dict(self.vertices))
        object.__setattr__(self, "_edge_index", {e.id: e for e in self.edges})

    @property
    def label(self) -> dict:
        return self._label

    def vertex_ids(self) -> list:
        return sorted(v for v, _ in self.vertices)

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge_index[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid}") from None

    def tropical_edges(self) -> list:
        return [e for e in self.edges if e.kind == TROPICAL]


def edge_cell(dec: Decomposition, graph: TropicalGraph, e: Edge) -> str:
    """P(e) = P(a) n P(b); must be a listed cell of the decomposition."""
    pa = graph.label[e.ends[0]]
    pb = graph.label[e.ends[1]]
    cell = dec.intersection_cell(pa, pb)
    if cell is None:
        raise GraphError(f"edge {e.id}: endpoint cells {pa}, {pb} do not meet")
    return cell


def validate_graph(dec: Decomposition, graph: TropicalGraph) -> None:
    """Tropical-graph invariants: labels exist, edge cells are listed, and
    directions are nonzero vectors of the edge cell's normal lattice."""
    for v, p in graph.vertices:
        if p not in dec.polytopes:
            raise GraphError(f"vertex {v}: unknown polytope {p}")
        if p not in dec.dual_cells:
            raise GraphError(f"vertex {v}: polytope {p} has no dual cell")
    for e in graph.edges:
        for end in e.ends:
            if end not in graph.label:
                raise GraphError(f"edge {e.id}: unknown endpoint {end}")
        if e.ends[0] == e.ends[1]:
            raise GraphError(f"edge {e.id} is a loop")
        if e.kind == TROPICAL:
            if e.direction is None:
                raise GraphError(f"edge {e.id}: tropical edge without direction")
            if all(x == 0 for x in e.direction):
                raise GraphError(f"edge {e.id}: zero direction")
            cell = edge_cell(dec, graph, e)
            lattice = dec.normal_space(cell)
            if not lattice.contains(e.direction):
                raise GraphError(
                    f"edge {e.id}: direction not in the normal lattice of {cell}"
                )
        elif e.direction is not None:
            raise GraphError(f"edge {e.id}: non-tropical edge with a direction")


@dataclass(frozen=True)
class VertexPositionPolyhedron:
    """Closed position polyhedron of a tropical graph plus strictness data.

    ``realizable`` means the strict system (open dual cells, positive edge
    multipliers) is feasible; ``realizable_weakly`` only asks for the closed
    polyhedron to be nonempty.  ``dim`` is the dimension of the closed
    polyhedron (-1 when empty) and ``witness`` a strict position map when
    one exists.
    """

    vertex_order: tuple
    closed: Polyhedron
    strict_rows: tuple  # rows (a, b) valid on `closed`, needed strictly
    realizable: bool
    realizable_weakly: bool
    dim: int
    witness: tuple | None

    def position(self, witness, v: str):
        i = self.vertex_order.index(v)
        n = self.closed.ambient_dim // len(self.vertex_order)
        return witness[i * n : (i + 1) * n]


def _block_row(n_vars: int, block: int, n: int, a):
    row = [Fraction(0)] * n_vars
    for j, x in enumerate(vec(a)):
        row[block * n + j] = x
    return tuple(row)


def _pair_row(n_vars: int, block_a: int, block_b: int, n: int, a):
    """Row representing a.(x_blockA - x_blockB)."""
    row = [Fraction(0)] * n_vars
    for j, x in enumerate(vec(a)):
        row[block_a * n + j] += x
        row[block_b * n + j] -= x
    return tuple(row)


def _direction_rows(direction, n_vars, ia, ib, n):
    """Equality rows forcing pos(a) - pos(b) onto the line of `direction`
    (2x2 minors), plus the inequality row whose sign is the multiplier."""
    d = vec(direction)
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            if d[i] == 0 and d[j] == 0:
                continue
            coeff = [Fraction(0)] * n
            coeff[i] = d[j]
            coeff[j] = -d[i]
            eqs.append(_pair_row(n_vars, ia, ib, n, coeff))
    ineq = _pair_row(n_vars, ia, ib, n, d)
    return eqs, ineq


def vertex_positions(dec: Decomposition, graph: TropicalGraph) -> VertexPositionPolyhedron:
    """The polyhedron of vertex position maps, with strict realizability."""
    validate_graph(dec, graph)
    order = tuple(graph.vertex_ids())
    n = dec.ambient_dim
    n_vars = n * len(order)
    index = {v: i for i, v in enumerate(order)}
    ineqs = []  # (row, b) meaning row.x <= b
    eqs = []
    strict = []  # rows (row, b) of `ineqs` that the strict system needs
    for v in order:
        dual = dec.dual(graph.label[v])
        cell_ineqs, cell_eqs = dual.hrep()
        for a, b in cell_ineqs:
            row = (_block_row(n_vars, index[v], n, a), b)
            ineqs.append(row)
            strict.append(row)
        for a, b in cell_eqs:
            eqs.append((_block_row(n_vars, index[v], n, a), b))
    for e in graph.tropical_edges():
        ia, ib = index[e.ends[0]], index[e.ends[1]]
        minor_rows, ineq_row = _direction_rows(e.direction, n_vars, ia, ib, n)
        for r in minor_rows:
            eqs.append((r, Fraction(0)))
        # <pos(a)-pos(b), d> >= 0, strictly for a positive multiplier
        row = (tuple(-x for x in ineq_row), Fraction(0))
        ineqs.append(row)
        strict.append(row)
    closed = Polyhedron.from_hrep(n_vars, ineqs=ineqs, eqs=eqs)
    weakly = not closed.is_empty()
    realizable = weakly and all(
        not closed.lies_in_hyperplane(a, b) for a, b in strict
    )
    witness = closed.relative_interior_point() if realizable else None
    if witness is not None:
        # a relative interior point avoids every strict boundary: no strict
        # row is implicit, so each cuts out a proper face
        assert all(vdot(vec(a), witness) < b for a, b in strict)
    return VertexPositionPolyhedron(
        vertex_order=order,
        closed=closed,
        strict_rows=tuple(strict),
        realizable=realizable,
        realizable_weakly=weakly,
        dim=closed.dim(),
        witness=witness,
    )


def is_rigid(dec: Decomposition, graph: TropicalGraph) -> bool:
    w = vertex_positions(dec, graph)
    if not w.realizable:
        raise GraphError("graph is not realizable")
    return w.dim == 0


@dataclass(frozen=True)
class CollapseReport:
    ok: bool
    diagnostics: tuple
    collapsed_edges: tuple  # top edge ids that kappa collapses
    edge_map: dict  # top edge id -> base edge id, for uncollapsed edges
    flipped: frozenset  # uncollapsed top edges stored with reversed ends


def match_collapse(dec: Decomposition, top: TropicalGraph, base: TropicalGraph,
                   vertex_map: dict) -> CollapseReport:
    """Structural matching of a collapse kappa: top -> base.

    An edge is collapsed exactly when its endpoints map to one base vertex;
    uncollapsed edges must match a base edge by endpoint images (``maps_to``
    overrides) with the same direction, up to simultaneous end/direction
    reversal.
    """
    diags = []
    for v in top.label:
        if v not in vertex_map:
            diags.append(f"vertex {v} has no image")
    images = set(vertex_map.values())
    for v in base.label:
        if v not in images:
            diags.append(f"base vertex {v} has no preimage")
    for v, img in vertex_map.items():
        if v not in top.label:
            diags.append(f"unknown vertex {v} in the map")
        elif img not in base.label:
            diags.append(f"vertex {v} maps to unknown vertex {img}")
    if diags:
        return CollapseReport(False, tuple(diags), (), {}, frozenset())
    for v, img in vertex_map.items():
        if not dec.face_le(top.label[v], base.label[img]):
            diags.append(
                f"vertex {v}: {top.label[v]} is not a face of {base.label[img]}"
            )
    collapsed = []
    edge_map = {}
    flipped = set()
    base_by_ends = {}
    for e in base.edges:
        base_by_ends.setdefault(e.ends, []).append(e)
    for e in top.edges:
        a, b = vertex_map[e.ends[0]], vertex_map[e.ends[1]]
        if a == b:
            collapsed.append(e.id)
            continue
        if e.maps_to is not None:
            candidates = [base.edge(e.maps_to)]
        else:
            candidates = base_by_ends.get((a, b), []) + base_by_ends.get((b, a), [])
        if len(candidates) != 1:
            diags.append(f"edge {e.id}: image edge not unique (got {len(candidates)})")
            continue
        img = candidates[0]
        flip = img.ends == (b, a)
        if img.ends != ((b, a) if flip else (a, b)):
            diags.append(f"edge {e.id}: declared image {img.id} has wrong endpoints")
            continue
        if img.kind != e.kind:
            diags.append(f"edge {e.id}: kind changes under the collapse")
        edge_map[e.id] = img.id
        if flip:
            flipped.add(e.id)
    mapped = set(edge_map.values())
    for e in base.edges:
        if e.id not in mapped:
            diags.append(f"base edge {e.id} has no preimage")
    return CollapseReport(not diags, tuple(diags), tuple(collapsed), edge_map,
                          frozenset(flipped))


def validate_collapse(dec: Decomposition, top: TropicalGraph, base: TropicalGraph,
                      vertex_map: dict) -> CollapseReport:
    """Tropical edge collapse: structural match plus unchanged directions
    on uncollapsed edges."""
    validate_graph(dec, top)
    validate_graph(dec, base)
    report = match_collapse(dec, top, base, vertex_map)
    diags = list(report.diagnostics)
    for eid, bid in report.edge_map.items():
        e = top.edge(eid)
        img = base.edge(bid)
        if e.kind != TROPICAL:
            continue
        want = img.direction if eid not in report.flipped else tuple(
            -x for x in img.direction
        )
        if e.direction != want:
            diags.append(f"edge {eid}: direction changes under the collapse")
    return CollapseReport(not diags, tuple(diags), report.collapsed_edges,
                          report.edge_map, report.flipped)


def split_edges(dec: Decomposition, graph: TropicalGraph, order=None) -> tuple:
    """Edges whose cell lies in the split set, in the supplied order.

    A supplied ordering (argument or the graph's split_order) must cover
    exactly the derived set; without one the edges come sorted by id.
    """
    validate_graph(dec, graph)
    derived = {
        e.id for e in graph.tropical_edges() if edge_cell(dec, graph, e) in dec.split_set
    }
    if order is None:
        order = graph.split_order
    if order is None:
        return tuple(sorted(derived))
    order = tuple(order)
    if set(order) != derived or len(order) != len(derived):
        raise GraphError(
            f"split-edge ordering {order} does not cover the derived set {sorted(derived)}"
        )
    return order


def subgraph(graph: TropicalGraph, vertex_ids, edge_ids) -> TropicalGraph:
    vs = [(v, p) for v, p in graph.vertices if v in vertex_ids]
    es = [e for e in graph.edges if e.id in edge_ids]
    return TropicalGraph(tuple(vs), tuple(es))


def components_without(graph: TropicalGraph, removed_edge_ids) -> list:
    """Connected components of the graph minus the given edges.

    Returns a list of (vertex id set, edge id set), ordered by smallest
    vertex id.
    """
    parent = {v: v for v, _ in graph.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for e in graph.edges:
        if e.id not in removed_edge_ids:
            union(e.ends[0], e.ends[1])
    groups: dict[str, set] = {}
    for v, _ in graph.vertices:
        groups.setdefault(find(v), set()).add(v)
    comps = []
    for vs in groups.values():
        es = {
            e.id
            for e in graph.edges
            if e.id not in removed_edge_ids and e.ends[0] in vs and e.ends[1] in vs
        }
        comps.append((vs, es))
    comps.sort(key=lambda c: min(c[0]))
    return comps
