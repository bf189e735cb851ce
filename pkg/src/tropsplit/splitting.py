"""Quasi-split graphs: relative-position cones, discrepancy cones, the
cone condition against a cone direction, split-graph rigidity, and the
expected-dimension bookkeeping.

A quasi-split graph is a collapse kappa from a graph with tropical
structure away from the base's split edges onto a base tropical graph,
together with an ordering of the split edges.  The split-edge blocks of
all discrepancy data follow that ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import Decomposition, cone_of_relative_cell
from .cones import Cone, is_increasing
from .exact import (
    GenericityCertificate,
    is_generic_wrt,
    is_zero_vec,
    kernel_basis,
    mat,
    matvec,
    primitive,
    quotient_projection,
    rank,
    rref,
    sign_normalized,
    vec,
    vzero,
)
from .graphs import (
    TROPICAL,
    CollapseReport,
    Edge,
    TropicalGraph,
    components_without,
    match_collapse,
    split_edges,
    subgraph,
    validate_graph,
    vertex_positions,
)


class SplitError(ValueError):
    pass


class QuasiSplitGraph:
    """Validated quasi-split graph kappa: top -> base.

    ``split_order`` lists base split-edge ids in their designated order.
    With ``partial=True`` the order may cover only a subset of the derived
    split set (used by the one-edge-at-a-time check); the remaining split
    cells are then treated as ordinary tropical edges.
    """

    def __init__(self, dec: Decomposition, base: TropicalGraph, top: TropicalGraph,
                 vertex_map: dict, split_order=None, partial: bool = False):
        self.dec = dec
        self.base = base
        self.vertex_map = dict(vertex_map)
        self.partial = bool(partial)
        validate_graph(dec, base)
        wbase = vertex_positions(dec, base)
        if not wbase.realizable:
            raise SplitError("base graph is not realizable")
        self._wbase = wbase
        derived = split_edges(dec, base, order=None)
        if split_order is None:
            split_order = base.split_order if base.split_order is not None else derived
        self.split_order = tuple(split_order)
        if partial:
            if not set(self.split_order) <= set(derived):
                raise SplitError("partial split order exceeds the derived split set")
        else:
            if set(self.split_order) != set(derived) or len(self.split_order) != len(derived):
                raise SplitError(
                    f"split order {self.split_order} does not cover the derived set {derived}"
                )
        report = match_collapse(dec, top, base, self.vertex_map)
        if not report.ok:
            raise SplitError("invalid collapse: " + "; ".join(report.diagnostics))
        self.collapse: CollapseReport = report
        # locate the top edge over each split base edge
        self.split_top: dict[str, str] = {}
        for eid, bid in report.edge_map.items():
            if bid in self.split_order:
                if bid in self.split_top:
                    raise SplitError(f"base split edge {bid} has several preimages")
                self.split_top[bid] = eid
        for bid in self.split_order:
            if bid not in self.split_top:
                raise SplitError(f"base split edge {bid} has no preimage")
        self.top = self._with_inherited_directions(top)
        validate_graph(dec, self.top)
        self.top_split_ids = frozenset(self.split_top.values())
        self._check_directions()
        self._check_components()
        self._w: Cone | None = None
        self._disc = None

    # construction checks ------------------------------------------------------

    def _with_inherited_directions(self, top: TropicalGraph) -> TropicalGraph:
        """Split edges may omit their direction; they inherit the base's."""
        edges = []
        for e in top.edges:
            bid = self.collapse.edge_map.get(e.id)
            if bid in self.split_top and e.direction is None:
                d = self.base.edge(bid).direction
                if e.id in self.collapse.flipped:
                    d = tuple(-x for x in d)
                e = Edge(e.id, e.ends, e.kind, d, e.maps_to)
            edges.append(e)
        return TropicalGraph(top.vertices, tuple(edges), top.split_order)

    def _check_directions(self):
        for eid, bid in self.collapse.edge_map.items():
            e = self.top.edge(eid)
            if e.kind != TROPICAL:
                continue
            img = self.base.edge(bid)
            want = img.direction
            if eid in self.collapse.flipped:
                want = tuple(-x for x in want)
            if e.direction != want:
                raise SplitError(f"edge {eid}: direction differs from its base image")

    def _check_components(self):
        self.components = components_without(self.top, self.top_split_ids)
        for vs, es in self.components:
            sub = subgraph(self.top, vs, es)
            w = vertex_positions(self.dec, sub)
            if not w.realizable:
                raise SplitError(
                    f"component containing {min(vs)} is not realizable"
                )

    # basic data -----------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.dec.ambient_dim

    @property
    def num_split(self) -> int:
        return len(self.split_order)

    def vertex_order(self) -> tuple:
        return tuple(self.top.vertex_ids())

    def split_edge_blocks(self) -> list:
        """Per split edge (in order): (base id, top edge, base-oriented ends,
        base direction, quotient projection matrix)."""
        out = []
        for bid in self.split_order:
            eid = self.split_top[bid]
            e = self.top.edge(eid)
            ends = e.ends
            if eid in self.collapse.flipped:
                ends = (ends[1], ends[0])
            d = self.base.edge(bid).direction
            out.append((bid, e, ends, d, quotient_projection(d)))
        return out


def relative_position_cone(q: QuasiSplitGraph) -> Cone:
    """Cone of relative vertex positions: per-vertex relative cells with
    the direction condition on new edges (nonnegative multiples) and on
    retained non-split edges (real multiples); split edges are free."""
    if q._w is not None:
        return q._w
    dec = q.dec
    n = q.n
    order = q.vertex_order()
    index = {v: i for i, v in enumerate(order)}
    n_vars = n * len(order)
    ineqs: list = []
    eqs: list = []

    def block_row(i, a):
        row = [Fraction(0)] * n_vars
        for j, x in enumerate(vec(a)):
            row[i * n + j] = x
        return tuple(row)

    def pair_row(ia, ib, a):
        row = [Fraction(0)] * n_vars
        for j, x in enumerate(vec(a)):
            row[ia * n + j] += x
            row[ib * n + j] -= x
        return tuple(row)

    label_top = q.top.label
    label_base = q.base.label
    for v in order:
        cone_v = cone_of_relative_cell(dec, label_top[v], label_base[q.vertex_map[v]])
        for a in cone_v.ineqs:
            ineqs.append(block_row(index[v], a))
        for a in cone_v.eqs:
            eqs.append(block_row(index[v], a))
    collapsed = set(q.collapse.collapsed_edges)
    for e in q.top.edges:
        if e.kind != TROPICAL or e.id in q.top_split_ids:
            continue
        ia, ib = index[e.ends[0]], index[e.ends[1]]
        d = vec(e.direction)
        for i in range(n):
            for j in range(i + 1, n):
                if d[i] == 0 and d[j] == 0:
                    continue
                coeff = [Fraction(0)] * n
                coeff[i] = d[j]
                coeff[j] = -d[i]
                eqs.append(pair_row(ia, ib, coeff))
        if e.id in collapsed:
            ineqs.append(pair_row(ia, ib, d))  # new edge: nonnegative multiple
    q._w = Cone(n_vars, ineqs=ineqs, eqs=eqs)
    return q._w


@dataclass(frozen=True)
class DiscrepancyData:
    diff_matrix: tuple  # rows: one (n-1)-block per split edge, in order
    disc: Cone
    w: Cone
    blocks: tuple  # (base edge id, direction, projection matrix) per block


def discrepancy(q: QuasiSplitGraph) -> DiscrepancyData:
    """The discrepancy map Diff (projected split-edge mismatches of a
    relative position) and the discrepancy cone, its image over w."""
    if q._disc is not None:
        return q._disc
    n = q.n
    order = q.vertex_order()
    index = {v: i for i, v in enumerate(order)}
    n_vars = n * len(order)
    rows = []
    blocks = []
    for bid, e, ends, d, proj in q.split_edge_blocks():
        ia, ib = index[ends[0]], index[ends[1]]
        for prow in proj:
            row = [Fraction(0)] * n_vars
            for j, x in enumerate(prow):
                row[ia * n + j] += x
                row[ib * n + j] -= x
            rows.append(tuple(row))
        blocks.append((bid, tuple(d), proj))
    w = relative_position_cone(q)
    s = q.num_split
    disc = w.linear_image(mat(rows), codim=s * (n - 1)) if s else Cone.zero(0)
    data = DiscrepancyData(tuple(rows), disc, w, tuple(blocks))
    q._disc = data
    return data


def _genericity_family(q: QuasiSplitGraph, data: DiscrepancyData):
    """Proper rational subspaces of t that the cone direction must avoid:
    per split edge, the direction span, the block slice of span(Disc) when
    proper, and block slices of the facet hyperplanes of Disc."""
    n = q.n
    s = q.num_split
    full = s * (n - 1)
    fam, labels = [], []
    seen = set()

    def add(basis_rows, label):
        basis_rows = [vec(b) for b in basis_rows]
        if not basis_rows or rank(mat(basis_rows)) >= n:
            return
        key = tuple(sorted(_canon_rows(basis_rows)))
        if key in seen:
            return
        seen.add(key)
        fam.append(basis_rows)
        labels.append(label)

    disc_min = data.disc.minimal() if s else None
    span_rows = (disc_min.rays + disc_min.lineality) if s else ()
    span_rank = rank(mat(span_rows)) if span_rows else 0
    complement = (
        kernel_basis(mat(span_rows), full) if s and span_rank < full else []
    )
    for i, (bid, d, proj) in enumerate(data.blocks):
        add([vec(primitive(d))], f"direction span of {bid}")
        width = n - 1
        lo = i * width
        if complement:
            rows = []
            for c in complement:
                c_i = c[lo : lo + width]
                if not is_zero_vec(c_i):
                    rows.append(matvec(tuple(zip(*proj)), c_i))
            if rows:
                sub = kernel_basis(mat(rows), n)
                add(sub, f"span(Disc) sliced at {bid}")
        for k, a in enumerate(disc_min.ineqs if s else ()):
            a_i = a[lo : lo + width]
            if is_zero_vec(a_i):
                continue
            row = matvec(tuple(zip(*proj)), a_i)
            sub = kernel_basis(mat([row]), n)
            add(sub, f"facet {k} of Disc sliced at {bid}")
    return fam, labels


def _canon_rows(rows):
    R, pivots = rref(mat(rows))
    return [tuple(sign_normalized(R[i])) for i in range(len(pivots))]


@dataclass(frozen=True)
class ConeConditionVerdict:
    holds: bool
    certified: bool
    certificate: GenericityCertificate
    certificate_labels: tuple
    D: Cone  # scalings cone in R^(number of split edges)
    disc_dim: int
    expected_disc_dim: int
    projected_eta: tuple  # per split edge, pi(eta)

    @property
    def accepted(self) -> bool:
        return self.holds and self.certified


def cone_condition(q: QuasiSplitGraph, eta) -> ConeConditionVerdict:
    """Literal cone-condition verdict plus the effective-genericity
    certificate.  A failed certificate does not flip ``holds``; it marks
    the verdict as not certified."""
    eta = vec(eta)
    if len(eta) != q.n:
        raise SplitError("cone direction has wrong dimension")
    if is_zero_vec(eta):
        raise SplitError("cone direction must be nonzero")
    data = discrepancy(q)
    n, s = q.n, q.num_split
    if s == 0:
        cert = GenericityCertificate(True, (), ())
        return ConeConditionVerdict(True, True, cert, (), Cone.zero(0), 0, 0, ())
    projected = []
    for bid, d, proj in data.blocks:
        projected.append(matvec(proj, eta))
    m_eta_rows = []
    width = n - 1
    for i in range(s):
        for r in range(width):
            row = [Fraction(0)] * s
            row[i] = projected[i][r]
            m_eta_rows.append(tuple(row))
    pre = data.disc.preimage(mat(m_eta_rows), domain_dim=s)
    orthant = Cone.from_hrep(
        [tuple(Fraction(1 if j == i else 0) for j in range(s)) for i in range(s)]
    )
    D = pre.intersect(orthant).minimal()
    holds = is_increasing(D)
    fam, labels = _genericity_family(q, data)
    cert = is_generic_wrt(eta, fam, labels)
    return ConeConditionVerdict(
        holds=holds,
        certified=cert.generic,
        certificate=cert,
        certificate_labels=tuple(labels),
        D=D,
        disc_dim=data.disc.dim(),
        expected_disc_dim=s * (n - 1),
        projected_eta=tuple(projected),
    )


@dataclass(frozen=True)
class SplitGraphVerdict:
    accepted: bool
    cone_condition: ConeConditionVerdict
    rigid: bool
    disc_dim_matches: bool  # dim Disc == |split|(dim t - 1)


def is_split_graph(q: QuasiSplitGraph, eta) -> SplitGraphVerdict:
    """Split tropical graph test: the cone condition must hold and the
    cone direction must pass the effective-genericity certificate."""
    cc = cone_condition(q, eta)
    return SplitGraphVerdict(
        accepted=cc.holds and cc.certified,
        cone_condition=cc,
        rigid=is_rigid_split(q),
        disc_dim_matches=cc.disc_dim == cc.expected_disc_dim,
    )


def is_rigid_split(q: QuasiSplitGraph) -> bool:
    """Base rigid and dim w = |split edges| (dim t - 1)."""
    if q._wbase.dim != 0:
        return False
    w = relative_position_cone(q)
    return w.dim() == q.num_split * (q.n - 1)


def index_shift(q: QuasiSplitGraph, i_br: int) -> tuple[int, int]:
    """(split index, reduced index) from a caller-supplied broken index:
    dropping a split-edge matching condition adds 2(dim t - 1) dimensions,
    all of which the tropical symmetry group quotients away again."""
    i_br = int(i_br)
    return i_br + 2 * q.num_split * (q.n - 1), i_br


def iterative_split_check(intermediates, eta) -> dict:
    """One-edge-at-a-time splitting: each intermediate graph splits one more
    edge of the shared order; step k accepts when its scalings cone is
    increasing.  Agrees with the direct test on the final graph."""
    if not intermediates:
        raise SplitError("no intermediate graphs")
    final = intermediates[-1]
    order = final.split_order
    steps = []
    for k, qk in enumerate(intermediates, start=1):
        if tuple(qk.split_order) != tuple(order[:k]):
            raise SplitError(f"step {k} does not split the prefix of the order")
        cc = cone_condition(qk, eta)
        steps.append(cc.holds)
    direct = cone_condition(final, eta).holds
    return {
        "steps": steps,
        "all_steps_accept": all(steps),
        "direct": direct,
        "agrees": all(steps) == direct,
    }
