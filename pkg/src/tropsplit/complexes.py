"""Polyhedral decompositions of t-dual, dual complexes, and toric cuts.

A decomposition is a finite collection of cells (polytopes in t-dual given
by inequalities a.x <= b), a face poset, one dual cell per cell (a polytope
in t given by vertices and rays), and a designated split set of cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cones import Cone
from .exact import (
    IntegerLattice,
    fr,
    mat,
    saturated_kernel_lattice,
    vdot,
    vec,
    vsub,
)
from .polyhedra import Polyhedron


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class Polytope:
    id: str
    ineqs: tuple  # rows ((a...), b) meaning a.x <= b
    dim: int | None = None


@dataclass(frozen=True)
class DualCell:
    polytope_id: str
    vertices: tuple
    rays: tuple = ()


class Decomposition:
    """Polyhedral decomposition with dual complex and split designation."""

    def __init__(self, ambient_dim, polytopes, faces, dual_cells, split_set=()):
        self.ambient_dim = int(ambient_dim)
        self.polytopes: dict[str, Polytope] = {p.id: p for p in polytopes}
        if len(self.polytopes) != len(list(polytopes)):
            raise DecompositionError("duplicate polytope ids")
        self.face_pairs = frozenset((q, p) for q, p in faces)
        self.dual_cells: dict[str, DualCell] = {d.polytope_id: d for d in dual_cells}
        self.split_set = frozenset(split_set)
        self._geom: dict[str, Polyhedron] = {}
        self._dual_geom: dict[str, Polyhedron] = {}
        self._normal: dict[str, IntegerLattice] = {}
        self._le: frozenset | None = None
        self._isect_cache: dict[tuple[str, str], str | None] = {}
        for q, p in self.face_pairs:
            if q not in self.polytopes or p not in self.polytopes:
                raise DecompositionError(f"face pair ({q},{p}) references unknown cell")
        for s in self.split_set:
            if s not in self.polytopes:
                raise DecompositionError(f"split cell {s} unknown")

    # geometry ----------------------------------------------------------------

    def cell(self, pid: str) -> Polyhedron:
        if pid not in self._geom:
            p = self.polytopes[pid]
            self._geom[pid] = Polyhedron.from_hrep(self.ambient_dim, ineqs=p.ineqs)
        return self._geom[pid]

    def dual(self, pid: str) -> Polyhedron:
        if pid not in self._dual_geom:
            d = self.dual_cells[pid]
            self._dual_geom[pid] = Polyhedron.from_vrep(
                self.ambient_dim, vertices=d.vertices, rays=d.rays
            )
        return self._dual_geom[pid]

    def normal_space(self, pid: str) -> IntegerLattice:
        """Saturated integer basis of t_P = ann(TP)."""
        if pid not in self._normal:
            dirs = self.cell(pid).direction_space()
            self._normal[pid] = saturated_kernel_lattice(mat(dirs), self.ambient_dim)
        return self._normal[pid]

    # face poset ----------------------------------------------------------------

    def _closure(self) -> frozenset:
        if self._le is None:
            adj: dict[str, set] = {}
            for q, p in self.face_pairs:
                adj.setdefault(q, set()).add(p)
            out = set()
            for q in self.polytopes:
                seen = set()
                stack = list(adj.get(q, ()))
                while stack:
                    p = stack.pop()
                    if p in seen:
                        continue
                    seen.add(p)
                    stack.extend(adj.get(p, ()))
                out.update((q, p) for p in seen)
            self._le = frozenset(out)
        return self._le

    def face_le(self, q: str, p: str) -> bool:
        """Whether cell q is a face of cell p (or equal)."""
        return q == p or (q, p) in self._closure()

    def intersection_cell(self, p1: str, p2: str) -> str | None:
        """Id of the listed cell equal to p1 n p2, or None when empty.

        Raises DecompositionError when the intersection is nonempty but not
        a listed common face.
        """
        key = (min(p1, p2), max(p1, p2))
        if key in self._isect_cache:
            return self._isect_cache[key]
        inter = self.cell(p1).intersect(self.cell(p2))
        result: str | None = None
        if not inter.is_empty():
            for q in sorted(self.polytopes):
                if (self.face_le(q, p1) and self.face_le(q, p2)
                        and self.cell(q).same_set(inter)):
                    result = q
                    break
            if result is None:
                raise DecompositionError(
                    f"intersection of {p1} and {p2} is not a listed common face"
                )
        self._isect_cache[key] = result
        return result

    # validation ----------------------------------------------------------------

    def validate(self, geometric: bool = True) -> None:
        """Check the decomposition invariants; raises DecompositionError.

        With geometric=False the quadratic all-pairs intersection audit is
        skipped (structural checks only).
        """
        n = self.ambient_dim
        for pid, p in self.polytopes.items():
            geom = self.cell(pid)
            if geom.is_empty():
                raise DecompositionError(f"cell {pid} is empty")
            if p.dim is not None and geom.dim() != p.dim:
                raise DecompositionError(f"cell {pid} has dim {geom.dim()}, not {p.dim}")
            if pid not in self.dual_cells:
                raise DecompositionError(f"cell {pid} has no dual cell")
            dual = self.dual(pid)
            if dual.is_empty():
                raise DecompositionError(f"dual cell of {pid} is empty")
            if geom.dim() + dual.dim() != n:
                raise DecompositionError(
                    f"cell {pid}: dim {geom.dim()} + dual dim {dual.dim()} != {n}"
                )
        # poset: antisymmetry
        closure = self._closure()
        for q, p in closure:
            if q != p and (p, q) in closure:
                raise DecompositionError(f"face poset has a cycle through {q},{p}")
        # listed pairs are geometric faces, and dual faces reverse
        for q, p in self.face_pairs:
            if q == p:
                raise DecompositionError(f"reflexive face pair {q}")
            if not self.cell(q).is_face_of(self.cell(p)):
                raise DecompositionError(f"{q} is not a face of {p}")
            if not self.dual(p).is_face_of(self.dual(q)):
                raise DecompositionError(
                    f"dual of {p} is not a face of dual of {q}"
                )
        if geometric:
            for p1, p2 in itertools.combinations(sorted(self.polytopes), 2):
                self.intersection_cell(p1, p2)  # raises when violated


def cone_of_relative_cell(dec: Decomposition, pv: str, pkv: str) -> Cone:
    """Cone(kappa, v): cone generated by dual(P(v)) minus dual(P(kappa v)).

    Requires P(v) to be a face of (or equal to) P(kappa v).
    """
    if not dec.face_le(pv, pkv):
        raise DecompositionError(f"{pv} is not a face of {pkv}")
    dv = dec.dual(pv)
    dk = dec.dual(pkv)
    rays = []
    for t in dv.vertices:
        for t0 in dk.vertices:
            rays.append(vsub(t, t0))
    rays.extend(dv.recession_rays)
    rays.extend(tuple(-x for x in r) for r in dk.recession_rays)
    return Cone(dec.ambient_dim, rays=rays, lineality=())


def toric_cut(normals, constants, epsilons, lam) -> tuple[Decomposition, str]:
    """Multiple-cut decomposition of a moment polytope.

    The polytope Delta = {x : <mu_i, x> <= c_i} is cut along the hyperplanes
    <mu_i, x> = c_i - eps_i.  Cells are indexed by sign vectors; the cell
    containing ``lam`` (which must satisfy <mu_i, lam> < c_i - eps_i
    strictly) is the inner polytope.  All cells of positive codimension are
    marked split.  Returns (decomposition, inner_cell_id).
    """
    normals = [vec(m) for m in normals]
    constants = [fr(c) for c in constants]
    epsilons = [fr(e) for e in epsilons]
    if not normals:
        raise DecompositionError("no facets")
    n = len(normals[0])
    N = len(normals)
    if len(constants) != N or len(epsilons) != N:
        raise DecompositionError("normals, constants, epsilons must have equal length")
    if any(e <= 0 for e in epsilons):
        raise DecompositionError("epsilons must be positive")
    lam = vec(lam)
    delta_rows = [(m, c) for m, c in zip(normals, constants)]
    delta = Polyhedron.from_hrep(n, ineqs=delta_rows)
    if delta.is_empty() or delta.dim() != n:
        raise DecompositionError("moment polytope is not full-dimensional")
    rec = Cone(n, ineqs=[tuple(-x for x in m) for m in normals])
    if rec.dim() != 0:
        raise DecompositionError("moment polytope is unbounded")
    cuts = [c - e for c, e in zip(constants, epsilons)]
    for m, cut in zip(normals, cuts):
        if not vdot(m, lam) < cut:
            raise DecompositionError("base point is not strictly inside the inner cell")

    def cell_id(sigma):
        return "c" + "".join({-1: "m", 0: "z", 1: "p"}[s] for s in sigma)

    kept: dict[tuple, Polyhedron] = {}
    for sigma in itertools.product((-1, 0, 1), repeat=N):
        ineqs = list(delta_rows)
        eqs = []
        for s, m, cut in zip(sigma, normals, cuts):
            if s < 0:
                ineqs.append((m, cut))
            elif s > 0:
                ineqs.append((tuple(-x for x in m), -cut))
            else:
                eqs.append((m, cut))
        poly = Polyhedron.from_hrep(n, ineqs=ineqs, eqs=eqs)
        if poly.is_empty():
            continue
        # the relatively open cell must be nonempty: the closed cell may not
        # collapse onto the boundary hyperplane of any strict sign
        degenerate = any(
            s != 0 and poly.lies_in_hyperplane(m, cut)
            for s, m, cut in zip(sigma, normals, cuts)
        )
        if degenerate:
            continue
        kept[sigma] = poly

    polytopes = []
    dual_cells = []
    faces = []
    split = []
    for sigma, poly in kept.items():
        pid = cell_id(sigma)
        ineqs, eqs = poly.hrep()
        rows = tuple(ineqs) + tuple(
            pair for a, b in eqs for pair in ((a, b), (tuple(-x for x in a), -b))
        )
        polytopes.append(Polytope(pid, rows, dim=poly.dim()))
        zeros = [i for i, s in enumerate(sigma) if s == 0]
        if zeros:
            split.append(pid)
        verts = set()
        for signs in itertools.product((-1, 1), repeat=len(zeros)):
            full = list(sigma)
            for z, s in zip(zeros, signs):
                full[z] = s
            full = tuple(full)
            if full in kept:
                v = vec([0] * n)
                for i, s in enumerate(full):
                    if s > 0:
                        v = tuple(x + y for x, y in zip(v, normals[i]))
                verts.add(v)
        if not zeros:
            v = vec([0] * n)
            for i, s in enumerate(sigma):
                if s > 0:
                    v = tuple(x + y for x, y in zip(v, normals[i]))
            verts = {v}
        dual_cells.append(DualCell(pid, tuple(sorted(verts)), ()))
    sigmas = list(kept)
    for s1 in sigmas:
        for s2 in sigmas:
            if s1 == s2:
                continue
            if all(a == b or a == 0 for a, b in zip(s1, s2)):
                faces.append((cell_id(s1), cell_id(s2)))
    inner = cell_id(tuple([-1] * N))
    if inner not in {p.id for p in polytopes}:
        raise DecompositionError("inner cell did not survive the cut")
    dec = Decomposition(n, polytopes, faces, dual_cells, split)
    return dec, inner


def is_tropical_fiber(dec: Decomposition, p0: str, lam) -> bool:
    """Whether lam is interior to the cell p0 and every facet of p0 is a
    listed cell of the decomposition (so all invariant divisors of the
    inner piece are relative)."""
    if p0 not in dec.polytopes:
        raise DecompositionError(f"unknown cell {p0}")
    geom = dec.cell(p0)
    lam = vec(lam)
    ineqs, eqs = geom.hrep()
    if not geom.contains(lam):
        return False
    for a, b in ineqs:
        if vdot(vec(a), lam) == b:
            return False  # lam on the boundary
    for a, b in eqs:
        if vdot(vec(a), lam) != b:
            return False
    for a, b in ineqs:
        facet = geom.intersect_hrep(eqs=[(a, b)])
        found = any(
            dec.face_le(q, p0) and q != p0 and dec.cell(q).same_set(facet)
            for q in sorted(dec.polytopes)
        )
        if not found:
            return False
    return True
