"""Rational polyhedral cones with dual representations.

A cone carries a V-representation (rays and lineality generators) and an
H-representation (homogeneous inequalities ``a.x >= 0`` and equalities
``a.x = 0``).  Conversions run the double description method with
deterministic insertion order (input order), with redundancy eliminated
after every step, so converted representations are minimal (extreme rays,
facet inequalities) and reproducible.

Cones are immutable; the lazy representation cache is filled at most once
per value, so concurrent readers always observe a pure function.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import (
    Vec,
    is_zero_vec,
    kernel_basis,
    mat,
    matvec,
    primitive,
    rank,
    rref,
    sign_normalized,
    transpose,
    vadd,
    vdot,
    vec,
    vscale,
    vsub,
    vzero,
)


def _prim(v) -> Vec:
    return vec(primitive(v))


def _unit(n: int, j: int) -> Vec:
    return tuple(Fraction(1 if i == j else 0) for i in range(n))


def _canon_rays(rays) -> tuple:
    out = sorted({_prim(r) for r in rays if not is_zero_vec(vec(r))})
    return tuple(out)


def _canon_span(rows) -> tuple:
    """Canonical basis (primitive rref rows) of the span of the given rows."""
    rows = [vec(r) for r in rows if not is_zero_vec(vec(r))]
    if not rows:
        return ()
    R, pivots = rref(mat(rows))
    return tuple(vec(sign_normalized(R[i])) for i in range(len(pivots)))


def _reduce_mod_span(span_rref, v) -> Vec:
    """Canonical coset representative of v modulo the row span (rref rows)."""
    v = list(vec(v))
    for row in span_rref:
        p = next(i for i, x in enumerate(row) if x != 0)
        if v[p] != 0:
            f = v[p] / row[p]
            v = [x - f * y for x, y in zip(v, row)]
    return tuple(v)


# ---------------------------------------------------------------------------
# double description core


def _dd_pointed(d: int, rows) -> tuple[list, list]:
    """Generators of {y in R^d : a.y >= 0 for a in rows}.

    Returns (rays, lineality).  Rays are kept extreme modulo the lineality
    space throughout; insertion follows the input row order.
    """
    lin: list[Vec] = [_unit(d, j) for j in range(d)]
    rays: list[tuple[Vec, frozenset]] = []
    processed: list[Vec] = []

    def renorm(v) -> Vec:
        return _prim(_reduce_mod_span(lin, v))

    for a in rows:
        a = vec(a)
        idx = len(processed)
        if is_zero_vec(a):
            processed.append(a)
            rays = [(r, z | {idx}) for r, z in rays]
            continue
        i0 = next((i for i, l in enumerate(lin) if vdot(a, l) != 0), None)
        if i0 is not None:
            l0 = lin[i0]
            if vdot(a, l0) < 0:
                l0 = vec(vscale(-1, l0))
            al0 = vdot(a, l0)
            rest = [l for i, l in enumerate(lin) if i != i0]
            lin = list(
                _canon_span(vsub(l, vscale(vdot(a, l) / al0, l0)) for l in rest)
            )
            new_rays = [
                (renorm(vsub(r, vscale(vdot(a, r) / al0, l0))), z | {idx})
                for r, z in rays
            ]
            new_rays.append((renorm(l0), frozenset(range(idx))))
            rays = _dedupe(new_rays)
            processed.append(a)
            continue
        plus = [(r, z) for r, z in rays if vdot(a, r) > 0]
        zero = [(r, z | {idx}) for r, z in rays if vdot(a, r) == 0]
        minus = [(r, z) for r, z in rays if vdot(a, r) < 0]
        if not minus:
            rays = plus + zero
            processed.append(a)
            continue
        combos = []
        for rp, zp in plus:
            for rm, zm in minus:
                inter = zp & zm
                blocked = any(
                    inter <= z3
                    for r3, z3 in rays
                    if r3 is not rp and r3 is not rm
                )
                if blocked:
                    continue
                w = vsub(vscale(vdot(a, rp), rm), vscale(vdot(a, rm), rp))
                combos.append((renorm(w), frozenset(inter | {idx})))
        rays = _dedupe(plus + zero + combos)
        processed.append(a)
    return [r for r, _ in rays], lin


def _dedupe(pairs):
    seen = {}
    for r, z in pairs:
        if is_zero_vec(r):
            continue
        if r not in seen:
            seen[r] = frozenset(z)
    return [(r, z) for r, z in seen.items()]


def _h_to_v(n: int, ineqs, eqs) -> tuple[tuple, tuple]:
    """V-representation of {x : ineq.x >= 0, eq.x = 0}."""
    eqs = [vec(e) for e in eqs if not is_zero_vec(vec(e))]
    if eqs:
        K = kernel_basis(mat(eqs), n)
    else:
        K = [_unit(n, j) for j in range(n)]
    d = len(K)
    if d == 0:
        return (), ()
    restricted = [tuple(vdot(vec(a), k) for k in K) for a in ineqs]
    rays_y, lin_y = _dd_pointed(d, restricted)

    def lift(y):
        out = vzero(n)
        for c, k in zip(y, K):
            out = vadd(out, vscale(c, k))
        return out

    return _canon_rays(lift(y) for y in rays_y), _canon_span(lift(y) for y in lin_y)


def _v_to_h(n: int, rays, lineality) -> tuple[tuple, tuple]:
    """Minimal H-representation via double description on the dual cone."""
    dual_rays, dual_lin = _h_to_v(n, rays, lineality)
    return dual_rays, dual_lin


class Cone:
    """Rational polyhedral cone in R^n."""

    __slots__ = ("ambient_dim", "_rays", "_lineality", "_ineqs", "_eqs", "_minimal")

    def __init__(self, ambient_dim, rays=None, lineality=None, ineqs=None, eqs=None):
        self.ambient_dim = int(ambient_dim)
        self._minimal = None
        has_v = rays is not None or lineality is not None
        has_h = ineqs is not None or eqs is not None
        if not has_v and not has_h:
            raise ValueError("cone needs at least one representation")
        self._rays = _canon_rays(rays or ()) if has_v else None
        self._lineality = _canon_span(lineality or ()) if has_v else None
        if has_h:
            self._ineqs = tuple(
                _prim(a) for a in (ineqs or ()) if not is_zero_vec(vec(a))
            )
            self._eqs = _canon_span(eqs or ())
        else:
            self._ineqs = None
            self._eqs = None
        for group in (self._rays, self._lineality, self._ineqs, self._eqs):
            for v in group or ():
                if len(v) != self.ambient_dim:
                    raise ValueError("generator of wrong dimension")

    @classmethod
    def from_rays(cls, rays, lineality=(), ambient_dim=None):
        rays = [vec(r) for r in rays]
        lineality = [vec(l) for l in lineality]
        if ambient_dim is None:
            probe = rays or lineality
            if not probe:
                raise ValueError("ambient_dim required for the zero cone")
            ambient_dim = len(probe[0])
        return cls(ambient_dim, rays=rays, lineality=lineality)

    @classmethod
    def from_hrep(cls, ineqs, eqs=(), ambient_dim=None):
        ineqs = [vec(a) for a in ineqs]
        eqs = [vec(a) for a in eqs]
        if ambient_dim is None:
            probe = ineqs or eqs
            if not probe:
                raise ValueError("ambient_dim required for the full cone")
            ambient_dim = len(probe[0])
        return cls(ambient_dim, ineqs=ineqs, eqs=eqs)

    @classmethod
    def zero(cls, n):
        return cls(n, rays=(), lineality=())

    @classmethod
    def full(cls, n):
        return cls(n, ineqs=(), eqs=())

    # representations --------------------------------------------------------

    def _ensure_v(self):
        if self._rays is None:
            rays, lin = _h_to_v(self.ambient_dim, self._ineqs, self._eqs)
            self._rays, self._lineality = rays, lin

    def _ensure_h(self):
        if self._ineqs is None:
            self._ensure_v()
            ineqs, eqs = _v_to_h(self.ambient_dim, self._rays, self._lineality)
            self._ineqs, self._eqs = ineqs, eqs

    @property
    def rays(self) -> tuple:
        self._ensure_v()
        return self._rays

    @property
    def lineality(self) -> tuple:
        self._ensure_v()
        return self._lineality

    @property
    def ineqs(self) -> tuple:
        self._ensure_h()
        return self._ineqs

    @property
    def eqs(self) -> tuple:
        self._ensure_h()
        return self._eqs

    def minimal(self) -> "Cone":
        """The same cone with both representations minimal and canonical."""
        if self._minimal is None:
            rays, lin = _h_to_v(self.ambient_dim, self.ineqs, self.eqs)
            c = Cone(self.ambient_dim, rays=rays, lineality=lin)
            c._ineqs, c._eqs = _v_to_h(self.ambient_dim, rays, lin)
            c._minimal = c
            self._minimal = c
        return self._minimal

    def __repr__(self):
        parts = [f"n={self.ambient_dim}"]
        if self._rays is not None:
            parts.append(f"rays={len(self._rays)} lin={len(self._lineality)}")
        if self._ineqs is not None:
            parts.append(f"ineqs={len(self._ineqs)} eqs={len(self._eqs)}")
        return f"Cone({' '.join(parts)})"

    # queries ----------------------------------------------------------------

    def dim(self) -> int:
        self._ensure_v()
        gens = mat(self._rays + self._lineality)
        return rank(gens) if gens else 0

    def is_zero(self) -> bool:
        return self.dim() == 0

    def contains(self, p) -> bool:
        p = vec(p)
        if len(p) != self.ambient_dim:
            raise ValueError("point of wrong dimension")
        self._ensure_h()
        return all(vdot(a, p) >= 0 for a in self._ineqs) and all(
            vdot(a, p) == 0 for a in self._eqs
        )

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(r) for r in other.rays) and all(
            self.contains(l) and self.contains(vscale(-1, l)) for l in other.lineality
        )

    def same_set(self, other: "Cone") -> bool:
        return self.contains_cone(other) and other.contains_cone(self)

    def intersect(self, other: "Cone") -> "Cone":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Cone(
            self.ambient_dim,
            ineqs=self.ineqs + other.ineqs,
            eqs=self.eqs + other.eqs,
        )

    def linear_image(self, M, codim: int | None = None) -> "Cone":
        """Image cone under x -> M x, computed on the V-representation."""
        M = mat(M)
        m = len(M) if M else (codim if codim is not None else 0)
        if M and len(M[0]) != self.ambient_dim:
            raise ValueError("matrix has wrong number of columns")
        return Cone(
            m,
            rays=[matvec(M, r) for r in self.rays],
            lineality=[matvec(M, l) for l in self.lineality],
        )

    def preimage(self, M, domain_dim: int | None = None) -> "Cone":
        """Preimage cone {x : M x in C}, computed on the H-representation."""
        M = mat(M)
        if len(M) != self.ambient_dim:
            raise ValueError("matrix has wrong number of rows")
        if M:
            cols = len(M[0])
        elif domain_dim is not None:
            cols = domain_dim
        else:
            raise ValueError("domain_dim required for an empty matrix")
        Mt = transpose(M)

        def pull(a):
            return matvec(Mt, a) if Mt else vzero(cols)

        return Cone(
            cols,
            ineqs=[pull(a) for a in self.ineqs],
            eqs=[pull(a) for a in self.eqs],
        )

    def relative_interior_point(self) -> Vec:
        """A rational point in the relative interior; error on the zero cone.

        Sum of the extreme rays, with a lineality tiebreak for subspaces.
        """
        m = self.minimal()
        p = vzero(self.ambient_dim)
        for r in m.rays:
            p = vadd(p, r)
        if is_zero_vec(p):
            if m.lineality:
                p = m.lineality[0]
            else:
                raise ValueError("zero cone has no relative interior point")
        assert self.contains(p)
        return p


def is_increasing(cone: Cone) -> bool:
    """Increasing-cone test: every coordinate truncation slice of C inside
    the nonnegative orthant is a cone of the expected dimension.

    The i-th slice is C with coordinates i+1..n forced to zero; C is
    increasing when slice i has dimension exactly i for all i.  Raises if C
    is not contained in the orthant.
    """
    n = cone.ambient_dim
    _check_in_orthant(cone)
    for i in range(1, n + 1):
        tail = [_unit(n, k) for k in range(i, n)]
        sliced = Cone(n, ineqs=cone.ineqs, eqs=cone.eqs + tuple(tail))
        if sliced.dim() != i:
            return False
    return True


def _check_in_orthant(cone: Cone):
    if cone.lineality:
        raise ValueError("cone is not contained in the nonnegative orthant")
    for r in cone.rays:
        if any(x < 0 for x in r):
            raise ValueError("cone is not contained in the nonnegative orthant")


def normal_cone_at_first_axis(cone: Cone) -> Cone:
    """Directions v with (1, t v) in C for all small t > 0; assumes e1 in C.

    Internal cross-check oracle for the inductive characterization of
    increasing cones.
    """
    n = cone.ambient_dim
    if not cone.contains(_unit(n, 0)):
        raise ValueError("first axis not contained in the cone")
    ineqs = [a[1:] for a in cone.ineqs if a[0] == 0]
    eqs = [a[1:] for a in cone.eqs]
    return Cone(n - 1, ineqs=ineqs, eqs=eqs)


def is_increasing_inductive(cone: Cone) -> bool:
    """Recursive form of the increasing test (internal oracle)."""
    _check_in_orthant(cone)
    n = cone.ambient_dim
    if n == 0:
        return True
    if not cone.contains(_unit(n, 0)):
        return False
    return is_increasing_inductive(normal_cone_at_first_axis(cone.minimal()).minimal())


def tail_of_sequence_in(cone: Cone, scales) -> bool:
    """Whether (s_1 nu^{n-1}, s_2 nu^{n-2}, ..., s_n) lies in C for all
    large nu; decided symbolically by leading coefficients in nu.

    ``scales`` are n positive rationals multiplying the standard
    increasing sequence.
    """
    n = cone.ambient_dim
    scales = vec(scales)
    if len(scales) != n or any(s <= 0 for s in scales):
        raise ValueError("scales must be n positive rationals")

    def sign_at_infinity(a):
        for i in range(n):  # falling degrees n-1 .. 0
            c = a[i] * scales[i]
            if c != 0:
                return 1 if c > 0 else -1
        return 0

    for a in cone.ineqs:
        if sign_at_infinity(a) < 0:
            return False
    for a in cone.eqs:
        if sign_at_infinity(a) != 0:
            return False
    return True
