"""Exact rational and integer linear algebra.

Everything runs on arbitrary-precision integers and ``fractions.Fraction``;
no operation in this package ever produces a float.  Elimination always
pivots on the first usable entry in row-major order, so ranks, kernels and
normal forms are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Vec = tuple  # tuple of Fraction
Mat = tuple  # tuple of Vec


# ---------------------------------------------------------------------------
# vectors


def fr(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact arithmetic")
    return Fraction(x)


def vec(xs) -> Vec:
    return tuple(fr(x) for x in xs)


def vzero(n: int) -> Vec:
    return (Fraction(0),) * n


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(c, a: Vec) -> Vec:
    c = fr(c)
    return tuple(c * x for x in a)


def vdot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


def primitive(a) -> tuple:
    """Scale a rational vector to a primitive integer vector, keeping direction.

    The zero vector maps to itself.
    """
    a = vec(a)
    if is_zero_vec(a):
        return tuple(0 for _ in a)
    l = 1
    for x in a:
        l = l * x.denominator // gcd(l, x.denominator)
    ints = [int(x * l) for x in a]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def sign_normalized(a) -> tuple:
    """Primitive integer vector with first nonzero entry positive."""
    p = primitive(a)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


# ---------------------------------------------------------------------------
# rational matrices


def mat(rows) -> Mat:
    return tuple(vec(r) for r in rows)


def eye(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def transpose(M: Mat) -> Mat:
    return tuple(zip(*M)) if M else ()


def matvec(M: Mat, x: Vec) -> Vec:
    return tuple(vdot(row, x) for row in M)


def matmul(A: Mat, B: Mat) -> Mat:
    Bt = transpose(B)
    return tuple(tuple(vdot(row, col) for col in Bt) for row in A)


def rref(M: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form with deterministic pivoting.

    Returns (R, pivot_columns).  The pivot in each step is the first row
    (top to bottom) with a nonzero entry in the first unused column.
    """
    rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(M: Mat) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def kernel_basis(M: Mat, n: int | None = None) -> list[Vec]:
    """Basis of the right kernel {x : M x = 0}, in canonical order.

    ``n`` gives the ambient dimension when M has no rows.
    """
    if not M:
        assert n is not None
        return [tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)]
    n = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(tuple(v))
    return basis


def solve(M: Mat, b: Vec) -> Vec | None:
    """One exact solution of M x = b, or None if inconsistent."""
    if not M:
        return ()
    n = len(M[0])
    aug = tuple(tuple(row) + (bb,) for row, bb in zip(M, b, strict=True))
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = R[r][n]
    return tuple(x)


def det(M: Mat) -> Fraction:
    rows = [list(r) for r in M]
    n = len(rows)
    d = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            d = -d
        d *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable exact matrix over the rationals."""

    entries: Mat

    def __post_init__(self):
        object.__setattr__(self, "entries", mat(self.entries))
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(transpose(self.entries))

    def matvec(self, x) -> Vec:
        return matvec(self.entries, vec(x))

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(matmul(self.entries, other.entries))

    def rank(self) -> int:
        return rank(self.entries)

    def kernel_basis(self) -> list[Vec]:
        return kernel_basis(self.entries, self.cols)

    def image_basis(self) -> list[Vec]:
        """Basis of the column space: the pivot columns of the matrix."""
        _, pivots = rref(self.entries)
        cols = transpose(self.entries)
        return [cols[c] for c in pivots]

    def solve(self, b) -> Vec | None:
        return solve(self.entries, vec(b))


# ---------------------------------------------------------------------------
# integer matrices: Smith normal form and lattices


def imat(rows) -> tuple:
    out = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("non-integer entry in integer matrix")
                x = x.numerator
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


def smith_normal_form(M) -> tuple[tuple, tuple, tuple]:
    """Smith normal form of an integer matrix.

    Returns (U, D, V) with U*M*V = D, D diagonal with d1 | d2 | ... >= 0,
    and U, V unimodular.
    """
    A = [list(r) for r in imat(M)]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        # deterministic pivot: smallest nonzero absolute value, ties row-major
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    addmul_row(i, t, q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    addmul_col(j, t, q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility of the remaining block
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return (
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in A),
        tuple(tuple(r) for r in V),
    )


def hermite_normal_form(rows) -> tuple:
    """Row-style Hermite normal form of the lattice spanned by integer rows.

    The result is the canonical basis of the lattice: echelon shape,
    positive pivots, entries above each pivot reduced into [0, pivot).
    Zero rows are dropped.
    """
    A = [list(r) for r in imat(rows)]
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, m):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c] != 0:
                        A[r], A[i] = A[i], A[r]
                        changed = True
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return tuple(tuple(row) for row in A[:r])


def invariant_factors(M) -> tuple[int, ...]:
    _, D, _ = smith_normal_form(M)
    return tuple(D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i] != 0)


def torsion_order(M) -> int:
    """Product of the invariant factors exceeding 1."""
    out = 1
    for d in invariant_factors(M):
        if d > 1:
            out *= d
    return out


@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of Z^n given by an independent integer basis."""

    ambient_dim: int
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "basis", imat(self.basis))
        for b in self.basis:
            if len(b) != self.ambient_dim:
                raise ValueError("basis vector of wrong dimension")
        if rank(mat(self.basis)) != len(self.basis):
            raise ValueError("lattice basis is not linearly independent")

    @property
    def lattice_rank(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        """Exact membership of an integer vector."""
        if not self.basis:
            return all(int(x) == 0 for x in v)
        sol = solve(transpose(mat(self.basis)), vec(v))
        return sol is not None and all(x.denominator == 1 for x in sol)

    def spans(self, v) -> bool:
        """Membership of a rational vector in the rational span."""
        if not self.basis:
            return is_zero_vec(vec(v))
        return solve(transpose(mat(self.basis)), vec(v)) is not None


def saturate(L: IntegerLattice) -> IntegerLattice:
    """Largest lattice of the same rank in the same rational span.

    Computed from the Smith decomposition of the basis matrix (the first r
    rows of V^-1 span the saturation) and returned in Hermite normal form,
    which makes the operation literally idempotent.
    """
    if not L.basis:
        return L
    B = imat(L.basis)
    r = len(B)
    _, _, V = smith_normal_form(B)
    Vinv = _integer_inverse(V)
    return IntegerLattice(L.ambient_dim, hermite_normal_form(Vinv[:r]))


def _integer_inverse(V) -> tuple:
    n = len(V)
    aug = tuple(
        tuple(Fraction(V[i][j]) for j in range(n))
        + tuple(Fraction(1 if i == j else 0) for j in range(n))
        for i in range(n)
    )
    R, pivots = rref(aug)
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    out = []
    for i in range(n):
        row = R[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("inverse is not integral")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def saturated_kernel_lattice(M: Mat, n: int | None = None) -> IntegerLattice:
    """Saturated integer lattice of the rational kernel of M."""
    kb = kernel_basis(M, n)
    n = n if n is not None else (len(M[0]) if M else 0)
    if not kb:
        return IntegerLattice(n, ())
    prim = [primitive(v) for v in kb]
    return saturate(IntegerLattice(n, tuple(prim)))


def unimodular_completion(u) -> tuple:
    """Unimodular M with M @ u = e1, for a primitive integer vector u.

    Rows 2..n of M give deterministic coordinates on Z^n / Zu.
    """
    u = tuple(int(x) for x in u)
    if tuple(primitive(u)) != u:
        raise ValueError("vector must be primitive")
    col = tuple((x,) for x in u)
    U, D, V = smith_normal_form(col)
    # U @ u * V[0][0] = D with D = e1 (u primitive)
    assert D[0][0] == 1
    if V[0][0] == -1:
        U = tuple(tuple(-x for x in row) for row in U)
    return U


def quotient_projection(direction) -> Mat:
    """Rational projection t -> t/<direction> in deterministic coordinates.

    Returns the (n-1) x n matrix of the projection; its kernel is the span
    of ``direction`` and it maps Z^n onto Z^(n-1).
    """
    u = primitive(direction)
    M = unimodular_completion(u)
    return mat(M[1:])


# ---------------------------------------------------------------------------
# effective genericity


@dataclass(frozen=True)
class GenericityCertificate:
    """Result of testing a vector against a finite family of subspaces."""

    generic: bool
    violations: tuple  # indices into the tested family
    labels: tuple = ()

    def __bool__(self) -> bool:
        return self.generic


def is_generic_wrt(v, subspaces, labels=None) -> GenericityCertificate:
    """Effective genericity: v lies in none of the given proper subspaces.

    Each subspace is a list of rational basis vectors.  Raises ValueError
    if a listed subspace is the whole space.
    """
    v = vec(v)
    n = len(v)
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(len(subspaces)))
    violations = []
    for idx, B in enumerate(subspaces):
        Bm = mat(B)
        r = rank(Bm)
        if r >= n:
            raise ValueError("subspace %s is the full space" % labels[idx])
        if rank(Bm + (v,)) == r:
            violations.append(idx)
    return GenericityCertificate(not violations, tuple(violations), labels)
