"""
Exact integer homology.

Everything runs on Python integers: Smith normal form with extended-gcd
pivoting, cokernels as finitely generated abelian groups, homology of the
Lefschetz fibrations built from a factorization, abelianization of finite
presentations, and Z/m-coefficient homology of the closed nonorientable
surface N_k (convention: m = 0 means integer coefficients).
"""

from __future__ import annotations

import dataclasses
import json
import math
from typing import Iterable, Sequence

from .page import Page


@dataclasses.dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if self.rows < 0 or self.cols < 0 or len(entries) != self.rows \
                or any(len(row) != self.cols for row in entries):
            raise ValueError("matrix dimensions do not match its entries")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """From a list of rows; ``cols`` is needed only when there are no rows."""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        columns = [list(c) for c in columns]
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().entries
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                               for r in self.entries))

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.entries)


def bareiss_det(entries: Sequence[Sequence[int]]) -> int:
    a = [list(r) for r in entries]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for t in range(n - 1):
        if a[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if a[i][t] != 0), None)
            if swap is None:
                return 0
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _eliminator(pivot: int, entry: int) -> tuple[int, int, int, int]:
    """Unimodular 2x2 (s, x, p, q) sending (pivot, entry) to (gcd, 0)."""
    if entry % pivot == 0:
        return 1, 0, -(entry // pivot), 1
    g, s, x = _xgcd(pivot, entry)
    return s, x, -entry // g, pivot // g


def _as_rows(m) -> tuple[list[list[int]], int, int]:
    if isinstance(m, IntMatrix):
        return m.tolist(), m.rows, m.cols
    rows = [[int(x) for x in r] for r in m]
    return rows, len(rows), len(rows[0]) if rows else 0


def smith_normal_form(m, check: bool = True) -> tuple[list[int], IntMatrix, IntMatrix]:
    """
    Smith normal form of an integer matrix.

    Returns ``(d, U, V)`` where ``U @ m @ V`` is diagonal with nonnegative
    entries ``d[0] | d[1] | ...`` (``len(d) == min(rows, cols)``, zeros last)
    and ``U``, ``V`` are unimodular.  With ``check`` the factorization and
    both determinants are verified exactly before returning.
    """
    a, nr, nc = _as_rows(m)
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_combo(t, i, s, x, p, q):
        # row_t <- s*row_t + x*row_i ; row_i <- p*row_t + q*row_i
        for mat in (a, u):
            rt, ri = mat[t], mat[i]
            mat[t] = [s * e + x * f for e, f in zip(rt, ri)]
            mat[i] = [p * e + q * f for e, f in zip(rt, ri)]

    def col_combo(t, j, s, x, p, q):
        for mat in (a, v):
            for r in mat:
                e, f = r[t], r[j]
                r[t], r[j] = s * e + x * f, p * e + q * f

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        u[t], u[i] = u[i], u[t]
        for mat in (a, v):
            for r in mat:
                r[t], r[j] = r[j], r[t]
        while True:
            for i in range(t + 1, nr):
                if a[i][t]:
                    row_combo(t, i, *_eliminator(a[t][t], a[i][t]))
            for j in range(t + 1, nc):
                if a[t][j]:
                    col_combo(t, j, *_eliminator(a[t][t], a[t][j]))
            if any(a[i][t] for i in range(t + 1, nr)):
                continue
            pivot = a[t][t]
            bad = next((i for i in range(t + 1, nr)
                        if any(a[i][j] % pivot for j in range(t + 1, nc))), None)
            if bad is None:
                break
            a[t] = [e + f for e, f in zip(a[t], a[bad])]
            u[t] = [e + f for e, f in zip(u[t], u[bad])]
        if a[t][t] < 0:
            a[t] = [-e for e in a[t]]
            u[t] = [-e for e in u[t]]

    d = [a[i][i] for i in range(min(nr, nc))]
    U = IntMatrix(nr, nr, tuple(tuple(r) for r in u))
    V = IntMatrix(nc, nc, tuple(tuple(r) for r in v))
    if check:
        original = m if isinstance(m, IntMatrix) else IntMatrix(nr, nc, tuple(tuple(r) for r in _as_rows(m)[0]))
        product = U @ original @ V
        for i in range(nr):
            for j in range(nc):
                expected = d[i] if i == j else 0
                if product.entries[i][j] != expected:
                    raise ArithmeticError("Smith normal form check failed: U m V is not diag(d)")
        if abs(U.det()) != 1 or abs(V.det()) != 1:
            raise ArithmeticError("Smith normal form check failed: transform not unimodular")
        nonzero = [x for x in d if x]
        if any(b % a_ for a_, b in zip(nonzero, nonzero[1:])) or d[len(nonzero):] != [0] * (len(d) - len(nonzero)):
            raise ArithmeticError("Smith normal form check failed: divisibility chain")
    return d, U, V


def rank(m) -> int:
    d, _, _ = smith_normal_form(m, check=False)
    return sum(1 for x in d if x)


@dataclasses.dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus cyclic factors Z/d with d_1 | d_2 | ..., every d >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in torsion):
            raise ValueError(f"torsion coefficients must be >= 2, got {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion coefficients {torsion} do not form a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    @classmethod
    def from_cyclic(cls, orders: Iterable[int], free_rank: int = 0) -> AbelianGroup:
        """Normal form of free_rank copies of Z plus Z/o for each order (0 means Z)."""
        orders = [abs(int(o)) for o in orders]
        free = free_rank + orders.count(0)
        finite = [o for o in orders if o > 1]
        if not finite:
            return cls(free, ())
        diag = [[o if i == j else 0 for j in range(len(finite))] for i, o in enumerate(finite)]
        d, _, _ = smith_normal_form(diag, check=False)
        return cls(free, tuple(x for x in d if x > 1))

    @classmethod
    def cokernel(cls, m, rows: int | None = None) -> AbelianGroup:
        """Z^rows modulo the column span of ``m``."""
        a, nr, _ = _as_rows(m)
        if rows is not None:
            nr = rows
        if not a:
            return cls(nr, ())
        d, _, _ = smith_normal_form(m)
        r = sum(1 for x in d if x)
        return cls(nr - r, tuple(x for x in d if x > 1))

    @classmethod
    def free(cls, n: int) -> AbelianGroup:
        return cls(n, ())

    def direct_sum(self, other: AbelianGroup) -> AbelianGroup:
        return AbelianGroup.from_cyclic(self.torsion + other.torsion,
                                        self.free_rank + other.free_rank)

    __add__ = direct_sum

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Order of the group, or None when infinite."""
        return None if self.free_rank else math.prod(self.torsion)

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, data: dict) -> AbelianGroup:
        return cls(int(data["free_rank"]), tuple(data.get("torsion", ())))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


def _subsets_of(obj) -> tuple[int, list[tuple[int, ...]]]:
    if hasattr(obj, "hole_sets") and hasattr(obj, "k"):
        return obj.k, [tuple(s) for s in obj.hole_sets()]
    raise TypeError(f"expected a Factorization or Configuration, got {type(obj).__name__}")


def fibration_boundary_matrix(f) -> IntMatrix:
    """
    The boundary map from 2-handles to 1-handles: one column per curve,
    holding the indicator of its enclosed holes (linking with the dotted circles).
    """
    k, subsets = _subsets_of(f)
    n = Page(k).holes
    return IntMatrix.from_columns([[int(i in s) for i in range(n)] for s in subsets], rows=n)


def fibration_homology(f) -> tuple[AbelianGroup, AbelianGroup]:
    """
    (H_1, H_2) of the Lefschetz fibration over the disk with fiber F_k and
    vanishing cycles the curves of ``f``.

    The handle decomposition has one 0-handle, 2k+1 1-handles and one
    2-handle per curve.  Framings play no part in the boundary map, so only
    the hole sets matter.
    """
    boundary = fibration_boundary_matrix(f)
    h1 = AbelianGroup.cokernel(boundary, rows=boundary.rows)
    r = rank(boundary) if boundary.cols else 0
    return h1, AbelianGroup.free(boundary.cols - r)


def open_book_boundary_homology(f) -> AbelianGroup:
    """
    H_1 of the boundary 3-manifold of the fibration, from the linking matrix
    of the Kirby diagram with dotted circles read as 0-framed unknots and
    each vanishing cycle as a (-1)-framed unknot.  Curves on distinct pages
    do not link one another.
    """
    k, subsets = _subsets_of(f)
    n, c = Page(k).holes, len(subsets)
    size = n + c
    link = [[0] * size for _ in range(size)]
    for col, s in enumerate(subsets):
        for i in s:
            link[i][n + col] = link[n + col][i] = 1
        link[n + col][n + col] = -1
    return AbelianGroup.cokernel(IntMatrix.from_rows(link, cols=size), rows=size)


@dataclasses.dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple((int(g), int(e)) for g, e in r)
                                                   for r in self.relators))
        for r in self.relators:
            for g, e in r:
                if not 0 <= g < len(self.generators):
                    raise ValueError(f"relator uses undeclared generator index {g}")
                if e not in (1, -1):
                    raise ValueError(f"exponent must be +1 or -1, got {e}")

    def exponent_matrix(self) -> IntMatrix:
        """Generators by relators: column r holds the exponent sums of relator r."""
        columns = []
        for r in self.relators:
            col = [0] * len(self.generators)
            for g, e in r:
                col[g] += e
            columns.append(col)
        return IntMatrix.from_columns(columns, rows=len(self.generators))

    def __str__(self) -> str:
        def word(r):
            if not r:
                return "1"
            return " ".join(self.generators[g] + ("" if e == 1 else "^-1") for g, e in r)
        return f"< {', '.join(self.generators)} | {', '.join(word(r) for r in self.relators)} >"


def abelianization(p: GroupPresentation) -> AbelianGroup:
    return AbelianGroup.cokernel(p.exponent_matrix(), rows=len(p.generators))


def st_star_presentation(k: int) -> GroupPresentation:
    """
    pi_1 of the unit cotangent bundle of N_k: generators a_1..a_k, t with
    a_j t a_j^-1 t = 1 and a_1^2 ... a_k^2 t^-(k-2) = 1.
    """
    Page(k)
    names = tuple(f"a{j}" for j in range(1, k + 1)) + ("t",)
    t = k
    relators = [((j, 1), (t, 1), (j, -1), (t, 1)) for j in range(k)]
    last = [(j, 1) for j in range(k) for _ in range(2)]
    power = -(k - 2)
    last += [(t, 1 if power > 0 else -1)] * abs(power)
    relators.append(tuple(last))
    return GroupPresentation(names, tuple(relators))


def _kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns spanning the integer kernel lattice of ``a``."""
    if a.rows == 0:
        return IntMatrix.identity(a.cols)
    d, _, v = smith_normal_form(a)
    r = sum(1 for x in d if x)
    return IntMatrix.from_columns([v.column(j) for j in range(r, a.cols)], rows=a.cols)


def _coordinates(basis: IntMatrix, vectors: IntMatrix) -> IntMatrix:
    """Express each column of ``vectors`` in the full-column-rank lattice basis."""
    d, u, v = smith_normal_form(basis)
    uv = u @ vectors
    coords = []
    for j in range(vectors.cols):
        y = []
        for i in range(basis.cols):
            q, rem = divmod(uv.entries[i][j], d[i])
            if rem:
                raise ArithmeticError("vector does not lie in the lattice")
            y.append(q)
        if any(uv.entries[i][j] for i in range(basis.cols, basis.rows)):
            raise ArithmeticError("vector does not lie in the lattice")
        coords.append([sum(v.entries[r][c] * y[c] for c in range(basis.cols))
                       for r in range(basis.cols)])
    return IntMatrix.from_columns(coords, rows=basis.cols)


def chain_homology(boundaries: Sequence[IntMatrix], dims: Sequence[int], p: int,
                   m: int = 0) -> AbelianGroup:
    """
    H_p of a free chain complex with Z/m coefficients (m = 0: integers).

    ``dims[q]`` is the rank of C_q and ``boundaries[q]`` is the matrix of
    d_q : C_q -> C_{q-1} (``boundaries[0]`` is ignored).  Cycles are the
    integer vectors x with d_p x in m C_{p-1}; boundaries are the image of
    d_{p+1} plus m C_p.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    n = dims[p]
    if n == 0:
        return AbelianGroup()
    lower = boundaries[p] if p > 0 and dims[p - 1] else None
    if lower is None:
        cycles = IntMatrix.identity(n)
    elif m == 0:
        cycles = _kernel_basis(lower)
    else:
        kernel = _kernel_basis(lower.hstack(_scaled_identity(lower.rows, -m)))
        cycles = IntMatrix(n, kernel.cols, kernel.entries[:n])
    if cycles.cols == 0:
        return AbelianGroup()
    gens = []
    if p + 1 < len(dims) and dims[p + 1]:
        upper = boundaries[p + 1]
        gens.extend(upper.column(j) for j in range(upper.cols))
    if m:
        gens.extend([m * int(i == j) for i in range(n)] for j in range(n))
    if not gens:
        return AbelianGroup.free(cycles.cols)
    coords = _coordinates(cycles, IntMatrix.from_columns(gens, rows=n))
    return AbelianGroup.cokernel(coords, rows=cycles.cols)


def _scaled_identity(n: int, c: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n)))


def surface_chain_complex(k: int) -> tuple[list[IntMatrix], list[int]]:
    """Cellular chains of N_k: one 0-cell, k 1-cells, one 2-cell with boundary 2(e_1 + ... + e_k)."""
    Page(k)
    d1 = IntMatrix.zeros(1, k)
    d2 = IntMatrix.from_columns([[2] * k], rows=k)
    return [IntMatrix.zeros(0, 1), d1, d2], [1, k, 1]


def _check_surface_k(k):
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"need k >= 2 (an aspherical surface), got {k!r}")


def surface_homology(k: int, p: int, m: int = 0) -> AbelianGroup:
    """H_p(N_k; Z/m) for p = 0, 1, 2."""
    boundaries, dims = surface_chain_complex(k)
    if p < 0 or p > 2:
        return AbelianGroup()
    return chain_homology(boundaries, dims, p, m)


def surface_homology_mod_m(k: int, m: int) -> AbelianGroup:
    """H_1(N_k; Z/m), with m = 0 giving integer coefficients."""
    _check_surface_k(k)
    return surface_homology(k, 1, m)


def cyclic_group_homology(m: int, q: int) -> tuple[int, ...] | None:
    """
    H_q(Z/m; Z) as a coefficient group: ``None`` for the zero group, ``(0,)``
    for Z and ``(m,)`` for Z/m.
    """
    if q == 0:
        return (0,)
    if m == 0:
        return (0,) if q == 1 else None
    if m == 1 or q % 2 == 0:
        return None
    return (m,)


def lhs_e2_terms(k: int, m: int) -> dict[tuple[int, int], AbelianGroup]:
    """
    Total-degree-2 terms E^2_{p,q} = H_p(N_k; H_q(Z/m; Z)) of the
    Lyndon/Hochschild-Serre spectral sequence of 1 -> Z/m -> G -> pi_1(N_k) -> 1.

    Treats the coefficient module as trivial; the p = 1 term is the only one
    that can be nonzero.
    """
    _check_surface_k(k)
    if m < 0:
        raise ValueError("m must be nonnegative")
    terms = {}
    for p, q in ((0, 2), (1, 1), (2, 0)):
        coeff = cyclic_group_homology(m, q)
        if coeff is None:
            terms[(p, q)] = AbelianGroup()
        else:
            terms[(p, q)] = surface_homology(k, p, coeff[0])
    return terms


def extension_h2(k: int, m: int) -> AbelianGroup:
    """
    H_2 of a group extension 1 -> Z/m -> G -> pi_1(N_k) -> 1, read off as
    E_{0,2} + E_{1,1} + E_{2,0}.

    Valid only under the hypothesis that the spectral sequence has
    E^2 = E^infinity in total degree 2, which holds because pi_1(N_k) has
    cohomological dimension 2 for k >= 2.  No differentials are computed.
    """
    total = AbelianGroup()
    for group in lhs_e2_terms(k, m).values():
        total = total + group
    return total


def solve_extension(k: int, m_max: int) -> list[int]:
    """All m in 0..m_max for which the extension has vanishing H_2."""
    _check_surface_k(k)
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    return [m for m in range(m_max + 1) if extension_h2(k, m).is_trivial()]
