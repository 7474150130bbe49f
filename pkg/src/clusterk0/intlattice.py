"""Exact integer linear algebra over Python ints.

Row convention throughout: a lattice is the row span of a matrix, and a
finitely presented abelian group is ``Z^g`` modulo the row span of a
relation matrix with ``g`` columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class NoSolution(ValueError):
    """Raised when a congruence ``x.M = b (mod L)`` has no integer solution."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count needed for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def tolist(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.tolist(), other.tolist()
        out = []
        for r in a:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append([sum(x * b[k][j] for k, x in nz) for j in range(other.cols)])
        return IntMatrix.from_rows(out, other.cols)

    def vecmul(self, v: Sequence[int]) -> list[int]:
        """Row vector times matrix: ``v . self``."""
        if len(v) != self.rows:
            raise ValueError("length mismatch")
        out = [0] * self.cols
        for i, c in enumerate(v):
            if c:
                base = i * self.cols
                for j in range(self.cols):
                    x = self.entries[base + j]
                    if x:
                        out[j] += c * x
        return out

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return str(self.tolist())


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i, i] for i in range(min(self.S.rows, self.S.cols))]


@dataclass(frozen=True, order=True)
class AbelianGroupType:
    """Isomorphism type ``Z^free_rank x Z/t1 x ... x Z/tk`` with t1 | t2 | ... ."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative rank")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"invariant factor {t} < 2")
        for s, t in zip(self.torsion, self.torsion[1:]):
            if t % s:
                raise ValueError(f"invariant factors {s}, {t} do not form a divisor chain")

    @classmethod
    def from_diagonal(cls, gens: int, diagonal: Iterable[int]) -> AbelianGroupType:
        diag = [abs(x) for x in diagonal]
        rank = sum(1 for x in diag if x)
        return cls(gens - rank, tuple(x for x in diag if x > 1))

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj: dict) -> AbelianGroupType:
        return cls(obj["rank"], tuple(obj["torsion"]))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"


def _as_rows(A: IntMatrix) -> list[list[int]]:
    return A.tolist()


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _hnf_rows(A: list[list[int]], cols: int, track: bool = True):
    """In-place row-style HNF of ``A``; returns (pivot columns, U rows or None)."""
    m = len(A)
    U = _identity_rows(m) if track else None
    pivots = []
    r = 0
    for c in range(cols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(A[i][c]), i))
            if p != r:
                A[r], A[p] = A[p], A[r]
                if track:
                    U[r], U[p] = U[p], U[r]
            piv = A[r][c]
            done = True
            for i in range(r + 1, m):
                x = A[i][c]
                if x:
                    q = x // piv
                    if q:
                        Ai, Ar = A[i], A[r]
                        for j in range(c, cols):
                            if Ar[j]:
                                Ai[j] -= q * Ar[j]
                        if track:
                            Ui, Ur = U[i], U[r]
                            for j in range(m):
                                if Ur[j]:
                                    Ui[j] -= q * Ur[j]
                    if A[i][c]:
                        done = False
            if done:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            if track:
                U[r] = [-x for x in U[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                Ai, Ar = A[i], A[r]
                for j in range(c, cols):
                    if Ar[j]:
                        Ai[j] -= q * Ar[j]
                if track:
                    Ui, Ur = U[i], U[r]
                    for j in range(m):
                        if Ur[j]:
                            Ui[j] -= q * Ur[j]
        pivots.append(c)
        r += 1
    return pivots, U


def hnf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form: returns ``(H, U)`` with ``U.A = H``.

    ``H`` is in row echelon form with positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, and zero rows last. ``U`` is unimodular.
    """
    rows = _as_rows(A)
    _, U = _hnf_rows(rows, A.cols)
    return IntMatrix.from_rows(rows, A.cols), IntMatrix.from_rows(U, A.rows)


def hnf_basis(A: IntMatrix) -> IntMatrix:
    """Nonzero rows of the HNF: the canonical basis of ``rowspan(A)``."""
    rows = _as_rows(A)
    pivots, _ = _hnf_rows(rows, A.cols, track=False)
    return IntMatrix.from_rows(rows[:len(pivots)], A.cols)


def rank(A: IntMatrix) -> int:
    return hnf_basis(A).rows


def snf(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form ``U.A.V = S`` by pivoting on the smallest nonzero entry."""
    m, n = A.rows, A.cols
    S = _as_rows(A)
    U = _identity_rows(m)
    V = _identity_rows(n)

    def add_row(dst, src, q):
        Sd, Ss, Ud, Us = S[dst], S[src], U[dst], U[src]
        for j in range(n):
            if Ss[j]:
                Sd[j] += q * Ss[j]
        for j in range(m):
            if Us[j]:
                Ud[j] += q * Us[j]

    def add_col(dst, src, q):
        for row in S:
            if row[src]:
                row[dst] += q * row[src]
        for row in V:
            if row[src]:
                row[dst] += q * row[src]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Si = S[i]
            for j in range(t, n):
                x = Si[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            piv = S[t][t]
            clean = True
            for i in range(t + 1, m):
                x = S[i][t]
                if x:
                    add_row(i, t, -(x // piv))
                    if S[i][t]:
                        clean = False
            for j in range(t + 1, n):
                x = S[t][j]
                if x:
                    add_col(j, t, -(x // piv))
                    if S[t][j]:
                        clean = False
            if clean:
                # pivot must divide the whole remaining block
                bad = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % piv),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad, 1)
                continue
            # a smaller remainder appeared; move it into the pivot slot
            best = None
            for i in range(t, m):
                x = S[i][t]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, t)
            for j in range(t, n):
                x = S[t][j]
                if x and abs(x) < best[0]:
                    best = (abs(x), t, j)
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SmithDecomposition(
        IntMatrix.from_rows(U, m),
        IntMatrix.from_rows(S, n),
        IntMatrix.from_rows(V, n),
    )


def det(A: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    M = _as_rows(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return 0
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


class QuotientGroup:
    """``Z^g / rowspan(R)`` with explicit coordinates for its elements.

    Generators carrying a unit coefficient in some relation are eliminated
    first (sparse substitution), and Smith normal form runs on what remains.
    Mesh presentations are mostly unit entries, so this keeps the dense step
    small even for several hundred generators.
    """

    def __init__(self, relations: IntMatrix):
        g = relations.cols
        self.gens = g
        rels: dict[int, dict[int, int]] = {}
        occurs: dict[int, set[int]] = {j: set() for j in range(g)}
        for i in range(relations.rows):
            r = {j: x for j, x in enumerate(relations.row(i)) if x}
            if r:
                rels[i] = r
                for j in r:
                    occurs[j].add(i)
        self._eliminated: list[tuple[int, dict[int, int]]] = []
        while True:
            best = None
            for i, r in rels.items():
                for j, x in r.items():
                    if x in (1, -1):
                        key = (len(occurs[j]), len(r), i, j)
                        if best is None or key < best:
                            best = key
            if best is None:
                break
            _, _, i, j = best
            r = rels.pop(i)
            c = r[j]
            for jj in r:
                occurs[jj].discard(i)
            expr = {jj: -c * x for jj, x in r.items() if jj != j}
            self._eliminated.append((j, expr))
            for k in list(occurs[j]):
                rk = rels[k]
                f = rk[j] * c
                for jj, x in r.items():
                    v = rk.get(jj, 0) - f * x
                    if v:
                        if jj not in rk:
                            occurs[jj].add(k)
                        rk[jj] = v
                    elif jj in rk:
                        del rk[jj]
                        occurs[jj].discard(k)
                if not rk:
                    del rels[k]
            del occurs[j]
        self._survivors = sorted(occurs)
        pos = {j: p for p, j in enumerate(self._survivors)}
        s = len(self._survivors)
        dense = [[0] * s for _ in rels]
        for row, r in zip(dense, rels.values()):
            for j, x in r.items():
                row[pos[j]] = x
        self._pos = pos
        sd = snf(IntMatrix.from_rows(dense, s))
        diag = sd.diagonal
        self._diag = diag + [0] * (s - len(diag))
        self._V = sd.V
        self.group = AbelianGroupType.from_diagonal(s, diag)
        # coordinate slots that survive in the quotient
        self._slots = [p for p, x in enumerate(self._diag) if abs(x) != 1]
        self.moduli = tuple(self._diag[p] for p in self._slots)

    def _survivor_vector(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.gens:
            raise ValueError("length mismatch")
        w = {j: x for j, x in enumerate(v) if x}
        for j, expr in self._eliminated:
            c = w.pop(j, 0)
            if c:
                for jj, x in expr.items():
                    w[jj] = w.get(jj, 0) + c * x
        out = [0] * len(self._survivors)
        for j, x in w.items():
            out[self._pos[j]] += x
        return out

    def coords(self, v: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates of the class of ``v``.

        Torsion slots come first, reduced into ``[0, t)``; free slots
        follow as plain integers (modulus 0).
        """
        w = self._V.vecmul(self._survivor_vector(v)) if self._survivors else []
        out = []
        for p in self._slots:
            m = self._diag[p]
            out.append(w[p] % m if m else w[p])
        return tuple(out)

    def is_zero(self, v: Sequence[int]) -> bool:
        return not any(self.coords(v))

    def basis_class(self, j: int) -> tuple[int, ...]:
        e = [0] * self.gens
        e[j] = 1
        return self.coords(e)


def cokernel(R: IntMatrix) -> AbelianGroupType:
    """Isomorphism type of ``Z^g / rowspan(R)`` where ``g = R.cols``."""
    return QuotientGroup(R).group


def kernel_lattice(A: IntMatrix) -> IntMatrix:
    """HNF basis of the left kernel ``{x : x.A = 0}``."""
    rows = _as_rows(A)
    pivots, U = _hnf_rows(rows, A.cols)
    kern = U[len(pivots):]
    return hnf_basis(IntMatrix.from_rows(kern, A.rows))


def reduce_mod_lattice(v: Sequence[int], H: IntMatrix) -> list[int]:
    """Canonical representative of ``v`` modulo ``rowspan(H)``, ``H`` an HNF basis."""
    v = list(v)
    for i in range(H.rows):
        row = H.row(i)
        c = next(j for j, x in enumerate(row) if x)
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


def solve_mod_lattice(M: IntMatrix, L: IntMatrix, b: Sequence[int]) -> list[int]:
    """Canonical ``x`` with ``x.M - b`` in ``rowspan(L)``.

    The solution set is a coset of ``{x : x.M in rowspan(L)}``; the returned
    representative is reduced modulo the HNF of that lattice.
    """
    g, m = M.rows, M.cols
    if L.cols != m or len(b) != m:
        raise ValueError("ambient dimension mismatch")
    stacked = M.vstack(L)
    rows = _as_rows(stacked)
    pivots, U = _hnf_rows(rows, m)
    # forward substitution on the echelon rows: w.H = b
    rest = list(b)
    w = [0] * len(pivots)
    for i, c in enumerate(pivots):
        if rest[c] % rows[i][c]:
            raise NoSolution(f"target not in rowspan(M) + rowspan(L) (column {c})")
        w[i] = rest[c] // rows[i][c]
        if w[i]:
            rest = [x - w[i] * y for x, y in zip(rest, rows[i])]
    if any(rest):
        raise NoSolution("target not in rowspan(M) + rowspan(L)")
    z = [0] * stacked.rows
    for i, wi in enumerate(w):
        if wi:
            z = [a + wi * u for a, u in zip(z, U[i])]
    x = z[:g]
    kern = [u[:g] for u in U[len(pivots):]]
    if kern:
        x = reduce_mod_lattice(x, hnf_basis(IntMatrix.from_rows(kern, g)))
    return x


def lattice_equal(L1: IntMatrix, L2: IntMatrix) -> bool:
    if L1.cols != L2.cols:
        raise ValueError("ambient dimension mismatch")
    return hnf_basis(L1) == hnf_basis(L2)


def in_lattice(v: Sequence[int], H: IntMatrix) -> bool:
    return not any(reduce_mod_lattice(v, hnf_basis(H)))
