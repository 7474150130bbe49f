"""Polygon model of the d-cluster category of type A_n.

Indecomposables are d-diagonals of a regular W-gon, W = d(n+1)+2, with
vertices labelled 1..W clockwise. Suspension rotates every diagonal one
step backwards and the AR translation rotates it d steps backwards.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels


class InvalidDiagonal(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class PolygonModel:
    d: int
    n: int

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise ValueError(f"need d >= 1 and n >= 1, got d={self.d}, n={self.n}")

    @property
    def W(self) -> int:
        return self.d * (self.n + 1) + 2

    def label(self, v: int) -> int:
        """Reduce a vertex into 1..W."""
        return (v - 1) % self.W + 1

    def diagonal(self, a: int, b: int) -> Diagonal:
        a, b = self.label(a), self.label(b)
        if not is_valid_diagonal(self, a, b):
            raise InvalidDiagonal(f"({a},{b}) is not a {self.d}-diagonal of the {self.W}-gon")
        return Diagonal(min(a, b), max(a, b))

    def __str__(self):
        return f"C^{self.d}_A{self.n} (W={self.W})"


@dataclass(frozen=True, order=True)
class Diagonal:
    a: int
    b: int

    def __str__(self):
        return f"({self.a},{self.b})"

    def __iter__(self):
        return iter((self.a, self.b))


@dataclass(frozen=True)
class Angulation:
    """A maximal noncrossing set of d-diagonals, kept in summand order."""

    diagonals: tuple[Diagonal, ...]

    def __iter__(self) -> Iterator[Diagonal]:
        return iter(self.diagonals)

    def __len__(self):
        return len(self.diagonals)

    def __getitem__(self, i: int) -> Diagonal:
        return self.diagonals[i]

    def __str__(self):
        return format_diagonals(self.diagonals)


def is_valid_diagonal(model: PolygonModel, a: int, b: int) -> bool:
    W, d = model.W, model.d
    a, b = model.label(a), model.label(b)
    if a == b:
        return False
    k = (b - a) % W
    # both cells need at least d+2 sides; the congruence alone admits edges when d = 1
    return k % d == 1 % d and d + 1 <= k <= W - (d + 1)


def crosses(u: Diagonal, v: Diagonal) -> bool:
    a, b = u.a, u.b
    c, e = v.a, v.b
    if len({a, b, c, e}) < 4:
        return False
    return (a < c < b) != (a < e < b)


def rotate(model: PolygonModel, u: Diagonal, k: int) -> Diagonal:
    a, b = model.label(u.a + k), model.label(u.b + k)
    return Diagonal(min(a, b), max(a, b))


def suspend(model: PolygonModel, u: Diagonal, k: int = 1) -> Diagonal:
    return rotate(model, u, -k)


def ar_translate(model: PolygonModel, u: Diagonal) -> Diagonal:
    return rotate(model, u, -model.d)


def ar_translate_inverse(model: PolygonModel, u: Diagonal) -> Diagonal:
    return rotate(model, u, model.d)


def enumerate_diagonals(model: PolygonModel) -> list[Diagonal]:
    """All d-diagonals in lexicographic (a, b) order."""
    W = model.W
    return [
        Diagonal(a, b)
        for a in range(1, W + 1)
        for b in range(a + 1, W + 1)
        if is_valid_diagonal(model, a, b)
    ]


def crossing_table(diagonals: Sequence[Diagonal]) -> list[list[bool]]:
    return [[crosses(u, v) for v in diagonals] for u in diagonals]


def enumerate_angulations(
    model: PolygonModel,
    limit: int | None = None,
    max_nodes: int | None = None,
) -> list[Angulation]:
    """All (d+2)-angulations, each as n diagonals in canonical order.

    Every noncrossing set of n diagonals is maximal, so the search lists
    n-subsets in increasing index order and prunes on crossing.
    """
    diags = enumerate_diagonals(model)
    try:
        found = kernels.angulations(crossing_table(diags), model.n, limit, max_nodes)
    except kernels.NodeLimitExceeded as exc:
        raise ResourceLimit(str(exc)) from None
    return [Angulation(tuple(diags[i] for i in idx)) for idx in found]


def count_angulations(model: PolygonModel, max_nodes: int | None = None) -> int:
    diags = enumerate_diagonals(model)
    try:
        return kernels.count_angulations(crossing_table(diags), model.n, max_nodes)
    except kernels.NodeLimitExceeded as exc:
        raise ResourceLimit(str(exc)) from None


def fan_tilting(model: PolygonModel) -> Angulation:
    """The fan-shaped angulation T_1, ..., T_n anchored near vertex W."""
    d, W = model.d, model.W
    out = []
    for i in range(1, model.n + 1):
        if i % 2:
            a, b = (i + 1) // 2 * d + 1, W - (i - 1) // 2 * d
        else:
            a, b = (i + 2) // 2 * d, W - 1 - (i - 2) // 2 * d
        out.append(model.diagonal(a, b))
    return Angulation(tuple(out))


def is_d_rigid(model: PolygonModel, diagonals: Iterable[Diagonal]) -> bool:
    ds = list(diagonals)
    return not any(crosses(u, v) for i, u in enumerate(ds) for v in ds[i + 1:])


def is_angulation(model: PolygonModel, diagonals: Iterable[Diagonal]) -> bool:
    ds = set(diagonals)
    return len(ds) == model.n and is_d_rigid(model, ds)


_PAIR = re.compile(r"^(-?\d+),(-?\d+)$")


def parse_diagonals(model: PolygonModel, text: str) -> list[Diagonal]:
    """Parse ``"a,b;c,e;..."`` (whitespace ignored) into validated diagonals."""
    text = re.sub(r"\s+", "", text).strip("()")
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        m = _PAIR.match(chunk.strip("()"))
        if not m:
            raise InvalidDiagonal(f"cannot parse diagonal {chunk!r}")
        a, b = int(m.group(1)), int(m.group(2))
        if not 1 <= a <= model.W or not 1 <= b <= model.W:
            raise InvalidDiagonal(f"vertex out of range 1..{model.W} in {chunk!r}")
        out.append(model.diagonal(a, b))
    return out


def format_diagonals(diagonals: Iterable[Diagonal]) -> str:
    return ";".join(f"{u.a},{u.b}" for u in diagonals)
