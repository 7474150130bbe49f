"""Auslander-Reiten quiver of the polygon model and its mesh relations."""

from __future__ import annotations

from dataclasses import dataclass

from .intlattice import IntMatrix
from .polygon import (
    Diagonal,
    PolygonModel,
    ar_translate,
    enumerate_diagonals,
    is_valid_diagonal,
)


@dataclass(frozen=True)
class ArTriangle:
    start: Diagonal
    middles: tuple[Diagonal, ...]
    end: Diagonal


@dataclass(frozen=True)
class ArQuiver:
    model: PolygonModel
    vertices: tuple[Diagonal, ...]
    arrows: tuple[tuple[int, int], ...]
    translation: tuple[int, ...]

    @property
    def index(self) -> dict[Diagonal, int]:
        return {u: i for i, u in enumerate(self.vertices)}

    def successors(self, i: int) -> list[int]:
        return [t for s, t in self.arrows if s == i]

    def predecessors(self, i: int) -> list[int]:
        return [s for s, t in self.arrows if t == i]


def ar_triangle(model: PolygonModel, z: Diagonal) -> ArTriangle:
    """The mesh ending at ``z = (a, b)``: middles among ``{a-d, b}`` and ``{a, b-d}``."""
    d = model.d
    middles = []
    for a, b in ((z.a - d, z.b), (z.a, z.b - d)):
        if is_valid_diagonal(model, a, b):
            middles.append(model.diagonal(a, b))
    return ArTriangle(ar_translate(model, z), tuple(sorted(middles)), z)


def build_quiver(model: PolygonModel) -> ArQuiver:
    vertices = tuple(enumerate_diagonals(model))
    index = {u: i for i, u in enumerate(vertices)}
    arrows = []
    translation = []
    for j, z in enumerate(vertices):
        tri = ar_triangle(model, z)
        tz = index[tri.start]
        if tz == j:
            raise AssertionError(f"AR translation fixes {z} in {model}")
        translation.append(tz)
        arrows.extend((index[m], j) for m in tri.middles)
    if len(set(arrows)) != len(arrows):
        raise AssertionError(f"multiple arrows in the AR quiver of {model}")
    return ArQuiver(model, vertices, tuple(sorted(arrows)), tuple(translation))


def mesh_relation_matrix(quiver: ArQuiver) -> IntMatrix:
    """One Euler relation ``[tau z] - [middles] + [z]`` per vertex ``z``."""
    g = len(quiver.vertices)
    preds: list[list[int]] = [[] for _ in range(g)]
    for s, t in quiver.arrows:
        preds[t].append(s)
    rows = []
    for z in range(g):
        row = [0] * g
        row[quiver.translation[z]] += 1
        for m in preds[z]:
            row[m] -= 1
        row[z] += 1
        rows.append(row)
    return IntMatrix.from_rows(rows, g)


def to_dot(quiver: ArQuiver) -> str:
    m = quiver.model
    lines = [
        f'digraph "AR_C{m.d}_A{m.n}" {{',
        "  rankdir=LR;",
        "  node [shape=plaintext];",
    ]
    names = [f"v{u.a}_{u.b}" for u in quiver.vertices]
    for name, u in zip(names, quiver.vertices):
        lines.append(f'  {name} [label="({u.a},{u.b})"];')
    for s, t in quiver.arrows:
        lines.append(f"  {names[s]} -> {names[t]};")
    for j in range(len(quiver.vertices)):
        lines.append(
            f'  {names[j]} -> {names[quiver.translation[j]]} [style=dashed, constraint=false, label="tau"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
