"""Grothendieck groups of the d-cluster category of type A_n, three ways.

* mesh route: Euler relations of all AR triangles on all diagonals;
* fan route: the explicit relations among the fan tilting summands;
* kernel route: the kernel of ``Z^n -> K0(C)``, ``e_i -> [T_i]``, which is
  the relation lattice of the index Grothendieck group of ``add T``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .arquiver import build_quiver, mesh_relation_matrix
from .intlattice import (
    AbelianGroupType,
    IntMatrix,
    NoSolution,
    QuotientGroup,
    cokernel,
    hnf_basis,
    in_lattice,
    kernel_lattice,
    lattice_equal,
    reduce_mod_lattice,
    solve_mod_lattice,
)
from .polygon import Angulation, Diagonal, PolygonModel, fan_tilting


class NotGenerating(RuntimeError):
    """The summand classes of a tilting object fail to generate K0(C)."""


@dataclass(frozen=True)
class K0Presentation:
    generators: tuple
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.cols != len(self.generators):
            raise ValueError("relation width differs from generator count")

    def group(self) -> AbelianGroupType:
        return cokernel(self.relations)


@dataclass(frozen=True)
class IndexVector:
    coords: tuple[int, ...]
    modulus: IntMatrix


def mesh_presentation(model: PolygonModel) -> K0Presentation:
    q = build_quiver(model)
    return K0Presentation(q.vertices, mesh_relation_matrix(q))


@lru_cache(maxsize=64)
def _mesh_quotient(model: PolygonModel) -> tuple[tuple[Diagonal, ...], QuotientGroup]:
    pres = mesh_presentation(model)
    return pres.generators, QuotientGroup(pres.relations)


def k0_mesh(model: PolygonModel) -> AbelianGroupType:
    return _mesh_quotient(model)[1].group


def class_of(model: PolygonModel, u: Diagonal) -> tuple[int, ...]:
    """Coordinates of ``[u]`` in the invariant-factor decomposition of K0(C)."""
    gens, quot = _mesh_quotient(model)
    return quot.basis_class(gens.index(u))


def tilting_map(model: PolygonModel, T: Angulation) -> IntMatrix:
    gens = _mesh_quotient(model)[0]
    pos = {u: j for j, u in enumerate(gens)}
    rows = []
    for t in T:
        row = [0] * len(gens)
        row[pos[t]] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows, len(gens))


def _class_matrix(model: PolygonModel, T: Angulation) -> tuple[list[list[int]], tuple[int, ...]]:
    quot = _mesh_quotient(model)[1]
    P = tilting_map(model, T)
    return [list(quot.coords(P.row(i))) for i in range(P.rows)], quot.moduli


def _modulus_rows(moduli: Sequence[int]) -> list[list[int]]:
    k = len(moduli)
    return [[m if j == i else 0 for j in range(k)] for i, m in enumerate(moduli) if m]


def generates(model: PolygonModel, T: Angulation) -> bool:
    C, moduli = _class_matrix(model, T)
    k = len(moduli)
    if k == 0:
        return True
    span = IntMatrix.from_rows(C + _modulus_rows(moduli), k)
    return cokernel(span).is_trivial()


def im_psi_lattice(model: PolygonModel, T: Angulation) -> IntMatrix:
    """HNF basis of ``{x in Z^n : sum x_i [T_i] = 0 in K0(C)}``."""
    if not generates(model, T):
        raise NotGenerating(f"classes of {T} do not generate K0 of {model}")
    C, moduli = _class_matrix(model, T)
    n, k = len(C), len(moduli)
    if k == 0:
        return IntMatrix.identity(n)
    stacked = IntMatrix.from_rows(C + _modulus_rows(moduli), k)
    kern = kernel_lattice(stacked)
    proj = [kern.row(i)[:n] for i in range(kern.rows)]
    return hnf_basis(IntMatrix.from_rows(proj, n))


def k0_index_group(model: PolygonModel, T: Angulation) -> AbelianGroupType:
    return cokernel(im_psi_lattice(model, T))


def index_in_quotient(model: PolygonModel, T: Angulation, u: Diagonal) -> IndexVector:
    """Canonical ``x`` with ``sum x_i [T_i] = [u]``, reduced modulo the im-Psi lattice."""
    lattice = im_psi_lattice(model, T)
    C, moduli = _class_matrix(model, T)
    target = list(class_of(model, u))
    k = len(moduli)
    n = len(C)
    if k == 0:
        return IndexVector(tuple([0] * n), lattice)
    M = IntMatrix.from_rows(C, k)
    L = IntMatrix.from_rows(_modulus_rows(moduli), k) if any(moduli) else IntMatrix.zeros(0, k)
    try:
        x = solve_mod_lattice(M, L, target)
    except NoSolution:
        raise NotGenerating(f"{u} is not in the span of the classes of {T}") from None
    return IndexVector(tuple(reduce_mod_lattice(x, lattice)), lattice)


def fan_relations(model: PolygonModel) -> IntMatrix:
    """Relations among the fan summands read off the (d+3)-angles through each T_i."""
    d, n = model.d, model.n
    if n == 1:
        return IntMatrix.from_rows([[2]]) if d % 2 == 0 else IntMatrix.zeros(0, 1)
    diag = 2 if d % 2 == 0 else 0
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = diag
        if i > 0:
            row[i - 1] = 1
        if i < n - 1:
            row[i + 1] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows, n)


def theorem_d(d: int, n: int) -> AbelianGroupType:
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    if d % 2 == 0:
        return AbelianGroupType(0, (n + 1,))
    if n % 2:
        return AbelianGroupType(1)
    return AbelianGroupType(0)


def fan_ledger(model: PolygonModel, lattice: IntMatrix) -> list[str]:
    """The fan-summand identities in K0^in, each checked against ``lattice``.

    A line carries a ``FAILED`` suffix when its vector is not in the lattice.
    """
    d, n = model.d, model.n
    claims: list[tuple[str, list[int]]] = []

    def vec(**coeffs):
        v = [0] * n
        for key, c in coeffs.items():
            v[int(key[1:]) - 1] += c
        return v

    if d % 2 == 0:
        for i in range(2, n + 1):
            c = (-1) ** (i + 1) * i
            v = vec(**{f"t{i}": 1})
            v[0] -= c
            claims.append((f"[T{i}]={c}[T1]", v))
        claims.append((f"{n + 1}[T1]=0", vec(t1=n + 1)))
    elif n % 2 == 0:
        claims.extend((f"[T{i}]=0", vec(**{f"t{i}": 1})) for i in range(1, n + 1))
    else:
        for i in range(2, n + 1):
            if i % 2 == 0:
                claims.append((f"[T{i}]=0", vec(**{f"t{i}": 1})))
            else:
                c = (-1) ** ((i - 1) // 2)
                v = vec(**{f"t{i}": 1})
                v[0] -= c
                claims.append((f"[T{i}]={c}[T1]", v))
    return [s if in_lattice(v, lattice) else s + " FAILED" for s, v in claims]


def verify_cell(d: int, n: int) -> dict:
    t0 = time.perf_counter()
    model = PolygonModel(d, n)
    fan = fan_tilting(model)
    relations = fan_relations(model)
    routes = {
        "mesh": k0_mesh(model),
        "fan": cokernel(relations),
    }
    ledger: list[str] = []
    try:
        lattice = im_psi_lattice(model, fan)
        routes["kernel"] = cokernel(lattice)
        ledger = fan_ledger(model, lattice)
        if not lattice_equal(lattice, relations):
            ledger.append("lattice identity FAILED: rowspan(fan relations) != im Psi")
    except NotGenerating as exc:
        routes["kernel"] = None
        ledger.append(f"NotGenerating: {exc}")
    routes["closed_form"] = theorem_d(d, n)
    agree = len({routes[k] for k in routes}) == 1 and routes["kernel"] is not None
    agree = agree and not any(line.endswith("FAILED") for line in ledger)
    return {
        "d": d,
        "n": n,
        "routes": {k: (v.to_json() if v is not None else None) for k, v in routes.items()},
        "agree": agree,
        "ledger": ledger,
        "ms": int(round((time.perf_counter() - t0) * 1000)),
    }


def verify_range(d_range: Sequence[int], n_range: Sequence[int], workers: int = 1) -> list[dict]:
    """Run every (d, n) cell; results come back in (d, n) order regardless of scheduling."""
    cells = [(d, n) for d in d_range for n in n_range]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda c: verify_cell(*c), cells))
    return [verify_cell(d, n) for d, n in cells]


def report_json(report: list[dict], timings: bool = True) -> str:
    if not timings:
        report = [{**cell, "ms": 0} for cell in report]
    return json.dumps(report, indent=2, sort_keys=False)
