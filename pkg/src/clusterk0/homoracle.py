"""Hom/Ext dimensions in the d-cluster category via the orbit category.

The cluster category is ``D^b(mod kA_n) / F`` with ``F = tau^{-1} Sigma^d``.
Indecomposables of ``D^b`` are shifted interval modules ``M[a,b][s]`` for
the linear orientation ``1 -> 2 -> ... -> n``: projectives are ``M[i,n]``,
injectives ``M[1,i]``, and ``Hom(M[a,b], M[c,e]) != 0`` iff ``c <= a <= e <= b``.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .arquiver import build_quiver
from .polygon import Diagonal, PolygonModel, enumerate_diagonals, suspend


class AnchorMismatch(RuntimeError):
    """Propagating the anchored matching produced an arrow conflict."""


@dataclass(frozen=True, order=True)
class DbObject:
    a: int
    b: int
    s: int = 0

    def __str__(self):
        return f"M[{self.a},{self.b}][{self.s}]"


def _module_hom(a: int, b: int, c: int, e: int) -> int:
    return int(c <= a <= e <= b)


def _module_ext1(n: int, a: int, b: int, c: int, e: int) -> int:
    # 0 -> P_{b+1} -> P_a -> M[a,b] -> 0, and Hom(P_i, N) = N_i
    def at(i):
        return int(c <= i <= e)

    p1 = at(b + 1) if b < n else 0
    return p1 - at(a) + _module_hom(a, b, c, e)


def hom_db(n: int, X: DbObject, Y: DbObject) -> int:
    """dim Hom in the bounded derived category of kA_n (hereditary: degrees 0 and 1 only)."""
    k = Y.s - X.s
    if k == 0:
        return _module_hom(X.a, X.b, Y.a, Y.b)
    if k == 1:
        return _module_ext1(n, X.a, X.b, Y.a, Y.b)
    return 0


def tau_db(n: int, X: DbObject) -> DbObject:
    if X.b < n:
        return DbObject(X.a + 1, X.b + 1, X.s)
    # tau P_a = I_a[-1]
    return DbObject(1, X.a, X.s - 1)


def tau_inv_db(n: int, X: DbObject) -> DbObject:
    if X.a > 1:
        return DbObject(X.a - 1, X.b - 1, X.s)
    # tau^{-1} I_b = P_b[1]
    return DbObject(X.b, n, X.s + 1)


def sigma_db(X: DbObject, k: int) -> DbObject:
    return DbObject(X.a, X.b, X.s + k)


def successors_db(n: int, X: DbObject) -> list[DbObject]:
    """Irreducible maps out of ``X`` in the AR quiver of ``D^b``."""
    out = []
    if X.a > 1:
        out.append(DbObject(X.a - 1, X.b, X.s))
    if X.b > X.a:
        out.append(DbObject(X.a, X.b - 1, X.s))
    if X.a == 1 and X.b < n:
        # I_b -> P_{b+1}[1]
        out.append(DbObject(X.b + 1, n, X.s + 1))
    return out


def orbit_functor(model: PolygonModel, X: DbObject, k: int = 1) -> DbObject:
    """``F^k X`` for ``F = tau^{-1} Sigma^d``."""
    n, d = model.n, model.d
    for _ in range(k):
        X = tau_inv_db(n, sigma_db(X, d))
    for _ in range(-k):
        X = sigma_db(tau_db(n, X), -d)
    return X


def canonical(model: PolygonModel, X: DbObject) -> DbObject:
    """The orbit member with the smallest nonnegative shift.

    F raises the shift by d or d+1, so shifts along an orbit strictly increase
    and this member is unique.
    """
    while X.s < 0:
        X = orbit_functor(model, X, 1)
    while True:
        Y = orbit_functor(model, X, -1)
        if Y.s < 0:
            return X
        X = Y


def hom_orbit(model: PolygonModel, X: DbObject, Y: DbObject) -> int:
    """``sum_i dim Hom_{D^b}(X, F^i Y)`` over the finitely many nonzero terms."""
    n = model.n
    Z = Y
    while Z.s >= X.s:
        Z = orbit_functor(model, Z, -1)
    # Z.s < X.s: every earlier term vanishes
    if hom_db(n, X, Z):
        raise AssertionError("nonzero Hom outside the scanned shift window")
    total = 0
    Z = orbit_functor(model, Z, 1)
    while Z.s <= X.s + 1:
        total += hom_db(n, X, Z)
        Z = orbit_functor(model, Z, 1)
    if hom_db(n, X, Z):
        raise AssertionError("nonzero Hom outside the scanned shift window")
    if total > 1:
        warnings.warn(f"Hom({X}, {Y}) has dimension {total} > 1 in the orbit category", stacklevel=2)
    return total


def orbit_vertices(model: PolygonModel) -> list[DbObject]:
    n = model.n
    seen = set()
    for s in range(0, model.d + 2):
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                seen.add(canonical(model, DbObject(a, b, s)))
    return sorted(seen, key=lambda X: (X.s, X.a, X.b))


@dataclass(frozen=True)
class DiagonalBijection:
    model: PolygonModel
    to_db: dict
    to_diagonal: dict

    def __len__(self):
        return len(self.to_db)


def _orbit_quiver(model: PolygonModel, verts: list[DbObject]):
    n = model.n
    succ = {X: [canonical(model, Y) for Y in successors_db(n, X)] for X in verts}
    tau = {X: canonical(model, tau_db(n, X)) for X in verts}
    return succ, tau


@lru_cache(maxsize=64)
def diagonal_bijection(model: PolygonModel) -> DiagonalBijection:
    """Match F-orbits of ``D^b`` with diagonals by anchoring and propagating.

    The simple projective ``M[n,n][0]`` is sent to the diagonal ``(1, d+2)``;
    matches then spread along tau, tau^{-1}, and arrows wherever exactly one
    unmatched neighbour remains on each side.
    """
    verts = orbit_vertices(model)
    diags = enumerate_diagonals(model)
    if len(verts) != len(diags):
        raise AnchorMismatch(f"{len(verts)} orbits but {len(diags)} diagonals")
    succ_x, tau_x = _orbit_quiver(model, verts)
    pred_x: dict = {X: [] for X in verts}
    for X, ys in succ_x.items():
        for Y in ys:
            pred_x[Y].append(X)
    tau_inv_x = {v: k for k, v in tau_x.items()}

    q = build_quiver(model)
    succ_u = {u: [] for u in q.vertices}
    pred_u = {u: [] for u in q.vertices}
    for s, t in q.arrows:
        succ_u[q.vertices[s]].append(q.vertices[t])
        pred_u[q.vertices[t]].append(q.vertices[s])
    tau_u = {u: q.vertices[q.translation[i]] for i, u in enumerate(q.vertices)}
    tau_inv_u = {v: k for k, v in tau_u.items()}

    fwd: dict = {}
    back: dict = {}
    todo = deque()

    def match(X, u):
        if X in fwd or u in back:
            if fwd.get(X) != u or back.get(u) != X:
                raise AnchorMismatch(f"{X} -> {u} conflicts with existing matches")
            return
        fwd[X] = u
        back[u] = X
        todo.append(X)

    def spread(xs, us):
        xs, us = list(xs), list(us)
        if len(xs) != len(us):
            raise AnchorMismatch("neighbour counts differ")
        free_x = [Y for Y in xs if Y not in fwd]
        for Y in xs:
            if Y in fwd and fwd[Y] not in us:
                raise AnchorMismatch(f"arrow to {Y} has no counterpart")
        free_u = [v for v in us if v not in back]
        if len(free_x) == 1 and len(free_u) == 1:
            match(free_x[0], free_u[0])
            return True
        return not free_x

    anchor_x = canonical(model, DbObject(model.n, model.n, 0))
    anchor_u = model.diagonal(1, model.d + 2)
    match(anchor_x, anchor_u)
    pending = set()
    while todo or pending:
        if not todo:
            progress = False
            for X in sorted(pending):
                u = fwd[X]
                a = spread(succ_x[X], succ_u[u])
                b = spread(pred_x[X], pred_u[u])
                if a and b:
                    pending.discard(X)
                    progress = True
            if not progress:
                break
            continue
        X = todo.popleft()
        u = fwd[X]
        match(tau_x[X], tau_u[u])
        match(tau_inv_x[X], tau_inv_u[u])
        done_s = spread(succ_x[X], succ_u[u])
        done_p = spread(pred_x[X], pred_u[u])
        if not (done_s and done_p):
            pending.add(X)
    if len(fwd) != len(verts):
        raise AnchorMismatch(f"propagation matched {len(fwd)} of {len(verts)} vertices")
    for X in verts:
        if sorted(fwd[Y] for Y in succ_x[X]) != sorted(succ_u[fwd[X]]):
            raise AnchorMismatch(f"arrows out of {X} not preserved")
        if fwd[tau_x[X]] != tau_u[fwd[X]]:
            raise AnchorMismatch(f"translation at {X} not preserved")
    return DiagonalBijection(model, back, fwd)


def db_object(model: PolygonModel, u: Diagonal) -> DbObject:
    return diagonal_bijection(model).to_db[u]


def hom_c(model: PolygonModel, u: Diagonal, v: Diagonal) -> int:
    return hom_orbit(model, db_object(model, u), db_object(model, v))


def ext_c(model: PolygonModel, u: Diagonal, v: Diagonal, k: int) -> int:
    """dim Ext^k(u, v) = dim Hom(u, Sigma^k v) in the cluster category."""
    if not 0 <= k <= model.d + 1:
        raise ValueError(f"degree {k} outside 0..{model.d + 1}")
    X = db_object(model, u)
    Y = sigma_db(db_object(model, v), k)
    return hom_orbit(model, X, Y)


def rigid_via_ext(model: PolygonModel, diagonals) -> bool:
    ds = list(diagonals)
    return all(
        ext_c(model, u, v, k) == 0
        for u in ds for v in ds for k in range(1, model.d + 1)
    )


def sigma_correspondence_holds(model: PolygonModel) -> bool:
    """Whether Sigma on D^b matches rotation by -1 under the bijection."""
    bij = diagonal_bijection(model)
    return all(
        canonical(model, sigma_db(X, 1)) == bij.to_db[suspend(model, u, 1)]
        for u, X in bij.to_db.items()
    )
