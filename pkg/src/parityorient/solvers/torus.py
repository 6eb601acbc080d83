"""Tori C_p □ C_q with p, q >= 4, under P, S and Sbar.

Frame keys are (i, j) with both coordinates cyclic; row X_j is a p-cycle and
column Y_i a q-cycle. Every case reduces to cylinders, quasi 2-cylinders,
grids, paths and cycles after rotating or reflecting the frame.
"""

from __future__ import annotations

from .cylinder import cyl_part
from .engine import Ctx, Frame, Order, remap
from .grid import grid_part
from .quasi import quasi_part


def _row(f: Frame, j: int, p: int) -> list[int]:
    return [f[(i, j)] for i in range(p)]


def _col(f: Frame, i: int, q: int) -> list[int]:
    return [f[(i, j)] for j in range(q)]


def rotate(f: Frame, p: int, q: int, di: int = 0, dj: int = 0) -> Frame:
    """Shift coordinates so that (di, dj) becomes (0, 0)."""
    return remap(f, lambda c: ((c[0] - di) % p, (c[1] - dj) % q))


def reflect_rows(f: Frame, q: int) -> Frame:
    return remap(f, lambda c: (c[0], (-c[1]) % q))


def transpose(f: Frame) -> Frame:
    return remap(f, lambda c: (c[1], c[0]))


def row_cylinder(f: Frame, p: int, q: int, j0: int, count: int) -> tuple[Frame, int, int]:
    """Rows j0, j0+1, ... (cyclically, ``count`` of them) as a cylinder frame."""
    return {(i, b): f[(i, (j0 + b) % q)] for i in range(p) for b in range(count)}, p, count


def col_cylinder(f: Frame, q: int, i0: int, count: int) -> tuple[Frame, int, int]:
    """Columns i0 .. i0+count-1 as a cylinder whose cycle runs along j."""
    return {(a, b): f[(i0 + b, a)] for a in range(q) for b in range(count)}, q, count


def _count(vs, t) -> int:
    return sum(1 for v in vs if v in t)


def torus_order(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    P, S, Sb = ctx.conditions(list(f.values()), t)
    if not (P and S and Sb):
        return None
    for frame, a, b in ((f, p, q), (transpose(f), q, p)):
        for r in range(b):
            x = _row(frame, r, a)
            if _count(x, t) % 2 == a % 2 and _count(x, t) < a:
                return _row_case(ctx, rotate(frame, a, b, dj=r), a, b, t)
    if p % 2 == 1 and q % 2 == 0:
        f, p, q = transpose(f), q, p
    if p % 2 == 0:
        return _even_case(ctx, f, p, q, t)
    return _odd_case(ctx, f, p, q, t)


def _row_case(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    x0 = _row(f, 0, p)
    rest = row_cylinder(f, p, q, 1, q - 1)
    upper = [v for j in range(1, q) for v in _row(f, j, p)]
    middle = [v for j in range(2, q - 1) for v in _row(f, j, p)]
    t_up = frozenset(v for v in upper if v in t)

    def direct():
        return [ctx.cycle(x0), cyl_part(ctx, *rest)]

    def split():
        o = ctx.cycle_order(x0, frozenset(v for v in x0 if v in t))
        if o is None:
            return None
        return [ctx.fixed(o[:2]), cyl_part(ctx, *rest), ctx.fixed(o[2:])]

    if t_up != frozenset(upper) and t_up != frozenset(middle):
        return ctx.first(t, direct, split)
    return ctx.first(t, split, direct)


def _even_case(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    r = next(j for j in range(q) if _count(_row(f, j, p), t) < p)
    f = rotate(f, p, q, dj=r)
    i = next(i for i in range(p) if f[(i, 0)] not in t and f[((i - 1) % p, 0)] in t)
    f = rotate(f, p, q, di=i)
    k = next(j for j in range(1, q) if _count(_row(f, j, p), t) % 2)
    if k == q - 1:
        f = reflect_rows(f, q)
        k = next(j for j in range(1, q) if _count(_row(f, j, p), t) % 2)
    if any(_count(_row(f, j, p), t) < p for j in range(k + 1, q)):
        return ctx.run(t, [cyl_part(ctx, *row_cylinder(f, p, q, 0, k + 1)), cyl_part(ctx, *row_cylinder(f, p, q, k + 1, q - k - 1))])
    quasi = {(a, 0): f[(a, q - 1)] for a in range(p)}
    quasi.update({(a, 1): f[(a, 0)] for a in range(1, p)})
    grid = {(a, b): f[(1 + a, 1 + b)] for a in range(p - 1) for b in range(q - 2)}
    return ctx.run(
        t,
        [ctx.path(_col(f, 0, q)[: q - 1]), quasi_part(ctx, quasi, p), grid_part(ctx, grid, p - 1, q - 2)],
    )


def _odd_case(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    for frame, a, b in ((f, p, q), (transpose(f), q, p)):
        full = [_count(_row(frame, j, a), t) == a for j in range(b)]
        if any(full):
            r = next(j for j in range(b) if not full[j] and full[(j + 1) % b])
            return _full_row_case(ctx, rotate(frame, a, b, dj=r), a, b, t)
    i = next(i for i in range(p) if f[(i, 0)] not in t)
    f = rotate(f, p, q, di=i)
    quasi = {(a, 0): f[(a, 1)] for a in range(p)}
    quasi.update({(a, 1): f[(a, 0)] for a in range(1, p)})
    return ctx.run(
        t,
        [ctx.fixed([f[(0, 0)]]), cyl_part(ctx, *row_cylinder(f, p, q, 2, q - 2)), quasi_part(ctx, quasi, p)],
    )


def _full_row_case(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    """Row 0 is not inside T while row 1 is."""
    upper = [v for j in range(2, q) for v in _row(f, j, p)]
    _, s2, sb2 = ctx.conditions(upper, frozenset(v for v in upper if v in t))
    if s2 and sb2:
        return ctx.run(t, [cyl_part(ctx, *row_cylinder(f, p, q, 2, q - 2)), cyl_part(ctx, *row_cylinder(f, p, q, 0, 2))])
    if not sb2:
        return ctx.run(t, [cyl_part(ctx, *row_cylinder(f, p, q, 1, 2)), cyl_part(ctx, *row_cylinder(f, p, q, 3, q - 2))])
    x0 = _row(f, 0, p)
    if _count(x0, t):
        i = next(i for i in range(p) if f[(i, 0)] not in t and f[((i + 1) % p, 0)] in t)
        f = rotate(f, p, q, di=i)
        return ctx.run(t, [cyl_part(ctx, *col_cylinder(f, q, 0, 2)), cyl_part(ctx, *col_cylinder(f, q, 2, p - 2))])
    quasi = {(a, 0): f[(1, a)] for a in range(q)}
    quasi.update({(a, 1): f[(0, a)] for a in range(1, q)})
    return ctx.run(
        t,
        [ctx.fixed([f[(0, 0)]]), cyl_part(ctx, *col_cylinder(f, q, 2, p - 2)), quasi_part(ctx, quasi, q)],
    )
