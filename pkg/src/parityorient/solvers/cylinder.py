"""Cylinders C_p □ P_q.

Frame coordinates are (i, j) with i on the cycle (mod p) and j on the path.
Rows X_j are cycles, columns Y_i are paths. With p odd and q even the parity
condition suffices; otherwise P, S and Sbar are needed.
"""

from __future__ import annotations

from .engine import Ctx, Frame, Order, Part, col, remap, row
from .grid import grid_part


def cyl_part(ctx: Ctx, f: Frame, p: int, q: int) -> Part:
    return list(f.values()), lambda t: cylinder_order(ctx, f, p, q, t)


def rows_block(f: Frame, p: int, j0: int, j1: int) -> tuple[Frame, int, int]:
    """Rows j0..j1 as a cylinder frame (rows re-indexed from 0)."""
    return {(i, j - j0): f[(i, j)] for i in range(p) for j in range(j0, j1 + 1)}, p, j1 - j0 + 1


def open_grid(f: Frame, p: int, skip: int, j0: int, j1: int) -> tuple[Frame, int, int]:
    """Columns skip+1, ..., skip+p-1 (cyclically) and rows j0..j1 as a grid frame."""
    g = {(a, j - j0): f[((skip + 1 + a) % p, j)] for a in range(p - 1) for j in range(j0, j1 + 1)}
    return g, p - 1, j1 - j0 + 1


def flip_rows(f: Frame, q: int) -> Frame:
    return remap(f, lambda c: (c[0], q - 1 - c[1]))


def _count(vs, t) -> int:
    return sum(1 for v in vs if v in t)


def cylinder_order(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    verts = list(f.values())
    if q == 1:
        return ctx.cycle_order(row(f, 0, p), t)
    P, S, Sb = ctx.conditions(verts, t)
    if not P:
        return None
    if p % 2 == 1 and q % 2 == 0:
        return _odd_even(ctx, f, p, q, t)
    if not (S and Sb):
        return None
    if p % 2 == 1:
        return _odd_odd(ctx, f, p, q, t)
    return _even(ctx, f, p, q, t)


def _odd_even(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    i = next(i for i in range(p) if (q - _count(col(f, i, q), t)) % 2)
    y = ctx.path(col(f, i, q))
    rest = grid_part(ctx, *open_grid(f, p, i, 0, q - 1))
    return ctx.first(t, lambda: [y, rest], lambda: [rest, y])


def _odd_odd(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    for i in range(p):
        if _count(col(f, i, q), t) % 2 == (q - 1) % 2:
            return ctx.run(t, [ctx.path(col(f, i, q)), grid_part(ctx, *open_grid(f, p, i, 0, q - 1))])

    def state(r):
        c = _count(r, t)
        return "empty" if c == 0 else "full" if c == len(r) else "partial"

    first, last = state(row(f, 0, p)), state(row(f, q - 1, p))
    if first != "partial" and last == "partial":
        f = flip_rows(f, q)
        first, last = last, first
    if first == "partial":
        x0 = row(f, 0, p)
        above = cyl_part(ctx, *rows_block(f, p, 1, q - 1))
        if _count(x0, t) % 2 == p % 2:
            return ctx.run(t, [ctx.cycle(x0), above])
        return ctx.run(t, [above, ctx.cycle(x0)])
    if first == "full" and last == "full":
        def column_row(frame, i):
            return [
                grid_part(ctx, *open_grid(frame, p, i, 1, q - 1)),
                ctx.cycle(row(frame, 0, p)),
                ctx.path(col(frame, i, q)[1:]),
            ]

        i = next(
            i for i in range(p)
            if any(v not in t for v in open_grid(f, p, i, 1, q - 1)[0].values())
        )
        flipped = flip_rows(f, q)
        return ctx.first(t, lambda: column_row(f, i), lambda: column_row(flipped, i))
    if first == "full" and last == "empty":
        f = flip_rows(f, q)
        first, last = last, first

    def row_column(frame, i):
        return [
            ctx.path(col(frame, i, q)[1:]),
            ctx.cycle(row(frame, 0, p)),
            grid_part(ctx, *open_grid(frame, p, i, 1, q - 1)),
        ]

    if first == "empty" and last == "full":
        return ctx.run(t, row_column(f, 0))
    k = next(k for k in range(p) if q - _count(col(f, k, q), t) >= 4)
    i = 0 if k != 0 else 1
    flipped = flip_rows(f, q)
    return ctx.first(t, lambda: row_column(f, i), lambda: row_column(flipped, i))


def _even(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    if _count(row(f, 0, p), t) % 2 == 0 and _count(row(f, q - 1, p), t) % 2 == 1:
        f = flip_rows(f, q)
    if _count(row(f, 0, p), t) % 2 == 1:
        return _even_odd_row(ctx, f, p, q, t)

    def sub_ok(frame):
        verts = list(frame.values())
        _, s, sb = ctx.conditions(verts, frozenset(v for v in verts if v in t))
        return s and sb

    if not sub_ok(rows_block(f, p, 1, q - 1)[0]):
        if not sub_ok(rows_block(f, p, 0, q - 2)[0]):
            cands = [
                (lambda i: lambda: [ctx.path(col(f, i, q)), grid_part(ctx, *open_grid(f, p, i, 0, q - 1))])(i)
                for i in range(p)
            ]
            return ctx.first(t, *cands)
        f = flip_rows(f, q)
    x0 = row(f, 0, p)
    above = cyl_part(ctx, *rows_block(f, p, 1, q - 1))
    if _count(x0, t):
        return ctx.run(t, [above, ctx.cycle(x0)])

    def d2():
        if q < 3:
            return None
        square = [f[(0, 0)], f[(1, 0)], f[(1, 1)], f[(0, 1)]]
        strip = {(a, j): f[(2 + a, j)] for a in range(p - 2) for j in range(2)}
        return [ctx.cycle(square), cyl_part(ctx, *rows_block(f, p, 2, q - 1)), grid_part(ctx, strip, p - 2, 2)]

    return ctx.first(t, lambda: [ctx.cycle(x0), above], d2)


def _even_odd_row(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    x0 = row(f, 0, p)
    s = next(s for s in range(p) if _count([x0[(s + d) % p] for d in range(3)], t) % 2 == 0)
    window = [x0[(s + d) % p] for d in range(3)]
    w = next(v for v in window if v not in t)
    above = cyl_part(ctx, *rows_block(f, p, 1, q - 1))
    rest1 = [v for v in x0 if v != w]
    rest3 = [v for v in x0 if v not in window]
    return ctx.first(
        t,
        lambda: [ctx.fixed([w]), above, ctx.path(rest1)],
        lambda: [ctx.path(window), above, ctx.path(rest3)],
    )
