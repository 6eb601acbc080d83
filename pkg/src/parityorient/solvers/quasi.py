"""Quasi 2-cylinders Q_p: C_p □ P_2 without the vertex (0, 1).

Frame keys are (i, 0) for the full cycle X_0 and (i, 1), i >= 1, for the
path X_1. For odd p the parity condition suffices; even p needs P, S, Sbar.
"""

from __future__ import annotations

from .engine import Ctx, Frame, Order, Part, remap
from .grid import grid_part


def quasi_part(ctx: Ctx, f: Frame, p: int) -> Part:
    return list(f.values()), lambda t: quasi_order(ctx, f, p, t)


def _x0(f: Frame, p: int) -> list[int]:
    return [f[(i, 0)] for i in range(p)]


def _x1(f: Frame, p: int, lo: int = 1, hi: int | None = None) -> list[int]:
    hi = p - 1 if hi is None else hi
    return [f[(i, 1)] for i in range(lo, hi + 1)]


def reflect(f: Frame, p: int) -> Frame:
    """i -> -i mod p, an automorphism fixing the missing vertex."""
    return remap(f, lambda c: ((-c[0]) % p, c[1]))


def _two_rows(f: Frame, lo: int, hi: int) -> tuple[Frame, int, int]:
    return {(i - lo, j): f[(i, j)] for i in range(lo, hi + 1) for j in range(2)}, hi - lo + 1, 2


def quasi_order(ctx: Ctx, f: Frame, p: int, t: frozenset) -> Order | None:
    P, S, Sb = ctx.conditions(list(f.values()), t)
    if not P:
        return None
    if p % 2 == 1:
        return _odd(ctx, f, p, t)
    if not (S and Sb):
        return None
    return _even(ctx, f, p, t)


def _odd(ctx: Ctx, f: Frame, p: int, t: frozenset) -> Order | None:
    x0, x1 = _x0(f, p), _x1(f, p)
    t0 = [v for v in x0 if v in t]
    corner = f[(0, 0)]
    if len(t0) % 2 == 1:
        if t0 != [corner]:
            return ctx.run(t, [ctx.path(x1), ctx.cycle(x0)])
        return ctx.run(t, [ctx.cycle(x0), ctx.path(x1)])
    if t0:
        i = next(i for i in range(1, p) if f[(i, 0)] in t)
        v = f[(i, 0)]
        return ctx.run(t, [ctx.path([w for w in x0 if w != v]), ctx.path(x1), ctx.fixed([v])])
    v = f[(1, 0)]
    return ctx.run(t, [ctx.fixed([v]), ctx.path(x1), ctx.path([w for w in x0 if w != v])])


def _even(ctx: Ctx, f: Frame, p: int, t: frozenset) -> Order | None:

    x0, x1 = _x0(f, p), _x1(f, p)
    t0 = frozenset(v for v in x0 if v in t)
    cP, cS, cSb = ctx.conditions(x0, t0)
    if cP and cS and cSb:
        return ctx.run(t, [ctx.cycle(x0), ctx.path(x1)])
    if len(t0) % 2 == 0:
        # T(X_0) = X_0: split X_1 at an even position so the tail has odd |T|.
        for frame in (f, reflect(f, p)):
            for l in range(1, (p - 2) // 2 + 1):
                tail = _x1(frame, p, 2 * l)
                if sum(1 for v in tail if v in t) % 2 == 1:
                    head = _x1(frame, p, 1, 2 * l - 1)
                    return ctx.run(t, [ctx.path(tail), ctx.cycle(_x0(frame, p)), ctx.path(head)])
        return None
    if t0 != {f[(0, 0)]}:
        return ctx.run(t, [ctx.path(x1), ctx.cycle(x0)])
    for frame in (f, reflect(f, p)):
        for l in range(1, (p - 2) // 2 + 1):
            tail = _x1(frame, p, 2 * l)
            if sum(1 for v in tail if v in t) % 2 == 0:
                return ctx.run(
                    t,
                    [
                        grid_part(ctx, *_two_rows(frame, 2 * l, p - 1)),
                        ctx.fixed([frame[(0, 0)]]),
                        grid_part(ctx, *_two_rows(frame, 1, 2 * l - 1)),
                    ],
                )
    return None
