"""Grids P_p □ P_q.

Under the parity condition a grid instance is solvable exactly when it is not
a *bad grid*: both dimensions even, every border path bad, every interior
vertex in T. The construction peels strips off grids with an odd dimension
and otherwise works from a border path that is not bad, or from the inner
grid when all four borders are bad.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .engine import Ctx, Frame, Order, Part, block, col, remap, row


# paths ---------------------------------------------------------------------


@dataclass(frozen=True)
class BadPathWitness:
    length: int
    endpoints_in_t: bool
    pair_uniform: tuple[bool, ...]

    @property
    def bad(self) -> bool:
        return self.length % 2 == 0 and self.endpoints_in_t and all(self.pair_uniform)


def pairs(h: int) -> list[tuple[int, int]]:
    """Index pairs [w_{2k-1}, w_{2k}] for k = 1 .. (h-2)/2."""
    return [(2 * k - 1, 2 * k) for k in range(1, (h - 2) // 2 + 1)]


def bad_path_witness(seq: Sequence[int], t: frozenset) -> BadPathWitness:
    h = len(seq)
    ends = h > 0 and seq[0] in t and seq[-1] in t
    uniform = tuple((seq[a] in t) == (seq[b] in t) for a, b in pairs(h))
    return BadPathWitness(h, ends, uniform)


def is_bad_path(seq: Sequence[int], t: frozenset) -> bool:
    return bad_path_witness(seq, t).bad


def endpoint_section(seq: Sequence[int], t: frozenset) -> tuple[int, str] | None:
    """(k, side) such that the end section of 2k+1 vertices on ``side`` has an even T count.

    Endpoint checks come first, then the smallest non-uniform pair. None when
    the path is bad.
    """
    h = len(seq)
    if seq[0] not in t:
        return 0, "prefix"
    if seq[-1] not in t:
        return 0, "suffix"
    for k, (a, b) in enumerate(pairs(h), start=1):
        if (seq[a] in t) != (seq[b] in t):
            return k, "prefix"
    return None


# grids ----------------------------------------------------------------------


def grid_sides(f: Frame, p: int, q: int) -> dict[str, list[int]]:
    return {
        "Y0": col(f, 0, q),
        "Yp": col(f, p - 1, q),
        "X0": row(f, 0, p),
        "Xq": row(f, q - 1, p),
    }


def interior(f: Frame, p: int, q: int) -> list[int]:
    return [f[(i, j)] for i in range(1, p - 1) for j in range(1, q - 1)]


def is_bad_grid(f: Frame, p: int, q: int, t: frozenset) -> bool:
    if p % 2 or q % 2:
        return False
    if not all(is_bad_path(side, t) for side in grid_sides(f, p, q).values()):
        return False
    return all(v in t for v in interior(f, p, q))


def grid_edge_count(p: int, q: int) -> int:
    return p * (q - 1) + q * (p - 1)


def transpose(f: Frame) -> Frame:
    return remap(f, lambda c: (c[1], c[0]))


def flip_i(f: Frame, p: int) -> Frame:
    return remap(f, lambda c: (p - 1 - c[0], c[1]))


def flip_j(f: Frame, q: int) -> Frame:
    return remap(f, lambda c: (c[0], q - 1 - c[1]))


def grid_part(ctx: Ctx, f: Frame, p: int, q: int) -> Part:
    return list(f.values()), lambda t: grid_order(ctx, f, p, q, t)


def grid_order(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    """Elimination order of (grid frame, t), or None when P fails or the grid is bad."""
    if p == 1 or q == 1:
        return ctx.forest_order(list(f.values()), t)
    if (grid_edge_count(p, q) + len(t)) % 2:
        return None
    if p % 2 or q % 2:
        return _odd_grid(ctx, f, p, q, t)
    if is_bad_grid(f, p, q, t):
        return None
    return _even_grid(ctx, f, p, q, t)


def _odd_grid(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    # Make q the odd dimension, then split after the first column with an odd
    # number of vertices outside T.
    if q % 2 == 0:
        f, p, q = transpose(f), q, p
    k = next(i for i in range(p) if sum(1 for v in col(f, i, q) if v not in t) % 2)
    if k == p - 1:
        head, rest = block(f, p - 1, p - 1, 0, q - 1), block(f, 0, p - 2, 0, q - 1)
    else:
        head, rest = block(f, 0, k, 0, q - 1), block(f, k + 1, p - 1, 0, q - 1)
    return ctx.run(t, [grid_part(ctx, *head), grid_part(ctx, *rest)])


def _side_frames(f: Frame, p: int, q: int):
    """Frames in which each border path in turn becomes column 0."""
    tf = transpose(f)
    yield f, p, q
    yield flip_i(f, p), p, q
    yield tf, q, p
    yield flip_i(tf, q), q, p


def _even_grid(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    for f2, p2, q2 in _side_frames(f, p, q):
        if not is_bad_path(col(f2, 0, q2), t):
            return _from_good_side(ctx, f2, p2, q2, t)
    return _all_sides_bad(ctx, f, p, q, t)


def _from_good_side(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    y0 = col(f, 0, q)
    rest = block(f, 1, p - 1, 0, q - 1)
    if sum(1 for v in y0 if v in t) % 2:
        return ctx.run(t, [ctx.path(y0), grid_part(ctx, *rest)])
    k, side = endpoint_section(y0, t)
    if side == "suffix":
        f = flip_j(f, q)
        y0 = col(f, 0, q)
        rest = block(f, 1, p - 1, 0, q - 1)
    return ctx.run(t, [ctx.path(y0[: 2 * k + 1]), grid_part(ctx, *rest), ctx.path(y0[2 * k + 1 :])])


def border_cycle(f: Frame, p: int, q: int) -> list[int]:
    out = [f[(i, 0)] for i in range(p)]
    out += [f[(p - 1, j)] for j in range(1, q)]
    out += [f[(i, q - 1)] for i in range(p - 2, -1, -1)]
    out += [f[(0, j)] for j in range(q - 2, 0, -1)]
    return out


def _all_sides_bad(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    if p == 2 or q == 2:
        return None
    outer = border_cycle(f, p, q)
    inner = block(f, 1, p - 2, 1, q - 2)
    t_in = frozenset(v for v in inner[0].values() if v in t)
    if not is_bad_grid(*inner, t_in):
        if all(v in t for v in outer):
            return ctx.run(t, [grid_part(ctx, *inner), ctx.cycle(outer)])
        return ctx.run(t, [ctx.cycle(outer), grid_part(ctx, *inner)])
    return _inner_bad(ctx, f, p, q, t)


def _pair_frame(f: Frame, p: int, q: int, t: frozenset):
    """A frame where (1, 2k), (1, 2k+1) are both outside T, with q >= 6."""
    tf = transpose(f)
    for f2, p2, q2 in ((f, p, q), (flip_i(f, p), p, q), (tf, q, p), (flip_i(tf, q), q, p)):
        if q2 < 6:
            continue
        for k in range(1, (q2 - 4) // 2 + 1):
            if f2[(1, 2 * k)] not in t and f2[(1, 2 * k + 1)] not in t:
                return f2, p2, q2, k
    return None


def _inner_bad(ctx: Ctx, f: Frame, p: int, q: int, t: frozenset) -> Order | None:
    found = _pair_frame(f, p, q, t)
    if found is None:
        return None
    f, p, q, k = found
    y, y2 = f[(p - 2, 2 * k)], f[(p - 2, 2 * k + 1)]
    if y in t and y2 in t:
        low = block(f, 0, p - 1, 0, 2 * k)
        high = block(f, 0, p - 1, 2 * k + 1, q - 1)
        return ctx.run(t, [grid_part(ctx, *low), grid_part(ctx, *high)])
    w0, wq = f[(1, 0)], f[(1, q - 1)]
    if (w0 in t) != (wq in t):
        if w0 not in t:
            f = flip_j(f, q)
            k = (q - 2) // 2 - k
        parts = [
            grid_part(ctx, *block(f, 0, 1, 0, 2 * k)),
            grid_part(ctx, *block(f, 2, p - 1, 0, q - 1)),
            grid_part(ctx, *block(f, 0, 1, 2 * k + 1, q - 1)),
        ]
        return ctx.run(t, parts)
    return ctx.run(t, [grid_part(ctx, *block(f, 0, 1, 0, q - 1)), grid_part(ctx, *block(f, 2, p - 1, 0, q - 1))])
