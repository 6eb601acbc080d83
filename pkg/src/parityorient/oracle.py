"""Exact exponential decision procedures for small graphs.

Whether a vertex is white depends only on the set of vertices removed so far,
so the game collapses to a reachability question over the 2^n subsets of V.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import (
    ConditionSet,
    Graph,
    Instance,
    condition_flags_mask,
    mask_to_set,
)
from .errors import TooLarge
from .game import EliminationOrder, validate_elimination_order

DEFAULT_CAP = 24
HARD_CAP = 32
ENUMERATION_CAP = 20
BATCH_CAP = 16

_PARITY16 = np.zeros(1 << 16, dtype=np.uint8)
for _b in range(16):
    _PARITY16 ^= ((np.arange(1 << 16) >> _b) & 1).astype(np.uint8)


def _parity(x: np.ndarray) -> np.ndarray:
    return _PARITY16[x & 0xFFFF] ^ _PARITY16[(x >> 16) & 0xFFFF]


def decide_exists(inst: Instance, cap: int = DEFAULT_CAP) -> EliminationOrder | None:
    """Return a valid elimination order for ``inst`` or None when none exists.

    Breadth-first over removed-sets, one layer per removal step. Each state keeps
    the first vertex that reached it, which is enough to rebuild a witness.
    """
    n = inst.n
    if n > min(cap, HARD_CAP):
        raise TooLarge(f"{n} vertices exceeds the oracle cap of {min(cap, HARD_CAP)}")
    if n == 0:
        return ()
    nmask = np.array(inst.graph.neighbor_masks, dtype=np.int64)
    want = [1 if v in inst.target else 0 for v in range(n)]
    frontier = np.zeros(1, dtype=np.int64)
    layers: list[tuple[np.ndarray, np.ndarray]] = []
    for _ in range(n):
        states, preds = [], []
        for v in range(n):
            bit = 1 << v
            cand = frontier[(frontier & bit) == 0]
            if cand.size == 0:
                continue
            ok = cand[_parity(cand & nmask[v]) == want[v]]
            if ok.size:
                states.append(ok | bit)
                preds.append(np.full(ok.size, v, dtype=np.int8))
        if not states:
            return None
        allstates = np.concatenate(states)
        allpreds = np.concatenate(preds)
        uniq, first = np.unique(allstates, return_index=True)
        layers.append((uniq, allpreds[first]))
        frontier = uniq
    full = (1 << n) - 1
    if frontier.size != 1 or int(frontier[0]) != full:
        return None
    order = []
    m = full
    for uniq, pred in reversed(layers):
        idx = int(np.searchsorted(uniq, m))
        assert uniq[idx] == m
        v = int(pred[idx])
        order.append(v)
        m ^= 1 << v
    order.reverse()
    assert validate_elimination_order(inst, order).valid
    return tuple(order)


def solvable_target_masks(g: Graph, cap: int = BATCH_CAP) -> int:
    """Bitset over target masks: bit t is set iff target t admits a solution.

    R[m] collects the parity patterns T ∩ m reachable by some ordering of m.
    Appending v after m fixes v's in-degree parity to |N(v) ∩ m| mod 2, which
    turns the update into a shift of the whole bitset.
    """
    n = g.n
    if n > cap:
        raise TooLarge(f"{n} vertices exceeds the batch cap of {cap}")
    nm = g.neighbor_masks
    size = 1 << n
    reach = [0] * size
    reach[0] = 1
    for m in range(size):
        r = reach[m]
        if not r:
            continue
        for v in range(n):
            bit = 1 << v
            if m & bit:
                continue
            if bin(m & nm[v]).count("1") & 1:
                reach[m | bit] |= r << bit
            else:
                reach[m | bit] |= r
    return reach[size - 1]


def solvable_targets(g: Graph, cap: int = BATCH_CAP) -> set[int]:
    bits = solvable_target_masks(g, cap)
    out = set()
    t = 0
    while bits:
        if bits & 1:
            out.add(t)
        bits >>= 1
        t += 1
    return out


def orientation_targets(g: Graph, max_edges: int = 16) -> set[int]:
    """Targets realised by some acyclic orientation, by enumerating all 2^|E| orientations."""
    edges = g.sorted_edges()
    if len(edges) > max_edges:
        raise TooLarge(f"{len(edges)} edges exceeds the enumeration cap of {max_edges}")
    found = set()
    n = g.n
    for bits in range(1 << len(edges)):
        preds = [0] * n
        indeg = [0] * n
        for i, (u, v) in enumerate(edges):
            a, b = (v, u) if bits >> i & 1 else (u, v)
            preds[b] |= 1 << a
            indeg[b] += 1
        done = 0
        progress = True
        while progress:
            progress = False
            for v in range(n):
                if not done >> v & 1 and preds[v] & ~done == 0:
                    done |= 1 << v
                    progress = True
        if done != (1 << n) - 1:
            continue
        found.add(sum(1 << v for v in range(n) if indeg[v] & 1))
    return found


def _odd_mask(g: Graph) -> int:
    return sum(1 << v for v in g.vertices() if g.degree(v) % 2)


def enumerate_condition_masks(g: Graph, conds: ConditionSet) -> Iterator[int]:
    odd = _odd_mask(g)
    for t in range(1 << g.n):
        p, s, sb = condition_flags_mask(g, t, odd)
        if (conds.P and not p) or (conds.S and not s) or (conds.Sbar and not sb):
            continue
        yield t


def enumerate_condition_sets(g: Graph, conds: ConditionSet) -> Iterator[frozenset[int]]:
    for t in enumerate_condition_masks(g, conds):
        yield mask_to_set(t)


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    counterexample: Instance | None
    checked_count: int


def class_membership_small(
    g: Graph,
    conds: ConditionSet,
    cap: int = ENUMERATION_CAP,
    solvable: int | None = None,
) -> MembershipReport:
    """Decide whether every T satisfying ``conds`` is solvable on ``g``.

    Targets are checked in ascending bitmask order and the first failure is
    returned as the counterexample. ``solvable`` may carry a precomputed bitset
    from :func:`solvable_target_masks`; otherwise small graphs use the batch DP
    and larger ones fall back to :func:`decide_exists` per target.
    """
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds the enumeration cap of {cap}")
    if solvable is None and g.n <= BATCH_CAP:
        solvable = solvable_target_masks(g)
    checked = 0
    for t in enumerate_condition_masks(g, conds):
        checked += 1
        if solvable is not None:
            ok = bool(solvable >> t & 1)
        else:
            ok = decide_exists(Instance(g, mask_to_set(t)), cap=max(cap, DEFAULT_CAP)) is not None
        if not ok:
            return MembershipReport(False, Instance(g, mask_to_set(t)), checked)
    return MembershipReport(True, None, checked)

