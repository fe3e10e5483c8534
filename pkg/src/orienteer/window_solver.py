"""Exact solver for path systems inside a window.

Given a set of candidate points, per-slot endpoint prescriptions (or null for
an idle slot) and a visit count, ``solve_window`` returns the cheapest way to
route one path per active slot through exactly that many distinct points.
The search is a bitmask dynamic program over (visited set, open slot, current
point); slots are processed in index order and transitions between slots cost
nothing, since the objective is the plain sum of path lengths.

The plane sweeps only require the weaker contract "length at most
(1 + delta_prime) times the window optimum for the requested delta_prime";
an exact solver satisfies it for every value, so ``delta_prime`` is accepted
everywhere and recorded but never changes a result here.  Swapping in an
approximate implementation with the same methods leaves the sweeps intact.

``single_slot_table`` is a batched variant for the one-path case: one pass
computes optima for *all* endpoint pairs and visit counts of a window, which
is what the k-TSP sweep consumes in bulk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InputError
from .geometry import PointSet
from .paths import Path

DEFAULT_POINT_CAP = 18

#: Above this window size the batched table falls back to per-start dicts to
#: keep memory bounded (the dense table is 8 * 2^w * w^2 bytes).
DENSE_TABLE_MAX = 14

INF = math.inf


@dataclass(frozen=True)
class EndpointArrays:
    """Per-slot source and sink ids; None marks an idle slot.

    A slot with exactly one null endpoint makes the whole query infeasible,
    matching the convention used by the sweep recurrences.
    """

    sources: tuple
    sinks: tuple

    def __post_init__(self):
        if len(self.sources) != len(self.sinks):
            raise InputError("sources and sinks must have equal length")

    @property
    def slots(self) -> int:
        return len(self.sources)

    def active_slots(self) -> list[int]:
        return [
            j
            for j in range(self.slots)
            if self.sources[j] is not None and self.sinks[j] is not None
        ]

    def has_half_null_slot(self) -> bool:
        return any(
            (self.sources[j] is None) != (self.sinks[j] is None)
            for j in range(self.slots)
        )

    def endpoint_ids(self) -> set[int]:
        out = set()
        for j in self.active_slots():
            out.add(self.sources[j])
            out.add(self.sinks[j])
        return out


@dataclass
class WindowSolution:
    total_length: float
    paths: tuple
    visited_count: int

    @property
    def feasible(self) -> bool:
        return math.isfinite(self.total_length)


def _infeasible(slots: int) -> WindowSolution:
    return WindowSolution(INF, tuple([None] * slots), 0)


class ExactWindowSolver:
    """Exact window oracle with memoized all-count solves.

    Results are cached per (host, point set, endpoint arrays); the cache is
    write-once and can be dropped with ``clear_cache``.  ``delta_prime``
    arguments are accepted for contract compatibility and stored on
    ``last_delta_prime`` so callers can verify the plumbing.
    """

    def __init__(self, point_cap: int = DEFAULT_POINT_CAP):
        self.point_cap = point_cap
        self.last_delta_prime: float | None = None
        self._hosts: dict[int, PointSet] = {}
        self._length_memo: dict = {}
        self._table_memo: dict = {}

    def clear_cache(self):
        self._hosts.clear()
        self._length_memo.clear()
        self._table_memo.clear()

    # -- general multi-slot interface ------------------------------------

    def solve_lengths(
        self, host: PointSet, point_ids, endpoints: EndpointArrays, delta_prime: float = 0.0
    ) -> dict[int, float]:
        """Optimal total length for every achievable visit count.

        Returns a dict mapping k -> length; missing keys are infeasible.
        """
        self.last_delta_prime = delta_prime
        pts = tuple(sorted(int(p) for p in point_ids))
        self._check_cap(pts)
        key = (id(host), pts, endpoints.sources, endpoints.sinks)
        if key not in self._length_memo:
            self._hosts[id(host)] = host
            lengths, _ = _multi_slot_dp(host, pts, endpoints, want_parents=False)
            self._length_memo[key] = lengths
        return self._length_memo[key]

    def solve_window(
        self,
        host: PointSet,
        point_ids,
        endpoints: EndpointArrays,
        k: int,
        delta_prime: float = 0.0,
    ) -> WindowSolution:
        """Cheapest path system visiting exactly k distinct points."""
        self.last_delta_prime = delta_prime
        pts = tuple(sorted(int(p) for p in point_ids))
        self._check_cap(pts)
        if endpoints.has_half_null_slot():
            return _infeasible(endpoints.slots)
        missing = endpoints.endpoint_ids() - set(pts)
        if missing:
            raise InputError(f"endpoints {sorted(missing)} not inside the window")
        if k > len(pts) or k < len(endpoints.endpoint_ids()) or (k > 0 and not endpoints.active_slots()):
            return _infeasible(endpoints.slots)
        lengths = self.solve_lengths(host, pts, endpoints, delta_prime)
        if k not in lengths:
            return _infeasible(endpoints.slots)
        _, states = _multi_slot_dp(host, pts, endpoints, want_parents=True)
        return _reconstruct(host, endpoints, pts, states, k)

    # -- batched single-slot interface ------------------------------------

    def single_slot_table(self, host: PointSet, point_ids, delta_prime: float = 0.0) -> "SingleSlotTable":
        """All-pairs, all-counts optimal path lengths within one window."""
        self.last_delta_prime = delta_prime
        pts = tuple(sorted(int(p) for p in point_ids))
        self._check_cap(pts)
        key = (id(host), pts)
        if key not in self._table_memo:
            self._hosts[id(host)] = host
            self._table_memo[key] = SingleSlotTable(host, pts)
        return self._table_memo[key]

    def _check_cap(self, pts):
        if len(pts) > self.point_cap:
            raise CapacityError(
                f"window holds {len(pts)} points, over the cap of {self.point_cap}"
            )


class SingleSlotTable:
    """Dense exact table: best[k][d][c] = shortest path from c to d visiting
    exactly k points of the window (INF when impossible)."""

    def __init__(self, host: PointSet, pts: tuple):
        self.pts = pts
        self.index = {p: i for i, p in enumerate(pts)}
        w = len(pts)
        coords = host.coords[list(pts)]
        dmat = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=2)
        if w <= DENSE_TABLE_MAX:
            self.best = _dense_all_pairs(dmat)
        else:
            self.best = _sparse_all_pairs(dmat)

    def length(self, c: int, d: int, k: int) -> float:
        """Optimal c -> d path over exactly k window points."""
        if k < 1 or k > len(self.pts):
            return INF
        return float(self.best[k, self.index[d], self.index[c]])


def _dense_all_pairs(dmat: np.ndarray) -> np.ndarray:
    w = dmat.shape[0]
    dp = np.full((1 << w, w, w), INF)  # dp[mask, last, start]
    for i in range(w):
        dp[1 << i, i, i] = 0.0
    bits_cache = [[i for i in range(w) if mask >> i & 1] for mask in range(1 << w)]
    for mask in range(1, 1 << w):
        inside = bits_cache[mask]
        sub = dp[mask]
        live_rows = [i for i in inside if np.isfinite(sub[i]).any()]
        if not live_rows:
            continue
        block = sub[live_rows]  # (r, w)
        for p in range(w):
            if mask >> p & 1:
                continue
            cand = (block + dmat[live_rows, p][:, None]).min(axis=0)
            np.minimum(dp[mask | (1 << p), p], cand, out=dp[mask | (1 << p), p])
    best = np.full((w + 1, w, w), INF)
    popcounts = np.array([bin(m).count("1") for m in range(1 << w)])
    for k in range(1, w + 1):
        sel = np.nonzero(popcounts == k)[0]
        best[k] = dp[sel].min(axis=0)
    return best


def _sparse_all_pairs(dmat: np.ndarray) -> np.ndarray:
    """Dict-based fallback for windows too large for the dense table."""
    w = dmat.shape[0]
    best = np.full((w + 1, w, w), INF)
    for start in range(w):
        reach = {(1 << start, start): 0.0}
        frontier = [(1 << start, start)]
        while frontier:
            nxt = []
            for (mask, last) in frontier:
                cost = reach[(mask, last)]
                k = bin(mask).count("1")
                if cost < best[k, last, start]:
                    best[k, last, start] = cost
                for p in range(w):
                    if mask >> p & 1:
                        continue
                    key = (mask | (1 << p), p)
                    cand = cost + dmat[last, p]
                    if cand < reach.get(key, INF):
                        if key not in reach:
                            nxt.append(key)
                        reach[key] = cand
            frontier = nxt
    return best


def _multi_slot_dp(host: PointSet, pts: tuple, endpoints: EndpointArrays, want_parents: bool):
    """Slot-sequential bitmask DP.

    Returns (lengths, final_states) where lengths maps visit count -> optimal
    total length and final_states (only when ``want_parents``) maps visit
    count -> (cost, state_key, parents) for reconstruction.
    """
    if endpoints.has_half_null_slot():
        return {}, {}
    active = endpoints.active_slots()
    if not active:
        return {0: 0.0}, {0: (0.0, None, {})}

    index = {p: i for i, p in enumerate(pts)}
    for p in endpoints.endpoint_ids():
        if p not in index:
            raise InputError(f"endpoint {p} not inside the window")
    coords = host.coords[list(pts)]
    dmat = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=2).tolist()

    endpoint_local = {index[p] for p in endpoints.endpoint_ids()}
    interiors = [i for i in range(len(pts)) if i not in endpoint_local]

    parents: dict = {}

    def record(key, parent_key, cost, store: dict) -> bool:
        if cost < store.get(key, INF):
            store[key] = cost
            if want_parents:
                parents[key] = parent_key
            return True
        return False

    # Open the first slot; states are keyed (slot_pos, closed, mask, cur).
    s0 = index[endpoints.sources[active[0]]]
    states: dict = {}
    start_key = (0, False, 1 << s0, s0)
    states[start_key] = 0.0
    if want_parents:
        parents[start_key] = None

    for pos, slot in enumerate(active):
        s_l = index[endpoints.sources[slot]]
        t_l = index[endpoints.sinks[slot]]
        open_states = {k: v for k, v in states.items() if k[0] == pos and not k[1]}
        closed: dict = {}
        if s_l == t_l:
            # Degenerate slot: the path is the single point, no interiors.
            for key, cost in open_states.items():
                record((pos, True, key[2], t_l), key, cost, closed)
        else:
            # Grow by interior moves in increasing-popcount order, closing at
            # the sink from every intermediate state.
            by_pop: dict[int, dict] = {}
            for key, cost in open_states.items():
                by_pop.setdefault(bin(key[2]).count("1"), {})[key] = cost
            live = dict(open_states)
            for pop in sorted(set(by_pop) | set(range(len(pts) + 2))):
                bucket = by_pop.get(pop)
                if not bucket:
                    continue
                for key, cost in list(bucket.items()):
                    if cost > live.get(key, INF):
                        continue
                    _, _, mask, cur = key
                    close_key = (pos, True, mask | (1 << t_l), t_l)
                    record(close_key, key, cost + dmat[cur][t_l], closed)
                    for p in interiors:
                        if mask >> p & 1:
                            continue
                        nkey = (pos, False, mask | (1 << p), p)
                        ncost = cost + dmat[cur][p]
                        if record(nkey, key, ncost, live):
                            by_pop.setdefault(pop + 1, {})[nkey] = ncost
        if pos + 1 < len(active):
            nxt_slot = active[pos + 1]
            s_next = index[endpoints.sources[nxt_slot]]
            states = {}
            for key, cost in closed.items():
                nkey = (pos + 1, False, key[2] | (1 << s_next), s_next)
                record(nkey, key, cost, states)
        else:
            states = closed

    lengths: dict[int, float] = {}
    final_states: dict[int, tuple] = {}
    for key, cost in states.items():
        k = bin(key[2]).count("1")
        if cost < lengths.get(k, INF):
            lengths[k] = cost
            if want_parents:
                final_states[k] = (cost, key, parents)
    return lengths, final_states


def _reconstruct(host: PointSet, endpoints: EndpointArrays, pts: tuple, final_states, k: int) -> WindowSolution:
    if k not in final_states:
        return _infeasible(endpoints.slots)
    cost, key, parents = final_states[k]
    if key is None:  # no active slots, k == 0
        return WindowSolution(0.0, tuple([None] * endpoints.slots), 0)
    active = endpoints.active_slots()
    chain = []
    while key is not None:
        chain.append(key)
        key = parents[key]
    chain.reverse()
    # Split the chain into per-slot visit sequences of local indices.  A
    # repeated (cur, mask) step is the no-move close of a degenerate slot.
    visits_per_pos: list[list[int]] = [[] for _ in active]
    prev = None
    for state in chain:
        pos, _, mask, cur = state
        seq = visits_per_pos[pos]
        if prev is not None and prev[0] == pos and prev[2] == mask and prev[3] == cur:
            prev = state
            continue
        seq.append(cur)
        prev = state
    paths: list[Path | None] = [None] * endpoints.slots
    for pos, slot in enumerate(active):
        ids = tuple(pts[i] for i in visits_per_pos[pos])
        paths[slot] = Path(host, ids)
    return WindowSolution(float(cost), tuple(paths), k)
