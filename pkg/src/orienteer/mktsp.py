"""Multi-path plane sweep for rooted (m,k)-TSP.

The space is first rotated (orienting pairs, swapping endpoints when needed)
so that every prescribed segment faces forward along the sweep axis with an
angle margin of 1/(8 m^1.5); this is what lets backward edges of *any* slot
charge against the joint excess.  The sweep then fills a table keyed by

    (column p_i, per-slot sources S, per-slot frontiers T, visit count k')

holding the cheapest multi-path prefix that uses points up to p_i: slot l is
either untouched by a transition, starts inside the transition's window (its
prescribed source must lie there), or bridges from its current frontier to a
window entry point and continues to a new frontier inside the window.  Window
subproblems go through the exact window oracle; transitions between slots on
null endpoints cost nothing.  Only states reachable from the all-null base
entry are materialized.

At desk scale the table is exact, so results equal brute-force enumeration;
the oracle accuracy knob is still plumbed through as
delta' = c * delta / m^5.5 for contract compatibility with approximate
window solvers.
"""

from __future__ import annotations

import math
import warnings

from .directions import orient_pairs
from .errors import (
    CapacityError,
    ConsistencyError,
    DegenerateInputError,
    InfeasibleError,
    InputError,
)
from .geometry import PointSet
from .paths import MultiPath, Path, path_length
from .window_solver import EndpointArrays, ExactWindowSolver

INF = math.inf

#: Default guard on the number of simultaneous paths (state space grows as
#: n^m); raise via the max_slots argument if you accept the cost.
DEFAULT_MAX_SLOTS = 4

#: The window oracle accuracy is delta' = ACCURACY_CONSTANT * delta / m^5.5.
#: With the exact oracle the value is immaterial; it exists so an approximate
#: oracle can be swapped in without touching this module.
ACCURACY_CONSTANT = 1.0


def window_accuracy(delta: float, m: int, constant: float = ACCURACY_CONSTANT) -> float:
    return constant * delta / (m ** 5.5)


def solve_mktsp(
    points: PointSet,
    pairs,
    k: int,
    delta: float = 0.25,
    window_solver=None,
    max_slots: int = DEFAULT_MAX_SLOTS,
    rng_seed: int = 0,
    cost_cap: float | None = None,
):
    """m paths with prescribed endpoints jointly visiting at least k points.

    Returns (MultiPath, total_length) with slot j of the answer connecting
    pair j of the input.  When `cost_cap` is given, returns None as soon as
    it can prove the optimum exceeds the cap (used by the orienteering
    driver to discard over-budget skeletons early); without a cap the result
    is the exact optimum.
    """
    n = points.n
    m = len(pairs)
    if m < 1:
        raise InputError("need at least one endpoint pair")
    if m > max_slots:
        raise InputError(
            f"m={m} exceeds the state-space guard of {max_slots}; "
            "pass max_slots explicitly to raise it"
        )
    if m > DEFAULT_MAX_SLOTS:
        warnings.warn(f"running with m={m} slots; the table grows as n^m", stacklevel=2)
    pairs = [(int(s), int(t)) for s, t in pairs]
    endpoint_ids: set[int] = set()
    for s, t in pairs:
        if not (0 <= s < n and 0 <= t < n):
            raise InputError("pair endpoint out of range")
        if s == t:
            raise DegenerateInputError(f"degenerate pair ({s}, {t})")
        endpoint_ids.update((s, t))
    if k > n:
        raise InfeasibleError(f"k={k} exceeds n={n}")
    if k < len(endpoint_ids):
        raise InfeasibleError(
            f"k={k} below the {len(endpoint_ids)} distinct prescribed endpoints"
        )
    if not delta > 0:
        raise InputError("delta must be positive")

    solver = window_solver if window_solver is not None else ExactWindowSolver()
    cap = getattr(solver, "point_cap", None)
    if cap is not None and n > cap:
        # Transitions may span the whole set in one window.
        raise CapacityError(f"n={n} exceeds the window solver cap of {cap}")
    delta_prime = window_accuracy(delta, m)

    transform, swapped = orient_pairs(points, pairs, rng_seed)
    rotated = points.transformed(transform)
    work_pairs = [
        (t, s) if flip else (s, t) for (s, t), flip in zip(pairs, swapped)
    ]
    sources = tuple(p[0] for p in work_pairs)
    sinks = tuple(p[1] for p in work_pairs)

    order = [int(i) for i in rotated.sweep_order]
    rank = rotated.ranks
    dmat = rotated.distance_matrix()
    cost_limit = None
    if cost_cap is not None:
        cost_limit = cost_cap + 1e-7 * max(1.0, rotated.diameter())

    all_none = tuple([None] * m)
    base_key = (all_none, all_none, 0)
    tables: list[dict] = [dict() for _ in range(n + 1)]
    tables[0][base_key] = 0.0
    back: dict = {(0, base_key): None}

    def completion_lb(S, T) -> float:
        lb = 0.0
        for l in range(m):
            if S[l] is None:
                lb += dmat[sources[l], sinks[l]]
            elif T[l] != sinks[l]:
                lb += dmat[T[l], sinks[l]]
        return lb

    def alive(col: int, S, T) -> bool:
        """A state is dead once the sweep has passed a point it still needs."""
        for l in range(m):
            if S[l] is None:
                if rank[sources[l]] <= col - 1 or rank[sinks[l]] <= col - 1:
                    return False
            elif T[l] != sinks[l] and rank[sinks[l]] <= col - 1:
                return False
        return True

    def future_required(col: int, S, T) -> int:
        """Distinct master endpoints right of the column that must still be
        visited; each will add at least one to the count."""
        need = set()
        for l in range(m):
            if S[l] is None:
                need.add(sources[l])
                need.add(sinks[l])
            elif T[l] != sinks[l]:
                need.add(sinks[l])
        return len([p for p in need if rank[p] > col - 1])

    for j in range(0, n):
        column = tables[j]
        for key in list(column.keys()):
            S1, T1, k1 = key
            cost = column[key]
            if not alive(j, S1, T1):
                continue
            if cost_limit is not None and cost + completion_lb(S1, T1) > cost_limit:
                continue
            for i in range(j + 1, n + 1):
                w_ids = order[j:i]  # sweep positions j+1 .. i
                w_set = set(w_ids)
                for S2, T2, bridge in _window_configs(
                    S1, T1, w_ids, w_set, sources, sinks, rank, i, dmat, endpoint_ids
                ):
                    lengths = solver.solve_lengths(
                        rotated, w_ids, EndpointArrays(S2, T2), delta_prime
                    )
                    if not lengths:
                        continue
                    newS = tuple(
                        S1[l] if S1[l] is not None else S2[l] for l in range(m)
                    )
                    newT = tuple(
                        T2[l] if T2[l] is not None else T1[l] for l in range(m)
                    )
                    req = future_required(i, newS, newT)
                    lb_tail = completion_lb(newS, newT)
                    for kw, a_len in lengths.items():
                        if kw == 0:
                            continue
                        kk = k1 + kw
                        if kk + req > k:
                            continue
                        total = cost + bridge + a_len
                        if cost_limit is not None and total + lb_tail > cost_limit:
                            continue
                        nkey = (newS, newT, kk)
                        if total < tables[i].get(nkey, INF):
                            tables[i][nkey] = total
                            back[(i, nkey)] = (j, key, S2, T2, kw)

    answer_key = (sources, sinks, k)
    best_col, best_cost = None, INF
    # The master entry lives at the last column; reading every column is
    # equivalent because later windows never force extra visits.
    if answer_key in tables[n]:
        best_col, best_cost = n, tables[n][answer_key]
    for col in range(n):
        val = tables[col].get(answer_key, INF)
        if val < best_cost:
            best_col, best_cost = col, val
    if best_col is None:
        if cost_limit is not None:
            return None
        raise ConsistencyError("no feasible entry for a feasible instance")

    visits_per_slot = _reconstruct(
        rotated, solver, order, back, best_col, answer_key, delta_prime, m
    )
    paths = []
    for l in range(m):
        ids = visits_per_slot[l]
        if swapped[l]:
            ids = ids[::-1]
        if ids[0] != pairs[l][0] or ids[-1] != pairs[l][1]:
            raise ConsistencyError(f"slot {l} endpoints corrupted: {ids}")
        paths.append(Path(points, tuple(ids)))
    multi = MultiPath(tuple(paths))
    total = sum(path_length(p) for p in paths)
    return multi, total


def _window_configs(S1, T1, w_ids, w_set, sources, sinks, rank, col_i, dmat, endpoint_ids):
    """Yield feasible (S2, T2, bridge_cost) window endpoint configurations.

    Per slot: untouched, start at its prescribed source inside the window, or
    bridge from the current frontier to an entry point.  A window point may
    serve two slots only when it is a prescribed endpoint (chained pairs);
    frontier moves that strand a sink behind the sweep are skipped.
    """
    m = len(S1)
    out: list[tuple] = []

    def usable(p, used):
        return p not in used or p in endpoint_ids

    def rec(l, S2, T2, bridge, used, any_active):
        if l == m:
            if any_active:
                out.append((tuple(S2), tuple(T2), bridge))
            return
        # untouched
        S2.append(None)
        T2.append(None)
        rec(l + 1, S2, T2, bridge, used, any_active)
        S2.pop()
        T2.pop()

        snk = sinks[l]
        sink_ahead = rank[snk] > col_i - 1
        if S1[l] is None:
            src = sources[l]
            if src in w_set and rank[snk] >= rank[src]:
                for d in w_ids:
                    if d != snk and not sink_ahead:
                        continue
                    if not (usable(src, used) and usable(d, used | {src})):
                        continue
                    S2.append(src)
                    T2.append(d)
                    used2 = used | {src, d}
                    rec(l + 1, S2, T2, bridge, used2, True)
                    S2.pop()
                    T2.pop()
        else:
            frontier = T1[l]
            if frontier != snk:
                for c in w_ids:
                    if not usable(c, used):
                        continue
                    step = dmat[frontier, c]
                    for d in w_ids:
                        if d != snk and not sink_ahead:
                            continue
                        if not usable(d, used | {c}):
                            continue
                        S2.append(c)
                        T2.append(d)
                        rec(l + 1, S2, T2, bridge + step, used | {c, d}, True)
                        S2.pop()
                        T2.pop()
        return

    rec(0, [], [], 0.0, set(), False)
    return out


def _reconstruct(rotated, solver, order, back, col, key, delta_prime, m):
    """Expand the winning transition chain into per-slot visit id lists."""
    segments: list[list[list[int]]] = [[] for _ in range(m)]
    while True:
        prev = back[(col, key)]
        if prev is None:
            break
        j, pkey, S2, T2, kw = prev
        w_ids = order[j:col]
        sol = solver.solve_window(
            rotated, w_ids, EndpointArrays(S2, T2), kw, delta_prime
        )
        for l in range(m):
            if S2[l] is not None:
                segments[l].append(list(sol.paths[l].visits))
        col, key = j, pkey
    visits: list[list[int]] = []
    for l in range(m):
        segs = segments[l][::-1]
        if not segs:
            raise ConsistencyError(f"slot {l} never activated")
        flat: list[int] = []
        for seg in segs:
            flat.extend(seg)
        visits.append(flat)
    return visits
