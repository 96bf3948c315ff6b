"""Exact computation of the local antimagic chromatic number by depth-first
branch and bound over edge-label bijections.

The engine answers one question: does the graph admit a labeling with at most
k distinct induced weights?  ``exact_chi_la`` descends k until the answer
flips, so an Infeasible outcome is always a proof by exhaustion.

Pruning relies on three admissible observations:

* every degree-1 vertex ("pendant") has weight equal to its single edge
  label, so all pendant weights in a labeling are pairwise distinct;
* a closed vertex weight W <= q cannot be shared with any pendant once the
  label W sits on a non-pendant edge;
* the maximum-degree vertex ends with weight at least 1+2+...+deg, so when
  that exceeds q it contributes a weight above q distinct from every closed
  weight above q realized by one of its neighbors.

Symmetry breaking restricts the search to one labeling per orbit of a group
of known automorphisms: pendants attached to the same vertex are
interchangeable, friendship coronas allow swapping the two legs of a triangle
and permuting triangles, complete-base coronas allow permuting the
vertex+pendant units, and fan coronas allow reversing the path.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .graphs import HUB, INNER, Graph, VertexRole
from .labeling import Certificate, make_certificate

INPUT_ORDER = "input"
MAX_DEGREE_FIRST = "max-degree-first"
CONNECTED_EXPANSION = "connected-expansion"
_EDGE_ORDERS = (INPUT_ORDER, MAX_DEGREE_FIRST, CONNECTED_EXPANSION)

EXACT = "exact"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the branch-and-bound engine.

    Budgets are totals for the public call (per worker when
    ``parallel_width`` > 1, which splits the first edge's label choices
    across processes).  With a binding time budget determinism is limited to
    the reported status; node budgets are exact in sequential mode.
    """

    time_budget: float | None = None
    node_budget: int | None = None
    target_colors: int | None = None
    edge_order: str = CONNECTED_EXPANSION
    parallel_width: int = 1
    symmetry_breaking: bool = True
    upper_hint: int | None = None

    def __post_init__(self):
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.target_colors is not None and self.target_colors < 2:
            raise ValueError("target_colors must be at least 2")
        if self.edge_order not in _EDGE_ORDERS:
            raise ValueError(f"unknown edge order {self.edge_order!r}")
        if self.parallel_width < 1:
            raise ValueError("parallel_width must be at least 1")


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    chi: int | None = None
    certificate: Certificate | None = None
    infeasible_k: int | None = None
    best_so_far: Certificate | None = None
    nodes_explored: int = 0
    wall_time: float = 0.0


class _BudgetHit(Exception):
    pass


def _triangular(k: int) -> int:
    return k * (k + 1) // 2


def _validate_instance(g: Graph) -> None:
    if g.q < 2:
        raise ValueError("need a graph with at least 2 edges")
    if not g.is_connected():
        raise ValueError("need a connected graph")


# -- edge ordering ------------------------------------------------------------


def _order_edges(g: Graph, mode: str) -> list[int]:
    if mode == INPUT_ORDER:
        return list(range(g.q))
    degs = g.degrees
    if mode == MAX_DEGREE_FIRST:
        def key(e):
            a, b = g.edges[e]
            da, db = degs[a], degs[b]
            return (-max(da, db), -min(da, db), e)
        return sorted(range(g.q), key=key)
    # connected expansion: grow from the highest-degree vertex, preferring
    # edges that close a vertex so weights finalize early
    left = set(range(g.q))
    unassigned = list(degs)
    touched = [False] * g.p
    start = max(range(g.p), key=lambda v: (degs[v], -v))
    touched[start] = True
    order: list[int] = []
    while left:
        best = None
        best_key = None
        for e in left:
            a, b = g.edges[e]
            if not (touched[a] or touched[b]):
                continue
            closes = (unassigned[a] == 1) + (unassigned[b] == 1)
            untouched = (not touched[a]) + (not touched[b])
            key = (-closes, untouched, e)
            if best_key is None or key < best_key:
                best, best_key = e, key
        if best is None:  # disconnected remainder; take lowest index
            best = min(left)
        left.remove(best)
        order.append(best)
        a, b = g.edges[best]
        unassigned[a] -= 1
        unassigned[b] -= 1
        touched[a] = touched[b] = True
    return order


# -- symmetry breaking ---------------------------------------------------------


def _pendant_attach(g: Graph, e: int) -> int | None:
    a, b = g.edges[e]
    if g.degree(b) == 1 and g.degree(a) > 1:
        return a
    if g.degree(a) == 1 and g.degree(b) > 1:
        return b
    return None


def _friendship_layout(g: Graph):
    """(hub, [(u_i, v_i)...]) when g is friendship(n) with an optional uniform
    pendant group on every inner vertex; otherwise None."""
    try:
        hub = g.vertex_with_role(VertexRole(HUB))
    except KeyError:
        return None
    pairs = []
    i = 1
    while True:
        try:
            u = g.vertex_with_role(VertexRole(INNER, "u", i))
            v = g.vertex_with_role(VertexRole(INNER, "v", i))
        except KeyError:
            break
        pairs.append((u, v))
        i += 1
    n = len(pairs)
    if n < 2:
        return None
    inner = {x for uv in pairs for x in uv}
    pendant_counts = set()
    for u, v in pairs:
        if not (g.has_edge(hub, u) and g.has_edge(hub, v) and g.has_edge(u, v)):
            return None
        for x in (u, v):
            others = [w for w in g.neighbors(x) if w != hub and w not in inner]
            if any(g.degree(w) != 1 for w in others):
                return None
            pendant_counts.add(len(others))
    if len(pendant_counts) != 1:
        return None
    m = pendant_counts.pop()
    hub_pendants = [w for w in g.neighbors(hub)
                    if w not in inner and g.degree(w) == 1]
    if len(g.neighbors(hub)) != 2 * n + len(hub_pendants):
        return None
    if g.p != 1 + 2 * n + 2 * n * m + len(hub_pendants):
        return None
    return hub, pairs


def _fan_layout(g: Graph):
    """(hub, [v_1..v_n]) for fan(n>=3) with uniform pendant groups, else None."""
    try:
        hub = g.vertex_with_role(VertexRole(HUB))
    except KeyError:
        return None
    spine = []
    i = 1
    while True:
        try:
            spine.append(g.vertex_with_role(VertexRole(INNER, "v", i)))
        except KeyError:
            break
        i += 1
    n = len(spine)
    if n < 3:
        return None
    inner = set(spine)
    pendant_counts = set()
    for idx, v in enumerate(spine):
        if not g.has_edge(hub, v):
            return None
        if idx + 1 < n and not g.has_edge(v, spine[idx + 1]):
            return None
        others = [w for w in g.neighbors(v)
                  if w != hub and w not in inner]
        if any(g.degree(w) != 1 for w in others):
            return None
        pendant_counts.add(len(others))
    if len(pendant_counts) != 1:
        return None
    m = pendant_counts.pop()
    hub_pendants = [w for w in g.neighbors(hub)
                    if w not in inner and g.degree(w) == 1]
    if g.p != 1 + n + n * m + len(hub_pendants):
        return None
    return hub, spine


def _complete_base_layout(g: Graph):
    """[base vertices] when g is a complete graph with the same number (>=1)
    of pendants on every vertex, else None."""
    base = [v for v in range(g.p) if g.degree(v) > 1]
    pend = [v for v in range(g.p) if g.degree(v) == 1]
    if len(base) < 2 or not pend:
        return None
    if len(base) + len(pend) != g.p:
        return None
    for i, a in enumerate(base):
        for b in base[i + 1:]:
            if not g.has_edge(a, b):
                return None
    counts = set()
    for v in base:
        counts.add(sum(1 for w in g.neighbors(v) if g.degree(w) == 1))
    if len(counts) != 1 or counts.pop() == 0:
        return None
    expected_q = len(base) * (len(base) - 1) // 2 + len(pend)
    if g.q != expected_q:
        return None
    return base


def symmetry_pairs(g: Graph) -> list[tuple[int, int]]:
    """Edge-index pairs (a, b) such that restricting to label(a) < label(b)
    keeps at least one representative of every labeling orbit."""
    pairs: list[tuple[int, int]] = []
    groups: dict[int, list[int]] = {}
    for e in range(g.q):
        attach = _pendant_attach(g, e)
        if attach is not None:
            groups.setdefault(attach, []).append(e)
    for attach in sorted(groups):
        es = sorted(groups[attach])
        pairs.extend(zip(es, es[1:]))
    layout = _friendship_layout(g)
    if layout is not None:
        hub, uv = layout
        for u, v in uv:
            pairs.append((g.edge_index(hub, u), g.edge_index(hub, v)))
        tri = [g.edge_index(u, v) for u, v in uv]
        pairs.extend(zip(tri, tri[1:]))
        return pairs
    base = _complete_base_layout(g)
    if base is not None:
        firsts = [min(e for e in groups[v]) for v in base]
        pairs.extend(zip(firsts, firsts[1:]))
        return pairs
    fan = _fan_layout(g)
    if fan is not None:
        hub, spine = fan
        pairs.append((g.edge_index(hub, spine[0]), g.edge_index(hub, spine[-1])))
    return pairs


# -- core search ---------------------------------------------------------------


def _search(g: Graph, k: int, cfg: SearchConfig, deadline: float | None,
            node_budget: int | None, first_labels=None):
    """Depth-first search for a labeling with at most k distinct weights.

    Returns (labels_in_edge_index_order | None, exhausted, nodes).
    """
    q = g.q
    p = g.p
    order = _order_edges(g, cfg.edge_order)
    ends = [g.edges[e] for e in order]
    adj = [g.neighbors(v) for v in range(p)]
    degs = g.degrees
    pend_edge = [degs[a] == 1 or degs[b] == 1 for a, b in g.edges]
    pendant_total = sum(1 for v in range(p) if degs[v] == 1)
    heavy = max(range(p), key=lambda v: (degs[v], -v))
    heavy_static = _triangular(degs[heavy]) > q
    heavy_adj = frozenset(adj[heavy])
    sym_by_edge: dict[int, list[tuple[int, bool]]] = {}
    if cfg.symmetry_breaking:
        for ea, eb in symmetry_pairs(g):
            sym_by_edge.setdefault(ea, []).append((eb, True))
            sym_by_edge.setdefault(eb, []).append((ea, False))

    lab = [0] * q
    used = [False] * (q + 2)
    nonpend = [False] * (q + 2)
    wt = [0] * p
    rem = list(degs)
    cnt: dict[int, int] = {}
    gt_adj: dict[int, int] = {}
    state = [0, 0, 0, 0]  # distinct_gt, distinct_le, x_count, bad_gt
    nodes = 0
    solution: list[int] | None = None

    def close(v: int, w: int) -> None:
        c = cnt.get(w, 0)
        cnt[w] = c + 1
        if w > q:
            if c == 0:
                state[0] += 1
            if v in heavy_adj:
                a2 = gt_adj.get(w, 0)
                gt_adj[w] = a2 + 1
                if c > 0 and a2 == 0:
                    state[3] -= 1
            elif c == 0:
                state[3] += 1
        elif c == 0:
            state[1] += 1
            if nonpend[w]:
                state[2] += 1

    def unclose(v: int, w: int) -> None:
        c = cnt[w] - 1
        if c:
            cnt[w] = c
        else:
            del cnt[w]
        if w > q:
            if v in heavy_adj:
                a2 = gt_adj[w] - 1
                if a2:
                    gt_adj[w] = a2
                else:
                    del gt_adj[w]
                if c > 0 and a2 == 0:
                    state[3] += 1
            elif c == 0 and gt_adj.get(w, 0) == 0:
                state[3] -= 1
            if c == 0:
                state[0] -= 1
        elif c == 0:
            state[1] -= 1
            if nonpend[w]:
                state[2] -= 1

    def dfs(pos: int) -> bool:
        nonlocal nodes, solution
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetHit
        if deadline is not None and nodes % 1024 == 0 \
                and time.monotonic() > deadline:
            raise _BudgetHit
        if pos == q:
            if state[0] + state[1] <= k:
                solution = lab[:]
                return True
            return False
        e = order[pos]
        a, b = ends[pos]
        a_closes = rem[a] == 1
        b_closes = rem[b] == 1
        sym = sym_by_edge.get(e)
        candidates = first_labels if pos == 0 and first_labels is not None \
            else range(1, q + 1)
        for lnum in candidates:
            if used[lnum]:
                continue
            if sym is not None:
                bad = False
                for other, smaller in sym:
                    lo = lab[other]
                    if lo and ((smaller and lnum >= lo) or
                               (not smaller and lo >= lnum)):
                        bad = True
                        break
                if bad:
                    continue
            if a_closes:
                wa = wt[a] + lnum
                conflict = False
                for u in adj[a]:
                    if rem[u] == 0 and wt[u] == wa:
                        conflict = True
                        break
                if conflict:
                    continue
            if b_closes:
                wb = wt[b] + lnum
                conflict = False
                for u in adj[b]:
                    if rem[u] == 0 and wt[u] == wb:
                        conflict = True
                        break
                if conflict:
                    continue
                if a_closes and wt[a] == wt[b]:
                    continue
            # place
            lab[e] = lnum
            used[lnum] = True
            label_x = False
            if not pend_edge[e]:
                nonpend[lnum] = True
                if cnt.get(lnum, 0) >= 1:
                    state[2] += 1
                    label_x = True
            wt[a] += lnum
            rem[a] -= 1
            wt[b] += lnum
            rem[b] -= 1
            if rem[a] == 0:
                close(a, wt[a])
            if rem[b] == 0:
                close(b, wt[b])
            delta = 1 if (heavy_static and rem[heavy] > 0
                          and state[3] == 0) else 0
            low = state[0] + delta + max(pendant_total + state[2], state[1])
            if low <= k and dfs(pos + 1):
                return True
            # unplace
            if rem[b] == 0:
                unclose(b, wt[b])
            if rem[a] == 0:
                unclose(a, wt[a])
            wt[a] -= lnum
            rem[a] += 1
            wt[b] -= lnum
            rem[b] += 1
            if not pend_edge[e]:
                if label_x:
                    state[2] -= 1
                nonpend[lnum] = False
            lab[e] = 0
            used[lnum] = False
        return False

    try:
        found = dfs(0)
        exhausted = not found
    except _BudgetHit:
        return solution, False, nodes
    return solution, exhausted, nodes


def _solver_worker(graph_doc, k, cfg, first_labels, time_left, node_left):
    g = Graph.from_doc(graph_doc)
    deadline = time.monotonic() + time_left if time_left is not None else None
    return _search(g, k, cfg, deadline, node_left, first_labels)


def _run_search(g: Graph, k: int, cfg: SearchConfig, deadline, node_left):
    if cfg.parallel_width <= 1:
        return _search(g, k, cfg, deadline, node_left)
    width = min(cfg.parallel_width, g.q)
    stripes = [list(range(1 + i, g.q + 1, width)) for i in range(width)]
    time_left = None if deadline is None else max(deadline - time.monotonic(), 0.01)
    doc = g.to_doc()
    child_cfg = replace(cfg, parallel_width=1)
    order0 = _order_edges(g, cfg.edge_order)[0]
    with ProcessPoolExecutor(max_workers=width) as pool:
        futures = [pool.submit(_solver_worker, doc, k, child_cfg, stripe,
                               time_left, node_left)
                   for stripe in stripes]
        results = [f.result() for f in futures]
    nodes = sum(r[2] for r in results)
    sols = [r[0] for r in results if r[0] is not None]
    if sols:
        best = min(sols, key=lambda s: s[order0])
        return best, False, nodes
    exhausted = all(r[1] for r in results)
    return None, exhausted, nodes


def feasible_with_k_colors(g: Graph, k: int, cfg: SearchConfig | None = None
                           ) -> SearchOutcome:
    """Search for a labeling with at most k distinct weights.

    Feasible carries a certificate; Infeasible is proven by exhausting the
    (symmetry-reduced) search space.
    """
    cfg = cfg or SearchConfig()
    _validate_instance(g)
    if not 2 <= k <= g.p:
        raise ValueError(f"k must be in 2..{g.p}, got {k}")
    start = time.monotonic()
    deadline = start + cfg.time_budget if cfg.time_budget is not None else None
    sol, exhausted, nodes = _run_search(g, k, cfg, deadline, cfg.node_budget)
    elapsed = time.monotonic() - start
    if sol is not None:
        cert = make_certificate(g, sol)
        if not cert.verdict.ok or cert.color_count > k:
            raise RuntimeError("solver produced an invalid certificate")
        return SearchOutcome(FEASIBLE, certificate=cert,
                             nodes_explored=nodes, wall_time=elapsed)
    if exhausted:
        return SearchOutcome(INFEASIBLE, infeasible_k=k,
                             nodes_explored=nodes, wall_time=elapsed)
    return SearchOutcome(BUDGET_EXHAUSTED, nodes_explored=nodes,
                         wall_time=elapsed)


def exact_chi_la(g: Graph, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Exact minimum number of distinct weights over all labelings.

    Runs feasibility checks with decreasing k, starting from
    ``cfg.upper_hint`` (or p), until an exhaustive Infeasible answer pins the
    minimum.  Budgets cover the whole descent.
    """
    cfg = cfg or SearchConfig()
    _validate_instance(g)
    start = time.monotonic()
    deadline = start + cfg.time_budget if cfg.time_budget is not None else None
    nodes_total = 0
    best: Certificate | None = None
    k = min(cfg.upper_hint, g.p) if cfg.upper_hint is not None else g.p
    while True:
        node_left = None
        if cfg.node_budget is not None:
            node_left = cfg.node_budget - nodes_total
            if node_left <= 0:
                break
        if deadline is not None and time.monotonic() >= deadline:
            break
        sol, exhausted, nodes = _run_search(g, k, cfg, deadline, node_left)
        nodes_total += nodes
        if sol is not None:
            cert = make_certificate(g, sol)
            if not cert.verdict.ok or cert.color_count > k:
                raise RuntimeError("solver produced an invalid certificate")
            best = cert
            if cert.color_count <= 2:
                return SearchOutcome(EXACT, chi=2, certificate=best,
                                     nodes_explored=nodes_total,
                                     wall_time=time.monotonic() - start)
            k = cert.color_count - 1
            continue
        if exhausted:
            if best is not None:
                return SearchOutcome(EXACT, chi=best.color_count,
                                     certificate=best,
                                     nodes_explored=nodes_total,
                                     wall_time=time.monotonic() - start)
            if k < g.p:
                # bad upper hint; restart from the trivial bound
                k = g.p
                continue
            raise RuntimeError("graph admits no local antimagic labeling")
        break
    return SearchOutcome(BUDGET_EXHAUSTED, best_so_far=best,
                         nodes_explored=nodes_total,
                         wall_time=time.monotonic() - start)


# -- standalone lower bound ----------------------------------------------------


def lower_bound_prune(g: Graph, partial) -> float:
    """Admissible lower bound on the color count of any bijective completion
    of a partial labeling (entries None or 0 mean unassigned).

    Mirrors the bound used inside the search: returns the exact color count
    on complete assignments and ``inf`` when two adjacent closed vertices
    already share a weight.
    """
    q = g.q
    if len(partial) != q:
        raise ValueError(f"expected {q} entries, got {len(partial)}")
    labels = [0 if x in (None, 0) else int(x) for x in partial]
    used = set()
    for lnum in labels:
        if lnum == 0:
            continue
        if not 1 <= lnum <= q:
            raise ValueError(f"label {lnum} outside 1..{q}")
        if lnum in used:
            raise ValueError(f"duplicate label {lnum}")
        used.add(lnum)
    degs = g.degrees
    wt = [0] * g.p
    rem = list(degs)
    for e, lnum in enumerate(labels):
        if lnum:
            a, b = g.edges[e]
            wt[a] += lnum
            wt[b] += lnum
            rem[a] -= 1
            rem[b] -= 1
    closed = [v for v in range(g.p) if rem[v] == 0]
    closed_set = set(closed)
    for a, b in g.edges:
        if a in closed_set and b in closed_set and wt[a] == wt[b]:
            return float("inf")
    nonpend_label = [False] * (q + 1)
    for e, lnum in enumerate(labels):
        if lnum:
            a, b = g.edges[e]
            if degs[a] > 1 and degs[b] > 1:
                nonpend_label[lnum] = True
    gt = {wt[v] for v in closed if wt[v] > q}
    le = {wt[v] for v in closed if wt[v] <= q}
    x = sum(1 for w in le if nonpend_label[w])
    pendant_total = sum(1 for v in range(g.p) if degs[v] == 1)
    heavy = max(range(g.p), key=lambda v: (degs[v], -v))
    delta = 0
    if rem[heavy] > 0 and _triangular(degs[heavy]) > q:
        heavy_adj = set(g.neighbors(heavy))
        covered = {wt[v] for v in closed if wt[v] > q and v in heavy_adj}
        if gt <= covered:
            delta = 1
    return len(gt) + delta + max(pendant_total + x, len(le))
