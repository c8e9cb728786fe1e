"""Distance-graph construction and an exact maximum-clique solver.

Cliques of the distance graph are exactly the integral point sets, so the
maximum cardinality I(n, m) reduces to maximum clique.  Three graph variants
are provided: the full graph on all of Z_n^m, the graph rooted at 0 (one point
fixed by translation symmetry), and the family of graphs with a fixed anchor
edge class (two points fixed, remaining edge classes restricted by a chosen
numbering).

The solver is branch and bound over bitset candidate sets with greedy-coloring
upper bounds, vertices preordered by descending degree.  Adjacency rows are
Python ints used as bit vectors, which keeps the inner loops in C.
"""

from __future__ import annotations

import sys
import threading
import time
from dataclasses import dataclass, field

from .errors import InvalidInputError, ResourceLimitError, SearchTimeout
from .geometry import Point, delta, is_integral, is_integral_delta, point_index
from .modring import squares

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

DEFAULT_MAX_VERTICES = 1 << 17


@dataclass
class DistanceGraph:
    """Vertex labels plus symmetric bit-vector adjacency."""

    n: int
    m: int
    variant: str
    labels: list
    adj: list[int]
    meta: dict = field(default_factory=dict)

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


@dataclass
class CliqueResult:
    size: int
    witness: list
    nodes_explored: int
    elapsed: float
    exact: bool = True


def _check_budget_vertices(v: int, max_vertices: int) -> None:
    if v > max_vertices:
        raise ResourceLimitError(f"graph on {v} vertices exceeds limit {max_vertices}")


def _all_points(n: int, m: int) -> list[Point]:
    pts = [()]
    for _ in range(m):
        pts = [p + (c,) for p in pts for c in range(n)]
    return pts


def _integral_diff_table(n: int, m: int) -> list[bool]:
    """ok[point_index(u - v)] == is_integral(u, v); one entry per difference vector."""
    sq = squares(n).squares
    ok = [False] * (n**m)
    for idx, p in enumerate(_all_points(n, m)):
        ok[idx] = sum(c * c for c in p) % n in sq
    return ok


def _adjacency(points: list[Point], n: int, m: int, ok: list[bool]) -> list[int]:
    v = len(points)
    adj = [0] * v
    if m == 2:
        coords = [(p[0], p[1]) for p in points]
        for i in range(v):
            xi, yi = coords[i]
            row = adj[i]
            for j in range(i + 1, v):
                xj, yj = coords[j]
                if ok[((xi - xj) % n) * n + (yi - yj) % n]:
                    row |= 1 << j
                    adj[j] |= 1 << i
            adj[i] = row
    else:
        diff = [point_index(tuple((a - b) % n for a, b in zip(u, w)), n) for u in points for w in points]
        for i in range(v):
            base = i * v
            row = adj[i]
            for j in range(i + 1, v):
                if ok[diff[base + j]]:
                    row |= 1 << j
                    adj[j] |= 1 << i
            adj[i] = row
    return adj


def build_full(n: int, m: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> DistanceGraph:
    """Graph on all points of Z_n^m, edges between integral-distance pairs."""
    _check_budget_vertices(n**m, max_vertices)
    points = _all_points(n, m)
    ok = _integral_diff_table(n, m)
    return DistanceGraph(n, m, "full", points, _adjacency(points, n, m, ok))


def build_rooted(n: int, m: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> DistanceGraph:
    """Graph on the points at integral distance to 0, excluding 0 itself.

    By translation symmetry 0 can be assumed to belong to a maximum integral
    point set, so I(n, m) = 1 + max clique of this graph.
    """
    _check_budget_vertices(n**m, max_vertices)
    ok = _integral_diff_table(n, m)
    zero = (0,) * m
    points = [p for p in _all_points(n, m) if p != zero and ok[point_index(p, n)]]
    adj = _adjacency(points, n, m, ok)
    return DistanceGraph(n, m, "rooted", points, adj, meta={"root": zero})


def delta_classes(n: int, m: int) -> list[tuple[int, ...]]:
    """The nonzero integral Lee-reduced difference vectors of Z_n^m, lexicographic."""
    half = n // 2
    vecs = [()]
    for _ in range(m):
        vecs = [v + (c,) for v in vecs for c in range(half + 1)]
    return [v for v in vecs if any(v) and is_integral_delta(v, n)]


def build_delta_family(
    n: int, m: int, ordering: str = "rarest", max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[DistanceGraph]:
    """One graph per anchor edge class e_i, with edges restricted to classes >= i.

    A maximum integral point set of size >= 2 can be translated and reflected
    so that it contains 0 and the Lee-reduced witness of its minimal-numbered
    edge class, hence I(n, m) = 2 + max over the family of the maximum clique.

    ``ordering`` fixes the class numbering: "rarest" sorts ascending by the
    number of common integral neighbors of the anchor pair (ties lexicographic),
    which keeps the graphs with the most permissive edge condition small;
    "lex" is plain lexicographic.
    """
    _check_budget_vertices(n**m, max_vertices)
    ok = _integral_diff_table(n, m)
    zero = (0,) * m
    classes = delta_classes(n, m)
    if not classes:
        return []
    points = [p for p in _all_points(n, m) if p != zero and ok[point_index(p, n)]]

    def common_count(e: Point) -> int:
        return sum(
            1 for p in points if p != e and ok[point_index(tuple((a - b) % n for a, b in zip(p, e)), n)]
        )

    if ordering == "rarest":
        classes.sort(key=lambda e: (common_count(e), e))
    elif ordering != "lex":
        raise InvalidInputError(f"unknown ordering {ordering!r}")
    class_index = {e: i for i, e in enumerate(classes)}

    family = []
    for i, e in enumerate(classes):
        verts = [
            p
            for p in points
            if p != e and ok[point_index(tuple((a - b) % n for a, b in zip(p, e)), n)]
        ]
        v = len(verts)
        adj = [0] * v
        for a in range(v):
            pa = verts[a]
            row = adj[a]
            for b in range(a + 1, v):
                j = class_index.get(delta(pa, verts[b], n))
                if j is not None and j >= i:
                    row |= 1 << b
                    adj[b] |= 1 << a
            adj[a] = row
        family.append(
            DistanceGraph(n, m, "delta", verts, adj, meta={"anchor": e, "class_rank": i})
        )
    return family


class _BudgetExpired(Exception):
    pass


class _SearchState:
    __slots__ = ("best_size", "best_clique", "nodes", "lock")

    def __init__(self, size: int, clique: list[int]):
        self.best_size = size
        self.best_clique = clique
        self.nodes = 0
        self.lock = threading.Lock()

    def offer(self, clique: list[int]) -> None:
        with self.lock:
            if len(clique) > self.best_size:
                self.best_size = len(clique)
                self.best_clique = clique


def _greedy_clique(adj: list[int], v: int) -> list[int]:
    """Deterministic greedy warm start: grow from each of the best-degree vertices."""
    if v == 0:
        return []
    degs = [adj[i].bit_count() for i in range(v)]
    starts = sorted(range(v), key=lambda i: -degs[i])[:8]
    best: list[int] = []
    for s in starts:
        clique = [s]
        cand = adj[s]
        while cand:
            # highest-degree candidate
            bestv, bestd = -1, -1
            q = cand
            while q:
                b = q & -q
                u = b.bit_length() - 1
                q ^= b
                d = (cand & adj[u]).bit_count()
                if d > bestd:
                    bestv, bestd = u, d
            clique.append(bestv)
            cand &= adj[bestv]
        if len(clique) > len(best):
            best = clique
    return best


def _expand(adj: list[int], rstack: list[int], p: int, state: _SearchState, deadline: float | None) -> None:
    state.nodes += 1
    if deadline is not None and state.nodes % 256 == 0 and time.monotonic() > deadline:
        raise _BudgetExpired
    order: list[int] = []
    bounds: list[int] = []
    uncolored = p
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            b = q & -q
            u = b.bit_length() - 1
            order.append(u)
            bounds.append(color)
            uncolored ^= b
            q = (q ^ b) & ~adj[u]
    cur = p
    rlen = len(rstack)
    for i in range(len(order) - 1, -1, -1):
        if rlen + bounds[i] <= state.best_size:
            return
        u = order[i]
        cur ^= 1 << u
        sub = cur & adj[u]
        if sub:
            rstack.append(u)
            _expand(adj, rstack, sub, state, deadline)
            rstack.pop()
        elif rlen + 1 > state.best_size:
            state.offer(rstack + [u])


def max_clique(
    g: DistanceGraph,
    budget: float | None = None,
    initial: list | None = None,
    threads: int = 1,
) -> CliqueResult:
    """Exact maximum clique of the graph.

    ``initial`` may carry a known clique (as vertex labels) to seed the
    incumbent; it is verified before use.  On budget expiry the incumbent is
    returned with ``exact=False``.  The final size does not depend on
    ``threads``; the witness may.
    """
    start = time.monotonic()
    v = g.num_vertices
    if v == 0:
        return CliqueResult(0, [], 0, 0.0, True)

    # relabel by descending degree for stronger greedy colorings
    perm = sorted(range(v), key=lambda i: (-g.adj[i].bit_count(), i))
    inv = [0] * v
    for new, old in enumerate(perm):
        inv[old] = new
    adj = [0] * v
    for old in range(v):
        row = g.adj[old]
        new_row = 0
        while row:
            b = row & -row
            row ^= b
            new_row |= 1 << inv[b.bit_length() - 1]
        adj[inv[old]] = new_row

    seed: list[int] = []
    if initial:
        label_pos = {label: i for i, label in enumerate(g.labels)}
        seed = [inv[label_pos[x]] for x in initial]
        for i, a in enumerate(seed):
            for b in seed[i + 1 :]:
                if not (adj[a] >> b) & 1:
                    raise InvalidInputError("initial clique is not pairwise adjacent")
    greedy = _greedy_clique(adj, v)
    if len(greedy) > len(seed):
        seed = greedy

    state = _SearchState(len(seed), list(seed))
    deadline = start + budget if budget is not None else None
    full = (1 << v) - 1
    exact = True

    if threads <= 1:
        try:
            _expand(adj, [], full, state, deadline)
        except _BudgetExpired:
            exact = False
    else:
        exact = _parallel_root(adj, full, state, deadline, threads)

    witness = [g.labels[perm[i]] for i in state.best_clique]
    return CliqueResult(state.best_size, witness, state.nodes, time.monotonic() - start, exact)


def _parallel_root(
    adj: list[int], full: int, state: _SearchState, deadline: float | None, threads: int
) -> bool:
    """Split the root branches across worker threads sharing one incumbent."""
    order: list[int] = []
    uncolored = full
    while uncolored:
        q = uncolored
        while q:
            b = q & -q
            u = b.bit_length() - 1
            order.append(u)
            uncolored ^= b
            q = (q ^ b) & ~adj[u]
    tasks = []
    cur = full
    for u in reversed(order):
        cur ^= 1 << u
        tasks.append((u, cur & adj[u]))

    expired = [False]
    pos = [0]
    pos_lock = threading.Lock()

    def worker() -> None:
        while True:
            with pos_lock:
                if pos[0] >= len(tasks):
                    return
                u, sub = tasks[pos[0]]
                pos[0] += 1
            try:
                if sub:
                    _expand(adj, [u], sub, state, deadline)
                elif state.best_size < 1:
                    state.offer([u])
            except _BudgetExpired:
                expired[0] = True
                return

    pool = [threading.Thread(target=worker) for _ in range(threads)]
    for t in pool:
        t.start()
    for t in pool:
        t.join()
    return not expired[0]


def _seed_for_rooted(n: int, m: int) -> list[Point] | None:
    """A constructed clique of the rooted graph: a known integral point set minus 0."""
    from . import reductions

    zero = (0,) * m
    if m == 2:
        pts, _ = reductions.lemma1_points(n)
        if n % 4 == 2:
            pts2, _ = reductions.lemma2_points(n)
            if len(pts2) > len(pts):
                pts = pts2
        return [p for p in pts if p != zero]
    # axis line (u, 0, ..., 0); distances (u1-u2)^2 are squares for every n
    return [(u,) + (0,) * (m - 1) for u in range(1, n)]


def _solve_rooted(n: int, m: int, budget: float | None, threads: int) -> int:
    g = build_rooted(n, m)
    res = max_clique(g, budget=budget, initial=_seed_for_rooted(n, m), threads=threads)
    if not res.exact:
        raise SearchTimeout(f"I({n},{m}) rooted search hit budget", 1 + res.size)
    return 1 + res.size


def _solve_delta(n: int, m: int, budget: float | None, threads: int) -> int:
    family = build_delta_family(n, m)
    if not family:
        return _solve_rooted(n, m, budget, threads)
    best = 2
    for g in family:
        res = max_clique(g, budget=budget, threads=threads)
        if not res.exact:
            raise SearchTimeout(f"I({n},{m}) delta-family search hit budget", max(best, 2 + res.size))
        best = max(best, 2 + res.size)
    return best


def _solve_full(n: int, m: int, budget: float | None, threads: int) -> int:
    res = max_clique(build_full(n, m), budget=budget, threads=threads)
    if not res.exact:
        raise SearchTimeout(f"I({n},{m}) full search hit budget", res.size)
    return res.size


def I_of(
    n: int,
    m: int,
    strategy: str = "auto",
    use_cartesian: bool = True,
    budget: float | None = None,
    threads: int = 1,
) -> int:
    """Exact maximum cardinality of an integral point set over Z_n^m.

    "auto" dispatches the closed forms (m = 1, n <= 2), splits composite n into
    coprime prime-power factors, reduces even moduli to the half-ring weight
    graph, and otherwise runs the rooted clique search.  Explicit strategies
    ("full", "rooted", "delta") run the named graph variant directly, for
    cross-checking.  A budget expiry raises SearchTimeout carrying the best
    proven lower bound.
    """
    if n < 1 or m < 1:
        raise InvalidInputError("n and m must be positive")
    if strategy == "full":
        return _solve_full(n, m, budget, threads)
    if strategy == "rooted":
        return _solve_rooted(n, m, budget, threads)
    if strategy == "delta":
        return _solve_delta(n, m, budget, threads)
    if strategy != "auto":
        raise InvalidInputError(f"unknown strategy {strategy!r}")

    if n == 1:
        return 1
    if m == 1:
        return n
    if n == 2:
        return 2**m

    if use_cartesian:
        from .modring import factorize

        factors = factorize(n)
        if len(factors) > 1:
            out = 1
            for p, r in factors:
                out *= I_of(p**r, m, "auto", use_cartesian, budget, threads)
            return out

    if n % 2 == 0:
        from .reductions import even_reduction_value

        return even_reduction_value(n, m, budget=budget, threads=threads)
    return _solve_rooted(n, m, budget, threads)
