"""Orderly generation of integral point sets over Z_n^2 under position filters.

Point sets are represented, up to translation and reflection, by the symmetric
matrix of edge-class indices: entry (i, j) is the position of the Lee-reduced
difference of points i and j in a fixed table of integral difference vectors.
Matrices are ordered by reading the strict upper triangle column by column
(column j top to bottom), so the order key of a matrix extends the key of the
matrix with its last point removed.  A matrix is canonical if no simultaneous
row/column permutation yields a larger key, and semi-canonical if no
permutation yields a larger key after dropping the last row and column.

Level r + 1 is generated from level r by glueing: a canonical matrix supplies
the base point set, a compatible semi-canonical matrix with the same leading
block supplies the distance row of the new point, and candidate coordinates
are scanned from the witness realization.  Keeping exactly the semi-canonical
extensions makes the enumeration exhaustive without isomorph duplication among
canonical representatives.

Two engines share this machinery: extend_level materializes whole levels
(useful for counts, dumps, and cross-checks), while max_cardinality walks the
tree of canonical matrices depth first with cardinality pruning, which reaches
the published maxima at moduli where full levels would not fit in time or
memory.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
import time

from .errors import InvalidInputError, SearchTimeout
from .geometry import (
    DeltaVec,
    Point,
    delta,
    is_cocircular,
    is_collinear,
    is_integral_delta,
)

MODES = ("any", "semi-general", "general")

DeltaMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EdgeClassTable:
    """Numbered integral difference classes of Z_n^2, class 0 = (0, 0).

    ``spheres[i]`` lists the points of Z_n^2 whose Lee reduction is class i,
    i.e. the locus at that distance class around any fixed point.
    ``class_of_diff`` maps the row-major index x*n + y of a difference vector
    to its class, -1 for non-integral differences.

    ``relabelings`` are the permutations of the classes induced by the extra
    isometries of Z_n^2 beyond translation and componentwise negation: unit
    scalings (x, y) -> (ux, uy), which keep squared distances square because
    u^2 is one, and the coordinate swap.  They are used to coarsen the
    canonical form, which shrinks the generation lists without affecting the
    achievable maximum cardinalities.
    """

    n: int
    classes: tuple[DeltaVec, ...]
    index: dict[DeltaVec, int]
    spheres: tuple[tuple[Point, ...], ...]
    class_of_diff: tuple[int, ...]
    relabelings: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def edge_classes(n: int) -> EdgeClassTable:
    from .modring import lee_weight

    half = n // 2
    vecs = [
        (a, b)
        for a in range(half + 1)
        for b in range(half + 1)
        if (a, b) != (0, 0) and is_integral_delta((a, b), n)
    ]
    classes = ((0, 0),) + tuple(sorted(vecs))
    index = {v: i for i, v in enumerate(classes)}
    spheres = []
    diff_cls = [-1] * (n * n)
    for i, v in enumerate(classes):
        pts = {(x % n, y % n) for x in (v[0], -v[0]) for y in (v[1], -v[1])}
        spheres.append(tuple(sorted(pts)))
        for x, y in pts:
            diff_cls[x * n + y] = i

    relabelings: set[tuple[int, ...]] = set()
    from math import gcd

    for u in range(1, n):
        if gcd(u, n) != 1:
            continue
        for swap in (False, True):
            perm = []
            for a, b in classes:
                ua, ub = lee_weight(u * a, n), lee_weight(u * b, n)
                perm.append(index[(ub, ua) if swap else (ua, ub)])
            relabelings.add(tuple(perm))
    relabelings.discard(tuple(range(len(classes))))  # identity handled separately
    return EdgeClassTable(
        n, classes, index, tuple(spheres), tuple(diff_cls), tuple(sorted(relabelings))
    )


def matrix_key(dm: DeltaMatrix) -> tuple[int, ...]:
    """Column-lexicographic read of the strict upper triangle."""
    r = len(dm)
    return tuple(dm[i][j] for j in range(1, r) for i in range(j))


def reduced_key(dm: DeltaMatrix) -> tuple[int, ...]:
    """Key of the matrix with last row and column removed (a key prefix)."""
    r = len(dm)
    return tuple(dm[i][j] for j in range(1, r - 1) for i in range(j))


def compare(d1: DeltaMatrix, d2: DeltaMatrix) -> int:
    """-1, 0, 1 as d1 precedes, equals, or succeeds d2 in the matrix order."""
    if len(d1) != len(d2):
        raise InvalidInputError("matrices must have equal order")
    k1, k2 = matrix_key(d1), matrix_key(d2)
    return (k1 > k2) - (k1 < k2)


def _ordering_exceeds(
    dm: DeltaMatrix, target: tuple[int, ...], length: int, relabel: tuple[int, ...] | None = None
) -> bool:
    """True iff some ordering of ``length`` of the r indices beats ``target``.

    The key is built column by column as indices are placed, so branches are
    pruned as soon as their column prefix drops below the target; a branch that
    rises above it decides immediately.  ``relabel`` optionally renames the
    entries before comparison (an edge-class permutation).
    """
    r = len(dm)
    used = [False] * r

    if relabel is None:
        rows = dm
    else:
        rows = tuple(tuple(relabel[e] for e in row) for row in dm)

    def rec(seq: list[int], pos: int) -> bool:
        k = len(seq)
        if k == length:
            return False
        for v in range(r):
            if used[v]:
                continue
            cmp = 0
            for i in range(k):
                e = rows[seq[i]][v]
                t = target[pos + i]
                if e != t:
                    cmp = 1 if e > t else -1
                    break
            if cmp > 0:
                return True
            if cmp == 0:
                used[v] = True
                seq.append(v)
                if rec(seq, pos + k):
                    return True
                seq.pop()
                used[v] = False
        return False

    return rec([], 0)


def is_canonical(dm: DeltaMatrix) -> bool:
    """No simultaneous row/column permutation yields a larger key."""
    return not _ordering_exceeds(dm, matrix_key(dm), len(dm))


def is_semi_canonical(dm: DeltaMatrix) -> bool:
    """No permutation yields a larger key once the last row and column are dropped."""
    return not _ordering_exceeds(dm, reduced_key(dm), len(dm) - 1)


def _is_canonical_g(dm: DeltaMatrix, relabelings: tuple[tuple[int, ...], ...]) -> bool:
    """Canonicity under row/column permutations combined with class relabelings."""
    target = matrix_key(dm)
    r = len(dm)
    if _ordering_exceeds(dm, target, r):
        return False
    for sigma in relabelings:
        if _ordering_exceeds(dm, target, r, sigma):
            return False
    return True


def _is_semi_canonical_g(dm: DeltaMatrix, relabelings: tuple[tuple[int, ...], ...]) -> bool:
    target = reduced_key(dm)
    length = len(dm) - 1
    if _ordering_exceeds(dm, target, length):
        return False
    for sigma in relabelings:
        if _ordering_exceeds(dm, target, length, sigma):
            return False
    return True


def brute_canonical_key(dm: DeltaMatrix) -> tuple[int, ...]:
    """Reference maximum key over all permutations; test oracle for small r."""
    from itertools import permutations

    r = len(dm)
    return max(
        matrix_key(tuple(tuple(dm[p[i]][p[j]] for j in range(r)) for i in range(r)))
        for p in permutations(range(r))
    )


@dataclass(frozen=True)
class PointSetRecord:
    """A distance-class matrix plus one coordinate realization."""

    matrix: DeltaMatrix
    witness: tuple[Point, ...]
    key: tuple[int, ...] = field(hash=False, compare=False, default=())
    canonical: bool = field(hash=False, compare=False, default=False)


def _make_record(
    matrix: DeltaMatrix, witness: tuple[Point, ...], relabelings: tuple[tuple[int, ...], ...]
) -> PointSetRecord:
    return PointSetRecord(matrix, witness, matrix_key(matrix), _is_canonical_g(matrix, relabelings))


def delta_matrix(points: tuple[Point, ...], n: int, table: EdgeClassTable | None = None) -> DeltaMatrix:
    """Class-index matrix of an integral point set realization."""
    table = table or edge_classes(n)
    r = len(points)
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            d = delta(points[i], points[j], n)
            idx = table.index.get(d)
            if idx is None:
                raise InvalidInputError(f"points {points[i]}, {points[j]} not at integral distance")
            rows[i][j] = rows[j][i] = idx
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=1 << 17)
def _bisector_mask(dx: int, dy: int, c: int, n: int) -> int:
    """Bitmask over centers (a, b) seeing two points at one common value.

    The centers equidistant (in the squared sense) from points p and p' with
    difference (dx, dy) and norm difference c solve 2a dx + 2b dy = c (mod n);
    bit a*n + b marks a solution.  Cocircularity of four points is then a
    nonempty intersection of three such masks, which turns the inner loop of
    the circle filter into big-integer ANDs.
    """
    from .geometry import _solve_linear

    tx, ty = 2 * dx % n, 2 * dy % n
    mask = 0
    if ty == 0 and tx != 0:
        for b in range(n):
            for a in _solve_linear(tx, c, n):
                mask |= 1 << (a * n + b)
        return mask
    for a in range(n):
        rhs = c - tx * a
        for b in _solve_linear(ty, rhs, n):
            mask |= 1 << (a * n + b)
    return mask


def _point_bisector(q: Point, w: Point, n: int) -> int:
    dx = (w[0] - q[0]) % n
    dy = (w[1] - q[1]) % n
    c = (w[0] * w[0] + w[1] * w[1] - q[0] * q[0] - q[1] * q[1]) % n
    return _bisector_mask(dx, dy, c, n)


def seed_L3(n: int, mode: str = "any", table: EdgeClassTable | None = None) -> list[PointSetRecord]:
    """All semi-canonical integral triangles over Z_n^2, each matrix once.

    Triangles are enumerated with the first point pinned at the origin, which
    by translation invariance realizes every ordering of every congruence
    class.
    """
    if mode not in MODES:
        raise InvalidInputError(f"unknown mode {mode!r}")
    table = table or edge_classes(n)
    if n < 2:
        return []
    integral_pts = [
        p for i in range(1, len(table.classes)) for p in table.spheres[i]
    ]
    cls_of: dict[Point, int] = {}
    for i in range(1, len(table.classes)):
        for p in table.spheres[i]:
            cls_of[p] = i

    filtered = mode in ("semi-general", "general")
    out: dict[DeltaMatrix, PointSetRecord] = {}
    seen: set[DeltaMatrix] = set()
    for p2 in integral_pts:
        c12 = cls_of[p2]
        for p3 in integral_pts:
            if p3 == p2:
                continue
            d23 = ((p3[0] - p2[0]) % n, (p3[1] - p2[1]) % n)
            c23 = cls_of.get(d23)
            if c23 is None:
                continue
            c13 = cls_of[p3]
            matrix = ((0, c12, c13), (c12, 0, c23), (c13, c23, 0))
            if matrix in seen:
                continue
            seen.add(matrix)
            if filtered and is_collinear((0, 0), p2, p3, n):
                continue
            if _is_semi_canonical_g(matrix, table.relabelings):
                out[matrix] = _make_record(matrix, ((0, 0), p2, p3), table.relabelings)
    return sorted(out.values(), key=lambda rec: rec.key)


@dataclass
class GenerationStats:
    level_sizes: dict[int, int] = field(default_factory=dict)
    glue_calls: int = 0
    glue_wide_results: int = 0  # glue outputs with more than two extensions


def gamma_glue(
    x1: PointSetRecord,
    x2: PointSetRecord,
    n: int,
    table: EdgeClassTable | None = None,
    mode: str = "any",
    stats: GenerationStats | None = None,
) -> list[PointSetRecord]:
    """Glue two r-point records sharing their first r - 1 points.

    The new point q is scanned from the sphere of x2's last-row class around
    the first witness point, matched against the remaining common rows, and
    required to be at integral distance to x1's last point.  Returns the
    distinct extended records sorted by key (not yet semi-canonicity-filtered).
    """
    table = table or edge_classes(n)
    if reduced_key(x1.matrix) != reduced_key(x2.matrix):
        raise InvalidInputError("glue requires equal leading blocks")
    if x2.key > x1.key:
        raise InvalidInputError("glue requires x2 <= x1")
    r = len(x1.matrix)
    witness = x1.witness
    target_row = x2.matrix[r - 1][: r - 1]
    base = witness[0]
    results: dict[DeltaMatrix, PointSetRecord] = {}
    for s in table.spheres[target_row[0]]:
        q = ((base[0] + s[0]) % n, (base[1] + s[1]) % n)
        ok = True
        for i in range(1, r - 1):
            if table.index.get(delta(q, witness[i], n)) != target_row[i]:
                ok = False
                break
        if not ok:
            continue
        d_last = delta(q, witness[r - 1], n)
        c_last = table.index.get(d_last)
        if c_last is None or c_last == 0:
            continue
        if mode in ("semi-general", "general"):
            if any(
                is_collinear(q, witness[i], witness[j], n)
                for i in range(r)
                for j in range(i + 1, r)
            ):
                continue
        if mode == "general":
            if any(
                is_cocircular(q, witness[i], witness[j], witness[k], n)
                for i in range(r)
                for j in range(i + 1, r)
                for k in range(j + 1, r)
            ):
                continue
        new_row = target_row + (c_last,)
        matrix = tuple(
            tuple(x1.matrix[i]) + (new_row[i],) for i in range(r)
        ) + (new_row + (0,),)
        if matrix not in results:
            results[matrix] = PointSetRecord(matrix, witness + (q,), matrix_key(matrix), False)
    if stats is not None:
        stats.glue_calls += 1
        if len(results) > 2:
            stats.glue_wide_results += 1
    return sorted(results.values(), key=lambda rec: rec.key)


def extend_level(
    level: list[PointSetRecord],
    n: int,
    mode: str = "any",
    table: EdgeClassTable | None = None,
    stats: GenerationStats | None = None,
) -> list[PointSetRecord]:
    """One pass of the generation: all semi-canonical (r+1)-records from level r.

    Equivalent to collecting gamma_glue over all admissible (x1, x2) pairs and
    keeping the semi-canonical results, but shares the per-x1 filter work and
    dedups early through the key-prefix property key(y) = key(x1) + new row.
    """
    from .geometry import line_table

    table = table or edge_classes(n)
    cls_of = table.class_of_diff
    spheres = table.spheres
    rows = line_table(n).pair_rows
    filtered = mode in ("semi-general", "general")
    circles = mode == "general"

    buckets: dict[tuple[int, ...], list[PointSetRecord]] = defaultdict(list)
    for rec in level:
        buckets[reduced_key(rec.matrix)].append(rec)

    out: dict[tuple[int, ...], PointSetRecord] = {}
    seen: set[tuple[int, ...]] = set()
    for x1 in level:
        if not x1.canonical:
            continue
        r = len(x1.matrix)
        witness = x1.witness
        base_x, base_y = witness[0]
        filter_cache: dict[Point, bool] = {}

        def q_passes(q: Point) -> bool:
            cached = filter_cache.get(q)
            if cached is not None:
                return cached
            ok = True
            if filtered:
                d = [(((w[0] - q[0]) % n) * n + (w[1] - q[1]) % n) for w in witness]
                for i in range(r):
                    di = d[i]
                    row = rows[di]
                    for j in range(i + 1, r):
                        if (row >> d[j]) & 1:
                            ok = False
                            break
                    if not ok:
                        break
            if ok and circles:
                bis = [_point_bisector(q, w, n) for w in witness]
                for i in range(r):
                    bi = bis[i]
                    for j in range(i + 1, r):
                        pair = bi & bis[j]
                        if not pair:
                            continue
                        for k in range(j + 1, r):
                            if pair & bis[k]:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
            filter_cache[q] = ok
            return ok

        for x2 in buckets[reduced_key(x1.matrix)]:
            if x2.key > x1.key:
                continue
            if stats is not None:
                stats.glue_calls += 1
            target_row = x2.matrix[r - 1][: r - 1]
            found = 0
            for s in spheres[target_row[0]]:
                q = ((base_x + s[0]) % n, (base_y + s[1]) % n)
                ok = True
                for i in range(1, r - 1):
                    w = witness[i]
                    if cls_of[((q[0] - w[0]) % n) * n + (q[1] - w[1]) % n] != target_row[i]:
                        ok = False
                        break
                if not ok:
                    continue
                w = witness[r - 1]
                c_last = cls_of[((q[0] - w[0]) % n) * n + (q[1] - w[1]) % n]
                if c_last <= 0:
                    continue
                if not q_passes(q):
                    continue
                found += 1
                ykey = x1.key + target_row + (c_last,)
                if ykey in seen:
                    continue
                seen.add(ykey)
                new_row = target_row + (c_last,)
                matrix = tuple(
                    tuple(x1.matrix[i]) + (new_row[i],) for i in range(r)
                ) + (new_row + (0,),)
                if _is_semi_canonical_g(matrix, table.relabelings):
                    out[ykey] = PointSetRecord(
                        matrix, witness + (q,), ykey, _is_canonical_g(matrix, table.relabelings)
                    )
            if stats is not None and found > 2:
                stats.glue_wide_results += 1
    return sorted(out.values(), key=lambda rec: rec.key)


def generate_levels(
    n: int,
    mode: str = "any",
    budget: float | None = None,
    max_level: int | None = None,
    retain_all: bool = False,
) -> tuple[dict[int, list[PointSetRecord]], GenerationStats]:
    """Run the generation to exhaustion.

    Returns the levels dict (all levels with ``retain_all``, otherwise just the
    last nonempty one, which carries the maximum-cardinality witnesses) plus
    per-level counts in the stats.
    """
    if mode not in MODES:
        raise InvalidInputError(f"unknown mode {mode!r}")
    start = time.monotonic()
    stats = GenerationStats()
    table = edge_classes(n)
    levels: dict[int, list[PointSetRecord]] = {}
    if n == 1:
        return levels, stats
    current = seed_L3(n, mode, table)
    r = 3
    last: tuple[int, list[PointSetRecord]] | None = None
    while current:
        stats.level_sizes[r] = len(current)
        if retain_all:
            levels[r] = current
        last = (r, current)
        if max_level is not None and r >= max_level:
            break
        if budget is not None and time.monotonic() - start > budget:
            raise SearchTimeout(f"generation for n={n} mode={mode} hit budget", r)
        current = extend_level(current, n, mode, table, stats)
        r += 1
    if last is not None and not retain_all:
        levels[last[0]] = last[1]
    return levels, stats


def _dfs_max(n: int, mode: str, budget: float | None) -> tuple[int, tuple[Point, ...]]:
    """Exact maximum cardinality by depth-first canonical augmentation.

    Canonical matrices form a tree under removal of the last point (a
    canonical matrix has a canonical leading block), so a depth-first walk
    over canonical extensions visits every isomorphism class exactly once.
    Since only the maximum is wanted, a branch is cut when its point count
    plus its surviving candidate count cannot beat the incumbent; the bound is
    sound because every completion of the class consists of points compatible
    with the current witness, the position predicates being invariant under
    the isometries that relate realizations of one matrix.

    Candidates carry their difference indices, class row, and (for the circle
    filter) bisector masks to the current witness, so each level of descent
    only computes the increments contributed by the new point.
    """
    from .geometry import line_table

    start = time.monotonic()
    table = edge_classes(n)
    relabelings = table.relabelings
    cls_of = table.class_of_diff
    rows = line_table(n).pair_rows
    filtered = mode in ("semi-general", "general")
    circles = mode == "general"

    seeds = [rec for rec in seed_L3(n, mode, table) if rec.canonical]
    best = 0
    best_witness: tuple[Point, ...] = ()
    nodes = 0

    # candidate entries: (point, diff indices to witness, class row, bisector masks)
    def seed_candidates(witness: tuple[Point, ...]) -> list[tuple]:
        out = []
        w1, w2, w3 = witness
        for x in range(n):
            for y in range(n):
                p = (x, y)
                if p in witness:
                    continue
                d1 = ((w1[0] - x) % n) * n + (w1[1] - y) % n
                d2 = ((w2[0] - x) % n) * n + (w2[1] - y) % n
                d3 = ((w3[0] - x) % n) * n + (w3[1] - y) % n
                c1, c2, c3 = cls_of[d1], cls_of[d2], cls_of[d3]
                if c1 <= 0 or c2 <= 0 or c3 <= 0:
                    continue
                if filtered and (
                    (rows[d1] >> d2) & 1 or (rows[d1] >> d3) & 1 or (rows[d2] >> d3) & 1
                ):
                    continue
                if circles:
                    b1 = _point_bisector(p, w1, n)
                    b2 = _point_bisector(p, w2, n)
                    b3 = _point_bisector(p, w3, n)
                    if b1 & b2 & b3:
                        continue
                    bis = (b1, b2, b3)
                else:
                    bis = ()
                out.append((p, (d1, d2, d3), (c1, c2, c3), bis))
        return out

    def descend(
        rec_matrix: DeltaMatrix,
        key: tuple[int, ...],
        witness: tuple[Point, ...],
        cands: list[tuple],
        ents: frozenset,
    ) -> None:
        nonlocal best, best_witness, nodes
        nodes += 1
        r = len(witness)
        if r > best:
            best = r
            best_witness = witness
        if r + len(cands) <= best:
            return
        if budget is not None and nodes % 64 == 0 and time.monotonic() - start > budget:
            raise SearchTimeout(f"generation for n={n} mode={mode} hit budget", best)
        last_col = tuple(rec_matrix[i][r - 1] for i in range(r - 1))
        target0 = key[0]
        sigma_max = [max(sigma[e] for e in ents) for sigma in relabelings]
        seen_rows: set[tuple[int, ...]] = set()
        children = []
        for q, _dlist, trow, _bis in cands:
            # necessary conditions: the class row may not carry an entry larger
            # than the leading key entry, nor beat the last column when the new
            # point is swapped in front of the previous one
            if max(trow) > target0 or trow[: r - 1] > last_col:
                continue
            if trow in seen_rows:
                continue
            seen_rows.add(trow)
            row_classes = set(trow)
            # relabelings whose image could still attain the leading entry
            rejected = False
            tying = []
            for si, sigma in enumerate(relabelings):
                m = sigma_max[si]
                for c in row_classes:
                    if sigma[c] > m:
                        m = sigma[c]
                if m > target0:
                    rejected = True
                    break
                if m == target0:
                    tying.append(sigma)
            if rejected:
                continue
            ykey = key + trow
            matrix = tuple(tuple(rec_matrix[i]) + (trow[i],) for i in range(r)) + (
                trow + (0,),
            )
            if _ordering_exceeds(matrix, ykey, r + 1):
                continue
            for sigma in tying:
                if _ordering_exceeds(matrix, ykey, r + 1, sigma):
                    rejected = True
                    break
            if rejected:
                continue
            # surviving extension: shrink the candidate pool against q
            sub = []
            qx, qy = q
            for p, dlist_p, row_p, bis_p in cands:
                if p == q:
                    continue
                dq = ((qx - p[0]) % n) * n + (qy - p[1]) % n
                c = cls_of[dq]
                if c <= 0:
                    continue
                if filtered:
                    row_line = rows[dq]
                    broken = False
                    for dw in dlist_p:
                        if (row_line >> dw) & 1:
                            broken = True
                            break
                    if broken:
                        continue
                if circles:
                    bq = _point_bisector(p, q, n)
                    broken = False
                    for i in range(r):
                        pair = bq & bis_p[i]
                        if pair:
                            for j in range(i + 1, r):
                                if pair & bis_p[j]:
                                    broken = True
                                    break
                            if broken:
                                break
                    if broken:
                        continue
                    sub.append((p, dlist_p + (dq,), row_p + (c,), bis_p + (bq,)))
                else:
                    sub.append((p, dlist_p + (dq,), row_p + (c,), bis_p))
            children.append((matrix, ykey, witness + (q,), sub, ents | row_classes))
        children.sort(key=lambda ch: -len(ch[3]))
        for matrix, ykey, wit, sub, ents_child in children:
            if len(wit) + len(sub) <= best:
                continue
            descend(matrix, ykey, wit, sub, ents_child)

    for rec in seeds:
        cands = seed_candidates(rec.witness)
        if 3 + len(cands) <= best:
            continue
        descend(rec.matrix, rec.key, rec.witness, cands, frozenset(rec.key) | {0})
    return best, best_witness


def max_cardinality(n: int, mode: str = "any", budget: float | None = None) -> int:
    """Exact maximum cardinality of a mode-filtered integral point set over Z_n^2."""
    return max_cardinality_witness(n, mode, budget)[0]


def max_cardinality_witness(
    n: int, mode: str = "any", budget: float | None = None
) -> tuple[int, tuple[Point, ...]]:
    """Maximum cardinality plus one realizing point set."""
    if n < 1:
        raise InvalidInputError("modulus must be positive")
    if mode not in MODES:
        raise InvalidInputError(f"unknown mode {mode!r}")
    if n == 1:
        return 1, ((0, 0),)
    best, witness = _dfs_max(n, mode, budget)
    if best >= 3:
        return best, witness
    # no triangle survives the filter; two distinct points are always integral
    return 2, ((0, 0), (1, 0))


def dump_level(records: list[PointSetRecord]) -> str:
    """One line per record: r, upper-triangle class indices, witness coordinates."""
    lines = []
    for rec in records:
        r = len(rec.matrix)
        tri = " ".join(str(v) for v in rec.key)
        pts = " ".join(f"{x},{y}" for x, y in rec.witness)
        lines.append(f"{r} {tri} {pts}")
    return "\n".join(lines)
