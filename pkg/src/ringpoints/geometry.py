"""Points of Z_n^m, Lee-reduced difference vectors, and the position predicates.

A point is an m-tuple of residues.  The integral-distance test only depends on
the componentwise Lee reduction of the difference vector, because
(n - x)^2 = x^2 mod n.

Collinearity over Z_n^2 is the parametric notion: three points lie on a
"cyclic line" {(a, b) + w * (t1, t2) : w in Z_n}.  For composite n this is
strictly stronger than the vanishing of the classical 3x3 determinant, so the
exact test enumerates cyclic lines once per modulus and answers lookups from a
bitmap of pair memberships.  Concyclicity likewise quantifies over centers and
a nonzero radius ring element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InvalidInputError
from .modring import lee_weight, squares

Point = tuple[int, ...]
DeltaVec = tuple[int, ...]


def delta(u: Point, v: Point, n: int) -> DeltaVec:
    """Componentwise Lee reduction of u - v; symmetric and translation invariant."""
    if len(u) != len(v):
        raise InvalidInputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(lee_weight(a - b, n) for a, b in zip(u, v))


def is_integral_delta(d: DeltaVec, n: int) -> bool:
    """True iff the squared length of the difference vector is a square in Z_n."""
    return sum(x * x for x in d) % n in squares(n).squares


def is_integral(u: Point, v: Point, n: int) -> bool:
    """True iff u and v are at integral distance in Z_n^m."""
    if len(u) != len(v):
        raise InvalidInputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a - b) * (a - b) for a, b in zip(u, v)) % n in squares(n).squares


def point_index(p: Point, n: int) -> int:
    """Row-major encoding sum(p_i * n^(m-1-i)); fixed so exports are reproducible."""
    idx = 0
    for c in p:
        idx = idx * n + c % n
    return idx


def index_point(idx: int, n: int, m: int) -> Point:
    coords = []
    for _ in range(m):
        coords.append(idx % n)
        idx //= n
    return tuple(reversed(coords))


@dataclass(frozen=True)
class LineTable:
    """Per-modulus cyclic-line structure for exact collinearity over Z_n^2.

    ``pair_rows[q]`` is a bitmask over point indices r such that {0, q, r} is
    collinear; ``lines`` are the distinct cyclic lines through 0 as bitmasks.
    """

    n: int
    lines: tuple[int, ...]
    pair_rows: tuple[int, ...]


@lru_cache(maxsize=None)
def line_table(n: int) -> LineTable:
    """Enumerate all cyclic lines through the origin and mark collinear pairs."""
    n2 = n * n
    line_masks: set[int] = set()
    for tx in range(n):
        for ty in range(n):
            mask = 0
            x = y = 0
            for _ in range(n):
                mask |= 1 << (x * n + y)
                x = (x + tx) % n
                y = (y + ty) % n
            line_masks.add(mask)
    rows = [0] * n2
    for mask in line_masks:
        m = mask
        while m:
            b = m & -m
            rows[b.bit_length() - 1] |= mask
            m ^= b
    return LineTable(n, tuple(sorted(line_masks)), tuple(rows))


def is_collinear(p1: Point, p2: Point, p3: Point, n: int) -> bool:
    """Exact parametric collinearity of three points of Z_n^2.

    Translation reduces the test to whether p2 - p1 and p3 - p1 lie on a common
    cyclic line through 0; triples with repeated points are always collinear.
    """
    if not len(p1) == len(p2) == len(p3) == 2:
        raise InvalidInputError("collinearity is defined over Z_n^2")
    table = line_table(n)
    q = ((p2[0] - p1[0]) % n) * n + (p2[1] - p1[1]) % n
    r = ((p3[0] - p1[0]) % n) * n + (p3[1] - p1[1]) % n
    return (table.pair_rows[q] >> r) & 1 == 1


def is_set_collinear(points: list[Point] | tuple[Point, ...], n: int) -> bool:
    """True iff all points lie on one common cyclic line (any cardinality)."""
    if len(points) <= 2:
        return True
    x0, y0 = points[0]
    need = 0
    for x, y in points[1:]:
        need |= 1 << (((x - x0) % n) * n + (y - y0) % n)
    return any(need & line == need for line in line_table(n).lines)


def collinear_det(p1: Point, p2: Point, p3: Point, n: int) -> bool:
    """Vanishing of the 3x3 unit-column determinant mod n.

    Characterizes collinearity exactly for prime n; for composite n it is only
    a necessary condition.
    """
    d = (p2[0] - p1[0]) * (p3[1] - p1[1]) - (p3[0] - p1[0]) * (p2[1] - p1[1])
    return d % n == 0


def _solve_linear(t: int, c: int, n: int) -> list[int]:
    """All b in Z_n with t*b = c mod n."""
    t %= n
    c %= n
    g = gcd(t, n)
    if c % g:
        return []
    if t == 0:
        return list(range(n))
    n_, t_, c_ = n // g, t // g, (c // g)
    b0 = c_ * pow(t_, -1, n_) % n_
    return [b0 + k * n_ for k in range(g)]


def _common_center_values(pts: tuple[Point, ...], n: int):
    """Yield the value (x_1-a)^2 + (y_1-b)^2 for every center (a, b) that sees
    all points at one common value.

    Candidate centers are cut down by the linear congruence
    2a(x_i-x_1) + 2b(y_i-y_1) = norm_i - norm_1 for the companion point and
    coordinate role that pin the center down hardest; in the worst case this
    degrades to the full center scan.
    """
    norms = [(x * x + y * y) % n for x, y in pts]
    x1, y1 = pts[0]
    best = None
    for i in range(1, len(pts)):
        gy = gcd(2 * (pts[i][1] - y1) % n, n)
        gx = gcd(2 * (pts[i][0] - x1) % n, n)
        for swap, g in ((False, gy), (True, gx)):
            if best is None or g < best[2]:
                best = (i, swap, g)
    i, swap, _ = best
    xi, yi = pts[i]
    rhs0 = norms[i] - norms[0]

    for free in range(n):
        if not swap:
            bs = _solve_linear(2 * (yi - y1), rhs0 - 2 * free * (xi - x1), n)
            centers = ((free, b) for b in bs)
        else:
            as_ = _solve_linear(2 * (xi - x1), rhs0 - 2 * free * (yi - y1), n)
            centers = ((a, free) for a in as_)
        for a, b in centers:
            s = ((x1 - a) * (x1 - a) + (y1 - b) * (y1 - b)) % n
            if all(((x - a) * (x - a) + (y - b) * (y - b)) % n == s for x, y in pts[1:]):
                yield s


def _circle_points(pts: tuple[Point, ...]) -> tuple[Point, ...]:
    if any(len(p) != 2 for p in pts):
        raise InvalidInputError("circle predicates are defined over Z_n^2")
    if len(set(pts)) < len(pts):
        raise InvalidInputError("circle predicates need distinct points")
    return pts


def is_concyclic(p1: Point, p2: Point, p3: Point, p4: Point, n: int) -> bool:
    """Exact concyclicity: a common center and a nonzero ring element r with
    (x_i - a)^2 + (y_i - b)^2 = r^2 for all four points.

    The radius r must be nonzero but r^2 = 0 is legal for composite n, so the
    common value is tested against the squares of nonzero elements.  Quadruples
    with repeated points are rejected: the definition presumes four points.
    """
    pts = _circle_points((p1, p2, p3, p4))
    if not concyclic_det(*pts, n):  # necessary condition, cheap rejection
        return False
    nz = squares(n).nonzero_squares
    return any(s in nz for s in _common_center_values(pts, n))


@lru_cache(maxsize=1 << 18)
def _cocircular_normalized(pts: tuple[Point, ...], n: int) -> bool:
    for _ in _common_center_values(pts, n):
        return True
    return False


@lru_cache(maxsize=None)
def _prime_power_parts(n: int) -> tuple[int, ...]:
    from .modring import factorize

    return tuple(p**k for p, k in factorize(n))


def is_cocircular(p1: Point, p2: Point, p3: Point, p4: Point, n: int) -> bool:
    """Four distinct points on a common circle locus (x-a)^2 + (y-b)^2 = s.

    Unlike is_concyclic the common value s is unrestricted: it may be zero or a
    non-square, covering degenerate and irrational-radius circles.  This is the
    position filter under which the published general-position maxima arise.

    The center system is linear, so existence over Z_n splits over the prime
    power parts of n by the CRT; each part is scanned independently (repeated
    points after reduction are harmless there).
    """
    pts = _circle_points((p1, p2, p3, p4))
    if not concyclic_det(*pts, n):  # necessary condition, cheap rejection
        return False
    for q in _prime_power_parts(n):
        spts = sorted((x % q, y % q) for x, y in pts)
        x0, y0 = spts[0]
        reduced = tuple(((x - x0) % q, (y - y0) % q) for x, y in spts)
        if not _cocircular_normalized(reduced, q):
            return False
    return True


def concyclic_det(p1: Point, p2: Point, p3: Point, p4: Point, n: int) -> bool:
    """Vanishing mod n of the 4x4 determinant with rows (x^2+y^2, x, y, 1).

    Necessary for four points on a circle; not sufficient in general.
    """
    rows = [(x * x + y * y, x, y, 1) for x, y in (p1, p2, p3, p4)]
    return _det4(rows) % n == 0


def _det3(m: list[tuple[int, int, int]]) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _det4(m: list[tuple[int, int, int, int]]) -> int:
    total = 0
    sign = 1
    for c in range(4):
        minor = [tuple(row[k] for k in range(4) if k != c) for row in m[1:]]
        total += sign * m[0][c] * _det3(minor)
        sign = -sign
    return total
