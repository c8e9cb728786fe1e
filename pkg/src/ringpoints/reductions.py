"""Closed forms, constructive lower bounds, and reductions for I(n, m).

Two families of constructions give the conjecturally tight lower bounds for
I(n, 2): a grid of full rows whose second coordinate is scaled so its squared
contribution vanishes mod n, and a refinement for n = 2 mod 4 where the
contribution collapses to 0 or a fixed square shift.  Even moduli reduce to a
weight condition on the half ring (every point of Z_n^m has exactly 2^m
preimages in Z_{2n}^m), coprime moduli multiply via the CRT, and Z_3^m is a
pure Hamming-distance selection problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cliquegraph import DistanceGraph, _all_points, max_clique
from .errors import InvalidInputError, NotApplicableError, SearchTimeout
from .geometry import Point, is_integral
from .modring import factorize, is_prime, omega, squares


def _lemma1_scale(n: int) -> tuple[int, int]:
    """(k, bound) with k = prod p^ceil(r/2); bound = n * prod p^floor(r/2)."""
    k = 1
    cofactor = 1
    for p, r in factorize(n):
        k *= p ** ((r + 1) // 2)
        cofactor *= p ** (r // 2)
    return k, n * cofactor


def lemma1_bound(n: int) -> int:
    return _lemma1_scale(n)[1]


def lemma1_points(n: int) -> tuple[list[Point], int]:
    """Integral point set {(u, v*k)} over Z_n^2 of size n * prod p^floor(r/2).

    k is chosen so k^2 = 0 mod n, making every squared distance collapse to
    (u1 - u2)^2.  Pairwise integrality is re-verified before returning.
    """
    k, bound = _lemma1_scale(n)
    pts = sorted({(u, v * k % n) for u in range(n) for v in range(n)})
    assert len(pts) == bound
    _verify_integral(pts, n)
    return pts, bound


def lemma2_bound(n: int) -> int:
    if n % 4 != 2:
        raise NotApplicableError(f"the n = 2 mod 4 construction needs n = 2 mod 4, got {n}")
    cofactor = 1
    for p, r in factorize(n):
        if p != 2:
            cofactor *= p ** (r // 2)
    return 2 * n * cofactor


def lemma2_points(n: int) -> tuple[list[Point], int]:
    """Integral point set of size 2n * prod_{p odd} p^floor(r/2) for n = 2 mod 4.

    With k the odd scale, 2k^2 = 0 mod n, so each squared distance equals
    either (u1 - u2)^2 or (u1 - u2 + k^2)^2.
    """
    bound = lemma2_bound(n)
    k = 1
    for p, r in factorize(n):
        if p != 2:
            k *= p ** ((r + 1) // 2)
    pts = sorted({(u, v * k % n) for u in range(n) for v in range(n)})
    assert len(pts) == bound
    _verify_integral(pts, n)
    return pts, bound


def _verify_integral(pts: list[Point], n: int) -> None:
    for i, u in enumerate(pts):
        for v in pts[i + 1 :]:
            if not is_integral(u, v, n):
                raise AssertionError(f"constructed set not integral at {u}, {v} mod {n}")


def conjectured_I2(n: int) -> int:
    """The conjecturally tight lower bound for I(n, 2): best applicable construction."""
    best = lemma1_bound(n)
    if n % 4 == 2:
        best = max(best, lemma2_bound(n))
    return best


def conjectured_I2_tag(n: int) -> tuple[int, str]:
    if n % 4 == 2 and lemma2_bound(n) > lemma1_bound(n):
        return lemma2_bound(n), "lemma2"
    return lemma1_bound(n), "lemma1"


def cartesian_compose(points_a: list[Point], a: int, points_b: list[Point], b: int) -> list[Point]:
    """CRT product of integral point sets over Z_a^2 and Z_b^2, for coprime a, b.

    The result has |P_a| * |P_b| points over Z_ab^2 and is pairwise integral;
    the multiplicativity fails for non-coprime moduli, so those are rejected.
    """
    if gcd(a, b) != 1:
        raise InvalidInputError(f"moduli {a} and {b} are not coprime")
    ab = a * b
    inv_a_mod_b = pow(a, -1, b) if b > 1 else 0
    inv_b_mod_a = pow(b, -1, a) if a > 1 else 0

    def crt(xa: int, xb: int) -> int:
        return (xa * b * inv_b_mod_a + xb * a * inv_a_mod_b) % ab

    return sorted(
        tuple(crt(ca, cb) for ca, cb in zip(pa, pb)) for pa in points_a for pb in points_b
    )


def even_weight(u: Point, v: Point, two_n: int) -> int:
    """Sum of squared canonical-lift differences, taken mod 2n."""
    return sum((a - b) * (a - b) for a, b in zip(u, v)) % two_n


def even_reduction_graph(two_n: int, m: int) -> DistanceGraph:
    """Weight graph on Z_n^m whose cliques lift to integral point sets over Z_{2n}^m.

    Each vertex has 2^m preimages under the mod-n projection, and a set S is
    admissible iff all pairwise weights are squares mod 2n; hence
    I(2n, m) = 2^m * (maximum clique).
    """
    if two_n % 2 != 0:
        raise InvalidInputError(f"even reduction needs an even modulus, got {two_n}")
    n = two_n // 2
    points = _all_points(n, m)
    sq = squares(two_n).squares
    v = len(points)
    adj = [0] * v
    for i in range(v):
        pi = points[i]
        row = adj[i]
        for j in range(i + 1, v):
            if even_weight(pi, points[j], two_n) in sq:
                row |= 1 << j
                adj[j] |= 1 << i
        adj[i] = row
    return DistanceGraph(two_n, m, "even", points, adj, meta={"half_modulus": n})


def _even_seed(two_n: int, m: int) -> list[Point]:
    """Project a constructed integral point set over Z_{2n} into the weight graph."""
    n = two_n // 2
    if m == 2:
        pts, _ = lemma1_points(two_n)
        if two_n % 4 == 2:
            pts2, _ = lemma2_points(two_n)
            if len(pts2) > len(pts):
                pts = pts2
        return sorted({(x % n, y % n) for x, y in pts})
    return [(u,) + (0,) * (m - 1) for u in range(n)]


def even_reduction_value(
    two_n: int, m: int, budget: float | None = None, threads: int = 1
) -> int:
    g = even_reduction_graph(two_n, m)
    res = max_clique(g, budget=budget, initial=_even_seed(two_n, m), threads=threads)
    if not res.exact:
        raise SearchTimeout(f"I({two_n},{m}) even reduction hit budget", (2**m) * res.size)
    return (2**m) * res.size


def hamming_distance(u: Point, v: Point) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def hamming_predicate_I3(m: int) -> DistanceGraph:
    """Graph on Z_3^m with edges at Hamming distance not congruent 2 mod 3.

    Since 1^2 = 2^2 = 1 mod 3, squared distances count differing coordinates,
    and the squares mod 3 are {0, 1}; the maximum clique equals I(3, m).
    """
    if m < 1:
        raise InvalidInputError("dimension must be positive")
    points = _all_points(3, m)
    return DistanceGraph(3, m, "hamming", points, _hamming_adj(points))


def hamming_I3_value(m: int, budget: float | None = None, threads: int = 1) -> int:
    """I(3, m) via the Hamming formulation, rooted at 0 by translation symmetry."""
    points = [p for p in _all_points(3, m) if any(p) and sum(1 for c in p if c) % 3 != 2]
    sq_ok = _hamming_adj(points)
    g = DistanceGraph(3, m, "hamming", points, sq_ok, meta={"root": (0,) * m})
    res = max_clique(g, budget=budget, threads=threads)
    if not res.exact:
        raise SearchTimeout(f"I(3,{m}) hamming search hit budget", 1 + res.size)
    return 1 + res.size


def _hamming_adj(points: list[Point]) -> list[int]:
    v = len(points)
    adj = [0] * v
    for i in range(v):
        pi = points[i]
        row = adj[i]
        for j in range(i + 1, v):
            if hamming_distance(pi, points[j]) % 3 != 2:
                row |= 1 << j
                adj[j] |= 1 << i
        adj[i] = row
    return adj


def ilig_set(p: int) -> list[Point]:
    """The non-collinear integral point set (1, +-w) * squares of size p.

    Needs w with w^2 = -1, hence p = 1 mod 4; the defining identities make all
    pairwise squared distances products of squares.
    """
    w = omega(p)  # raises for p not prime or p != 1 mod 4
    sq = sorted(squares(p).squares)
    pts = sorted({(q, w * q % p) for q in sq} | {(q, -w * q % p) for q in sq})
    assert len(pts) == p
    _verify_integral(pts, p)
    return pts


def semi_general_upper(n: int) -> int:
    """Best known upper bound for the no-3-collinear maximum over Z_n^2.

    Minimum of the row-partition bound 2n, the projective bound p + 1 for odd
    primes, and the prime-power bound n(1 + p^-ceil((a+1)/2) + p^-a) for each
    p^a exactly dividing n, floored to an integer.
    """
    if n < 2:
        raise InvalidInputError("upper bound defined for n >= 2")
    bounds = [2 * n]
    if n % 2 == 1 and is_prime(n):
        bounds.append(n + 1)
    for p, a in factorize(n):
        val = n * (1 + Fraction(1, p ** ((a + 2) // 2)) + Fraction(1, p**a))
        bounds.append(int(val))  # Fraction floors via int() for positive values
    return min(bounds)


@dataclass
class BoundReport:
    """Best known bracket for a maximum, with provenance tags.

    ``lower`` comes from an explicit construction, ``upper`` from the position
    bounds; ``exact`` is filled when the search has pinned the value.
    """

    n: int
    m: int
    lower: int
    lower_tag: str
    upper: int | None = None
    upper_tag: str | None = None
    exact: int | None = None


def bound_report(n: int, mode: str = "I") -> BoundReport:
    """Bracket I(n, 2) by constructions, or the semi-general maximum by the
    partition/projective/prime-power bounds."""
    if mode == "I":
        lower, tag = conjectured_I2_tag(n)
        return BoundReport(n, 2, lower, tag, n * n, "point count")
    if mode == "semi-general":
        lower = 2 if n >= 2 else 1
        return BoundReport(n, 2, lower, "point pair", semi_general_upper(n), "line partition")
    raise InvalidInputError(f"no bounds for mode {mode!r}")


@dataclass
class ConjectureEntry:
    n: int
    conjectured: int
    tag: str
    exact: int | None
    tight: bool | None


@dataclass
class ConjectureReport:
    entries: list[ConjectureEntry]

    @property
    def all_tight(self) -> bool:
        return all(e.tight for e in self.entries if e.tight is not None)

    @property
    def counterexamples(self) -> list[ConjectureEntry]:
        return [e for e in self.entries if e.tight is False]

    @property
    def unverified(self) -> list[int]:
        return [e.n for e in self.entries if e.tight is None]


def verify_conjecture(
    n_max: int, budget: float | None = None, threads: int = 1, n_min: int = 2
) -> ConjectureReport:
    """Compare exact I(n, 2) against the best construction bound for n <= n_max.

    Each n is recomputed from scratch (prime-power factors by clique search);
    budget expiry marks the entry unverified instead of failing the run.
    """
    from .cliquegraph import I_of

    entries = []
    for n in range(n_min, n_max + 1):
        conj, tag = conjectured_I2_tag(n)
        try:
            exact = I_of(n, 2, budget=budget, threads=threads)
            entries.append(ConjectureEntry(n, conj, tag, exact, exact == conj))
        except SearchTimeout:
            entries.append(ConjectureEntry(n, conj, tag, None, None))
    return ConjectureReport(entries)
