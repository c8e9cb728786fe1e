import random
from itertools import combinations

import pytest

from ringpoints.cliquegraph import I_of
from ringpoints.errors import InvalidInputError
from ringpoints.geometry import is_cocircular, is_collinear, is_concyclic, is_integral, is_set_collinear
from ringpoints.orderly import (
    GenerationStats,
    brute_canonical_key,
    compare,
    delta_matrix,
    dump_level,
    edge_classes,
    extend_level,
    gamma_glue,
    generate_levels,
    is_canonical,
    is_semi_canonical,
    matrix_key,
    max_cardinality,
    max_cardinality_witness,
    seed_L3,
)


def test_edge_classes_small():
    assert edge_classes(2).classes == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert edge_classes(3).classes == ((0, 0), (0, 1), (1, 0))  # (1,1) has length 2, not a square
    for n in (1, 2, 5, 8):
        assert edge_classes(n).classes[0] == (0, 0)


def test_edge_class_spheres():
    table = edge_classes(5)
    for i, vec in enumerate(table.classes):
        for p in table.spheres[i]:
            from ringpoints.geometry import delta

            assert delta(p, (0, 0), 5) == vec


def random_matrix(rng, r, classes=4):
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            rows[i][j] = rows[j][i] = rng.randrange(1, classes)
    return tuple(tuple(row) for row in rows)


def test_compare():
    rng = random.Random(0)
    m1 = random_matrix(rng, 4)
    assert compare(m1, m1) == 0
    # spec example: upper entries read (d01; d02, d12)
    a = ((0, 1, 2), (1, 0, 2), (2, 2, 0))
    b = ((0, 1, 2), (1, 0, 1), (2, 1, 0))
    assert compare(a, b) == 1
    with pytest.raises(InvalidInputError):
        compare(a, random_matrix(rng, 4))


def test_compare_transitivity():
    rng = random.Random(1)
    for _ in range(100):
        ms = [random_matrix(rng, 4) for _ in range(3)]
        ms.sort(key=matrix_key)
        assert compare(ms[0], ms[1]) <= 0
        assert compare(ms[1], ms[2]) <= 0
        assert compare(ms[0], ms[2]) <= 0


def test_canonical_small_orders():
    # single point and pairs have singleton orbits
    assert is_canonical(((0,),))
    assert is_canonical(((0, 3), (3, 0)))
    assert is_semi_canonical(((0, 3), (3, 0)))


def test_canonical_vs_brute_force():
    rng = random.Random(2)
    for r in (3, 4, 5):
        for _ in range(120):
            m = random_matrix(rng, r)
            assert is_canonical(m) == (matrix_key(m) == brute_canonical_key(m))


def test_exactly_one_canonical_per_orbit():
    from itertools import permutations

    rng = random.Random(3)
    for _ in range(40):
        m = random_matrix(rng, 3)
        orbit = {
            tuple(tuple(m[p[i]][p[j]] for j in range(3)) for i in range(3))
            for p in permutations(range(3))
        }
        assert sum(1 for o in orbit if is_canonical(o)) == 1


def test_canonical_implies_semi_canonical():
    rng = random.Random(4)
    for r in (3, 4, 5, 6):
        for _ in range(150):
            m = random_matrix(rng, r)
            if is_canonical(m):
                assert is_semi_canonical(m)


def test_delta_matrix():
    table = edge_classes(5)
    pts = ((0, 0), (1, 0), (0, 2))
    m = delta_matrix(pts, 5, table)
    assert m[0][0] == 0 and m[0][1] >= 1 and m[1][2] >= 1
    assert m == tuple(tuple(row) for row in zip(*m))  # symmetric
    with pytest.raises(InvalidInputError):
        delta_matrix(((0, 0), (1, 1)), 3, edge_classes(3))  # non-integral pair


def brute_seed_classes(n, mode):
    """All 3-point integral classes by exhaustive subsets, up to S_3-orbit of the matrix."""
    pts = [(x, y) for x in range(n) for y in range(n)]
    table = edge_classes(n)
    keys = set()
    for sub in combinations(pts, 3):
        if not all(
            is_integral(sub[i], sub[j], n) for i in range(3) for j in range(i + 1, 3)
        ):
            continue
        if mode == "semi-general" and is_collinear(*sub, n):
            continue
        keys.add(brute_canonical_key(delta_matrix(sub, n, table)))
    return keys


def to_group_canonical(m, table):
    """Reference canonical key under permutations and class relabelings."""
    from itertools import permutations

    r = len(m)
    best = None
    sigmas = list(table.relabelings) + [tuple(range(len(table.classes)))]
    for sigma in sigmas:
        relabeled = tuple(tuple(sigma[e] for e in row) for row in m)
        for p in permutations(range(r)):
            k = matrix_key(tuple(tuple(relabeled[p[i]][p[j]] for j in range(r)) for i in range(r)))
            if best is None or k > best:
                best = k
    return best


def test_seed_L3_complete_against_brute_force():
    for n in (2, 3, 4, 5):
        table = edge_classes(n)
        for mode in ("any", "semi-general"):
            brute = {
                to_group_canonical_from_key(k, table)
                for k in brute_seed_classes(n, mode)
            }
            seeded = {to_group_canonical(rec.matrix, table) for rec in seed_L3(n, mode, table)}
            assert brute == seeded, (n, mode)


def to_group_canonical_from_key(key, table):
    m = ((0, key[0], key[1]), (key[0], 0, key[2]), (key[1], key[2], 0))
    return to_group_canonical(m, table)


def test_seed_L3_examples():
    assert seed_L3(1, "any") == []
    assert seed_L3(2, "semi-general")  # nonempty: the published maximum is 4 >= 3
    for rec in seed_L3(5, "any"):
        assert is_semi_canonical(rec.matrix)
        w = rec.witness
        assert all(
            is_integral(w[i], w[j], 5) for i in range(3) for j in range(i + 1, 3)
        )


def test_gamma_glue_contract():
    table = edge_classes(5)
    level = seed_L3(5, "any", table)
    stats = GenerationStats()
    produced = 0
    for x1 in level:
        if not x1.canonical:
            continue
        for x2 in level:
            from ringpoints.orderly import reduced_key

            if reduced_key(x2.matrix) != reduced_key(x1.matrix) or x2.key > x1.key:
                continue
            for y in gamma_glue(x1, x2, 5, table, "any", stats):
                produced += 1
                w = y.witness
                assert len(set(w)) == 4  # coinciding placements discarded
                for i in range(4):
                    for j in range(i + 1, 4):
                        assert is_integral(w[i], w[j], 5)
    assert produced > 0
    # over a prime field two distance spheres meet in at most two points
    assert stats.glue_wide_results == 0


def test_gamma_glue_precondition():
    table = edge_classes(5)
    level = seed_L3(5, "any", table)
    from ringpoints.orderly import reduced_key

    x1 = level[-1]
    other = next(
        (x for x in level if reduced_key(x.matrix) != reduced_key(x1.matrix)), None
    )
    if other is not None:
        with pytest.raises(InvalidInputError):
            gamma_glue(x1, other, 5, table)


def test_extend_level_completeness_n4():
    """Every integral 4-subset of Z_4^2 has an equivalent class in the generated level."""
    n = 4
    table = edge_classes(n)
    level4 = extend_level(seed_L3(n, "any", table), n, "any", table)
    generated = {to_group_canonical(rec.matrix, table) for rec in level4}
    pts = [(x, y) for x in range(n) for y in range(n)]
    brute = set()
    for sub in combinations(pts, 4):
        if all(is_integral(a, b, n) for a, b in combinations(sub, 2)):
            brute.add(to_group_canonical(delta_matrix(sub, n, table), table))
    assert generated == brute


def test_level_records_isomorph_free():
    # no two canonical records of one level share a permutation orbit
    for n in (4, 5, 6):
        table = edge_classes(n)
        levels, _ = generate_levels(n, "semi-general", retain_all=True)
        for recs in levels.values():
            keys = [brute_canonical_key(r.matrix) for r in recs if r.canonical and len(r.matrix) <= 6]
            assert len(keys) == len(set(keys))


def test_filter_soundness_rescan():
    for n in (6, 8, 9):
        levels, _ = generate_levels(n, "semi-general", retain_all=True)
        for recs in levels.values():
            for rec in recs:
                for tri in combinations(rec.witness, 3):
                    assert not is_collinear(*tri, n)
    for n in (6, 8, 9, 10):
        levels, _ = generate_levels(n, "general", retain_all=True)
        for recs in levels.values():
            for rec in recs:
                for tri in combinations(rec.witness, 3):
                    assert not is_collinear(*tri, n)
                for quad in combinations(rec.witness, 4):
                    assert not is_concyclic(*quad, n)
                    assert not is_cocircular(*quad, n)


def test_generation_canonical_matrices_semi_canonical():
    # empirical check of the claim that canonical implies semi-canonical,
    # on the matrices the generation actually produces
    for n in (4, 6, 8):
        levels, _ = generate_levels(n, "any", retain_all=True, max_level=5)
        for recs in levels.values():
            for rec in recs:
                assert is_semi_canonical(rec.matrix)
                if rec.canonical:
                    assert is_canonical(rec.matrix)


def test_max_cardinality_values():
    assert max_cardinality(7, "general") == 3  # levels are empty beyond the triangles
    assert max_cardinality(8, "semi-general") == 6
    assert max_cardinality(30, "semi-general") == 6
    assert max_cardinality(31, "semi-general") == 16
    assert max_cardinality(13, "general") == 5
    assert max_cardinality(18, "general") == 8
    assert max_cardinality(1, "any") == 1
    assert max_cardinality(3, "semi-general") == 2  # no non-collinear triangle exists


def test_max_cardinality_budget():
    from ringpoints.errors import SearchTimeout

    with pytest.raises(SearchTimeout) as exc_info:
        max_cardinality(29, "semi-general", budget=0.02)
    assert exc_info.value.lower_bound >= 3


def test_max_cardinality_matches_clique_value():
    for n in range(2, 9):
        assert max_cardinality(n, "any") == I_of(n, 2)


def test_max_cardinality_witness_valid():
    for n, mode in ((8, "semi-general"), (10, "general"), (5, "any")):
        value, witness = max_cardinality_witness(n, mode)
        assert len(witness) == value
        assert len(set(witness)) == value
        for a, b in combinations(witness, 2):
            assert is_integral(a, b, n)
        if mode in ("semi-general", "general"):
            for tri in combinations(witness, 3):
                assert not is_collinear(*tri, n)
        if mode == "general":
            for quad in combinations(witness, 4):
                assert not is_cocircular(*quad, n)


def brute_position_max(n, mode):
    """Direct branch-and-bound over point sets; independent of the Delta machinery."""
    pts = [(x, y) for x in range(n) for y in range(n)]
    best = [1]

    def ok(S, q):
        for p in S:
            if not is_integral(p, q, n):
                return False
        for a, b in combinations(S, 2):
            if is_collinear(a, b, q, n):
                return False
        if mode == "general":
            for a, b, c in combinations(S, 3):
                if is_cocircular(a, b, c, q, n):
                    return False
        return True

    def rec(S, cands):
        if len(S) > best[0]:
            best[0] = len(S)
        for i, q in enumerate(cands):
            if len(S) + len(cands) - i <= best[0]:
                return
            if ok(S, q):
                rec(S + [q], [c for c in cands[i + 1 :] if is_integral(c, q, n)])

    rec([(0, 0)], [p for p in pts if p != (0, 0) and is_integral(p, (0, 0), n)])
    return best[0]


def test_against_independent_brute_force():
    for n in range(2, 11):
        assert max_cardinality(n, "semi-general") == brute_position_max(n, "semi-general")
        assert max_cardinality(n, "general") == brute_position_max(n, "general")


def test_dfs_agrees_with_level_engine():
    # the level-by-level generation and the pruned depth-first walk are
    # independent routes to the same maximum
    for n in range(2, 15):
        for mode in ("semi-general", "general"):
            levels, stats = generate_levels(n, mode)
            level_max = max(stats.level_sizes) if stats.level_sizes else 2
            assert max_cardinality(n, mode) == level_max, (n, mode)


def test_semi_general_prime_theorem():
    for p in (7, 11, 19, 23):
        assert max_cardinality(p, "semi-general") == (p + 1) // 2
    for p in (13, 17, 29):
        val = max_cardinality(p, "semi-general")
        assert (p - 1) // 2 <= val <= (p + 3) // 2


def test_collinear_maximality_at_primes():
    # every unfiltered maximum-size point set at n = p in {7, 11} is collinear
    for p in (7, 11):
        levels, _ = generate_levels(p, "any", retain_all=True)
        assert max(levels) == p
        for rec in levels[p]:
            assert is_set_collinear(list(rec.witness), p)


def test_dump_level_format():
    recs = seed_L3(5, "any")
    text = dump_level(recs)
    lines = text.splitlines()
    assert len(lines) == len(recs)
    first = lines[0].split()
    assert first[0] == "3"
    assert len(first) == 1 + 3 + 3  # r, three class indices, three coordinate pairs
    assert "," in first[4]
