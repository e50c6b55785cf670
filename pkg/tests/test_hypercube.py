import itertools

import pytest

from rainbowcube.errors import UsageError
from rainbowcube.hypercube import (
    Edge,
    build_cycle_same_level,
    canonical_cycle,
    complement_edge,
    count_level_edges,
    cycle_problem,
    cycles_containing_pair,
    edge_between,
    edge_level,
    edges_of_cycle,
    enumerate_cycles,
    enumerate_edges,
)

import oracles


def test_edge_level_examples():
    assert edge_level(Edge(0, 3)) == 1
    assert edge_level(Edge(0b10010, 1)) == 3  # bottom {2, 5}, direction 1


def test_edge_rejects_dir_bit_set():
    with pytest.raises(UsageError):
        Edge(0b1, 1)


def test_edge_between():
    assert edge_between(0b101, 0b111) == Edge(0b101, 2)
    assert edge_between(0b111, 0b101) == Edge(0b101, 2)
    with pytest.raises(UsageError):
        edge_between(0b101, 0b110)
    with pytest.raises(UsageError):
        edge_between(3, 3)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (4, 32), (5, 80)])
def test_enumerate_edges_count(n, count):
    edges = list(enumerate_edges(n))
    assert len(edges) == count
    assert len(set(edges)) == count
    assert edges == sorted(edges)


def test_enumerate_edges_first_for_q1():
    assert list(enumerate_edges(1)) == [Edge(0, 1)]


@pytest.mark.parametrize(
    "n,level,expected", [(4, 1, 4), (9, 2, 72), (5, 5, 5), (6, 3, 60)]
)
def test_count_level_edges(n, level, expected):
    assert count_level_edges(n, level) == expected


def test_count_level_edges_matches_scan():
    for n in (4, 5):
        for level in range(1, n + 1):
            scanned = sum(1 for e in enumerate_edges(n) if edge_level(e) == level)
            assert count_level_edges(n, level) == scanned


def test_count_level_edges_range_error():
    with pytest.raises(UsageError):
        count_level_edges(4, 5)
    with pytest.raises(UsageError):
        count_level_edges(4, 0)


class TestEnumerateCycles:
    def test_q2_single_square(self):
        assert list(enumerate_cycles(2, 4)) == [(0, 1, 3, 2)]

    def test_q3_six_cycles(self):
        assert sum(1 for _ in enumerate_cycles(3, 6)) == 16

    def test_odd_length_empty(self):
        assert list(enumerate_cycles(3, 5)) == []
        assert list(enumerate_cycles(3, 7)) == []

    def test_out_of_range_errors(self):
        with pytest.raises(UsageError):
            enumerate_cycles(3, 2)
        with pytest.raises(UsageError):
            enumerate_cycles(3, 10)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_six_cycle_formula(self, n):
        # every 6-cycle spans exactly 3 directions
        expected = 16 * len(list(itertools.combinations(range(n), 3))) * 2 ** (n - 3)
        assert sum(1 for _ in enumerate_cycles(n, 6)) == expected

    @pytest.mark.parametrize("n,k", [(3, 4), (3, 6), (3, 8), (4, 4), (4, 6), (4, 8)])
    def test_against_networkx(self, n, k):
        assert sum(1 for _ in enumerate_cycles(n, k)) == oracles.count_cycles_nx(n, k)

    def test_against_permutation_scan(self):
        mine = set(enumerate_cycles(3, 6))
        assert mine == oracles.cycles_by_permutation(3, 6)

    @pytest.mark.parametrize("n,k", [(3, 6), (4, 6), (4, 8), (3, 8)])
    def test_all_valid_canonical_unique(self, n, k):
        seen = set()
        for cyc in enumerate_cycles(n, k):
            assert cycle_problem(n, cyc) is None
            assert cyc not in seen
            seen.add(cyc)


def test_canonical_cycle_rotation_reflection():
    cyc = (0, 1, 3, 7, 6, 4)
    for shift in range(6):
        rotated = cyc[shift:] + cyc[:shift]
        assert canonical_cycle(rotated) == cyc
        assert canonical_cycle(rotated[::-1]) == cyc


def test_cycle_problem_catches_breakage():
    assert cycle_problem(3, (0, 1, 3, 2)) is None
    assert cycle_problem(3, (0, 1, 3)) is not None  # odd
    assert cycle_problem(3, (0, 1, 3, 5)) is not None  # 5 not adjacent to 0
    assert cycle_problem(3, (0, 1, 0, 1)) is not None  # repeats
    assert cycle_problem(3, (1, 3, 2, 0)) is not None  # not canonical


class TestCyclesContainingPair:
    def test_q3_witness(self):
        found, witness = cycles_containing_pair(3, 6, Edge(0, 1), Edge(0b100, 2))
        assert found
        assert cycle_problem(3, witness) is None
        edges = set(edges_of_cycle(witness))
        assert Edge(0, 1) in edges and Edge(0b100, 2) in edges

    def test_witness_is_canonical_minimum(self):
        e1, e2 = Edge(0, 1), Edge(0, 2)
        found, witness = cycles_containing_pair(4, 6, e1, e2)
        assert found
        holding = [
            c
            for c in enumerate_cycles(4, 6)
            if {e1, e2} <= set(edges_of_cycle(c))
        ]
        assert witness == min(holding)

    @pytest.mark.parametrize("k", [4, 6])
    def test_matches_enumeration_for_all_q3_pairs(self, k):
        cycles = list(enumerate_cycles(3, k))
        for e1, e2 in itertools.combinations(enumerate_edges(3), 2):
            holding = [c for c in cycles if {e1, e2} <= set(edges_of_cycle(c))]
            found, witness = cycles_containing_pair(3, k, e1, e2)
            assert found == bool(holding)
            assert witness == (min(holding) if holding else None)

    def test_c4_levels_too_far(self):
        # edges of any 4-cycle sit on two consecutive levels
        found, witness = cycles_containing_pair(4, 4, Edge(0, 1), Edge(0b110, 1))
        assert not found and witness is None

    def test_same_edge_rejected(self):
        with pytest.raises(UsageError):
            cycles_containing_pair(3, 6, Edge(0, 1), Edge(0, 1))


class TestBuildCycleSameLevel:
    def test_shared_bottom_golden(self):
        cyc = build_cycle_same_level(7, 6, Edge(0, 1), Edge(0, 2))
        assert cyc == (0, 0b1, 0b101, 0b111, 0b110, 0b10)

    def test_argument_order_is_irrelevant(self):
        a = build_cycle_same_level(7, 6, Edge(0, 1), Edge(0, 2))
        b = build_cycle_same_level(7, 6, Edge(0, 2), Edge(0, 1))
        assert a == b

    def test_shared_top_confirmed_by_search(self):
        e1, e2 = Edge(0b10, 1), Edge(0b01, 2)  # tops both {1,2}
        cyc = build_cycle_same_level(7, 6, e1, e2)
        edges = set(edges_of_cycle(cyc))
        assert e1 in edges and e2 in edges
        found, _ = cycles_containing_pair(7, 6, e1, e2)
        assert found

    @pytest.mark.parametrize("k", [4, 6])
    def test_exhaustive_incident_pairs_q5_q7(self, k):
        n = k + 1
        by_bottom = {}
        by_top = {}
        for e in enumerate_edges(n):
            by_bottom.setdefault(e.bottom, []).append(e)
            by_top.setdefault(e.top, []).append(e)
        pairs = [
            p
            for group in itertools.chain(by_bottom.values(), by_top.values())
            for p in itertools.combinations(group, 2)
        ]
        assert pairs
        for e1, e2 in pairs:
            cyc = build_cycle_same_level(n, k, e1, e2)
            assert len(cyc) == k
            assert cycle_problem(n, cyc) is None
            edges = set(edges_of_cycle(cyc))
            assert e1 in edges and e2 in edges

    def test_disjoint_pairs_level_two_q9(self):
        level2 = [e for e in enumerate_edges(9) if edge_level(e) == 2]
        sample = [
            (e1, e2)
            for e1, e2 in itertools.combinations(level2, 2)
            if not {e1.bottom, e1.top} & {e2.bottom, e2.top}
        ][::37]
        assert sample
        for e1, e2 in sample:
            cyc = build_cycle_same_level(9, 8, e1, e2)
            assert len(cyc) == 8
            assert cycle_problem(9, cyc) is None
            edges = set(edges_of_cycle(cyc))
            assert e1 in edges and e2 in edges

    def test_disjoint_above_quarter_level_pads_through_common(self):
        e1, e2 = Edge(0b0011, 5), Edge(0b0101, 6)  # level 3 in Q_13, k=12
        cyc = build_cycle_same_level(13, 12, e1, e2)
        assert cycle_problem(13, cyc) is None
        assert {e1, e2} <= set(edges_of_cycle(cyc))

    def test_disjoint_below_quarter_level_pads_fresh(self):
        e1, e2 = Edge(0b01, 3), Edge(0b10, 4)  # level 2 in Q_13, k=12
        cyc = build_cycle_same_level(13, 12, e1, e2)
        assert cycle_problem(13, cyc) is None
        assert {e1, e2} <= set(edges_of_cycle(cyc))

    def test_top_levels_use_complement_route(self):
        full = (1 << 7) - 1
        v = full ^ 0b11  # five ones
        cyc = build_cycle_same_level(7, 6, Edge(v, 1), Edge(v, 2))
        assert cycle_problem(7, cyc) is None
        e1, e2 = Edge(full ^ 0b1, 1), Edge(full ^ 0b10, 2)  # tops = full
        cyc = build_cycle_same_level(7, 4, e1, e2)
        assert cycle_problem(7, cyc) is None
        assert {e1, e2} <= set(edges_of_cycle(cyc))

    @pytest.mark.parametrize("n,k", [(9, 8), (13, 12)])
    def test_random_pairs_all_levels(self, n, k):
        import random

        rng = random.Random(11 * n + k)
        made = 0
        tries = 0
        while made < 150 and tries < 10000:
            tries += 1
            v = rng.randrange(1 << n)
            free = [d for d in range(1, n + 1) if not v >> (d - 1) & 1]
            if not free:
                continue
            e1 = Edge(v, rng.choice(free))
            ones = edge_level(e1) - 1
            x = sum(1 << b for b in rng.sample(range(n), ones))
            free2 = [d for d in range(1, n + 1) if not x >> (d - 1) & 1]
            if not free2:
                continue
            e2 = Edge(x, rng.choice(free2))
            if e1 == e2:
                continue
            if (
                not {e1.bottom, e1.top} & {e2.bottom, e2.top}
                and (e1.bottom ^ e2.bottom).bit_count() > k // 2 - 2
            ):
                continue
            cyc = build_cycle_same_level(n, k, e1, e2)
            assert cycle_problem(n, cyc) is None
            assert {e1, e2} <= set(edges_of_cycle(cyc))
            made += 1
        assert made == 150

    def test_top_level_disjoint_uses_complement(self):
        e1 = Edge(0b001111111, 9)  # bottoms with seven ones in Q_9
        e2 = Edge(0b010111111, 9)
        cyc = build_cycle_same_level(9, 8, e1, e2)
        assert cycle_problem(9, cyc) is None
        assert {e1, e2} <= set(edges_of_cycle(cyc))

    def test_precondition_errors(self):
        with pytest.raises(UsageError):  # needs n > k
            build_cycle_same_level(6, 6, Edge(0, 1), Edge(0, 2))
        with pytest.raises(UsageError):  # different levels
            build_cycle_same_level(7, 6, Edge(0, 1), Edge(0b1, 2))
        with pytest.raises(UsageError):  # identical edges
            build_cycle_same_level(7, 6, Edge(0, 1), Edge(0, 1))
        with pytest.raises(UsageError):  # disjoint pair too far apart for k=4
            build_cycle_same_level(7, 4, Edge(0b01, 3), Edge(0b10, 4))
        with pytest.raises(UsageError):  # disjoint needs k divisible by 4
            build_cycle_same_level(13, 6, Edge(0b01, 3), Edge(0b10, 4))


def test_complement_edge_roundtrip():
    for e in enumerate_edges(4):
        back = complement_edge(4, complement_edge(4, e))
        assert back == e
