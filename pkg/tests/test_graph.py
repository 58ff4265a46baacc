"""Graph construction and exact invariants against the documented results."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcdpairs.graph import (
    ExactSearchBoundError,
    SearchBounds,
    analyze,
    build,
    chromatic_number,
    clique_construction,
    domination_number,
    embedding_check,
    export_dot,
    graph_from_json_dict,
    greedy_coloring,
    hamiltonian_cycle,
    hamiltonian_path,
    has_triangle,
    is_connected,
    is_planar,
    longest_cycle_constructive,
    max_clique,
    star_subgraph,
)
from gcdpairs.numtheory import divisors, primes_below
from gcdpairs.pairs import enumerate_pairs


def test_build_g5_matches_figure():
    g = build(5)
    assert g.sorted_edges() == [(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
    assert g.loops == frozenset({1})


def test_build_g1_and_g6():
    g1 = build(1)
    assert (g1.n, g1.simple_edges, g1.loops) == (1, frozenset(), frozenset())
    g6 = build(6)
    assert len(g6.simple_edges) == 13
    assert g6.loops == frozenset({1, 2, 3})


@given(st.integers(1, 200))
@settings(max_examples=40)
def test_build_matches_pair_set(n):
    g = build(n)
    pairs = set(enumerate_pairs(n).pairs)
    assert {(a, b) for a, b in g.simple_edges} == {(a, b) for a, b in pairs if a != b}
    assert g.loops == {a for a, b in pairs if a == b}
    assert g.loops == {a for a in range(1, n) if n % a == 0}


@given(st.integers(1, 200))
@settings(max_examples=60)
def test_connected_everywhere(n):
    assert is_connected(build(n))


def test_star_examples():
    w6 = star_subgraph(build(6))
    assert (w6.center, w6.leaves) == (1, frozenset({0, 2, 3, 4, 5}))
    w2 = star_subgraph(build(2))
    assert (w2.center, w2.leaves) == (1, frozenset({0}))
    assert len(star_subgraph(build(9)).leaves) == 8
    with pytest.raises(ValueError):
        star_subgraph(build(1))


def test_embedding_examples():
    assert embedding_check(3, 6) == (True, [])
    assert embedding_check(7, 7) == (True, [])
    assert embedding_check(5, 20) == (True, [])
    with pytest.raises(ValueError):
        embedding_check(4, 6)


@given(st.integers(1, 150), st.data())
@settings(max_examples=40)
def test_embedding_for_every_divisor(n, data):
    m = data.draw(st.sampled_from(divisors(n)))
    ok, missing = embedding_check(m, n)
    assert ok and missing == []


def test_domination_examples():
    assert domination_number(build(6)) == (1, frozenset({1}))
    assert domination_number(build(2)) == (1, frozenset({1}))
    assert domination_number(build(12)) == (1, frozenset({1}))
    with pytest.raises(ValueError):
        domination_number(build(1))


def test_triangle_examples():
    assert has_triangle(build(3)) is None
    assert has_triangle(build(2)) is None
    four = has_triangle(build(4))
    assert four is not None and four.vertices == (1, 2, 3) and four.closed
    ten = has_triangle(build(10))
    assert ten is not None and ten.vertices == (1, 2, 3)


@given(st.integers(1, 200))
@settings(max_examples=60)
def test_triangle_iff_n_at_least_4(n):
    assert (has_triangle(build(n)) is not None) == (n >= 4)


def test_hamiltonian_path_examples():
    assert hamiltonian_path(build(7)).vertices == (0, 1, 2, 3, 4, 5, 6)
    assert hamiltonian_path(build(2)).vertices == (0, 1)
    assert hamiltonian_path(build(15)).vertices == tuple(range(15))
    with pytest.raises(ValueError):
        hamiltonian_path(build(1))


def test_hamiltonian_cycle_examples():
    six = hamiltonian_cycle(build(6))
    assert six.cycle is not None and six.cycle.vertices == (0, 2, 3, 4, 5, 1)
    seven = hamiltonian_cycle(build(7))
    assert seven.cycle is None
    assert seven.obstruction == frozenset({0, 2, 4, 6})
    eight = hamiltonian_cycle(build(8))
    assert eight.cycle is not None and eight.cycle.vertices == (0, 2, 3, 4, 5, 6, 7, 1)
    two = hamiltonian_cycle(build(2))
    assert two.cycle is None and two.obstruction is None


@given(st.integers(2, 200))
@settings(max_examples=60)
def test_hamiltonian_cycle_parity(n):
    result = hamiltonian_cycle(build(n))
    if n > 2 and n % 2 == 0:
        assert result.cycle is not None and result.cycle.closed
        assert sorted(result.cycle.vertices) == list(range(n))
    else:
        assert result.cycle is None
        if n % 2 == 1:
            assert result.obstruction is not None
            assert len(result.obstruction) == (n + 1) // 2


def test_longest_cycle_examples():
    seven = longest_cycle_constructive(build(7))
    assert seven.vertices == (1, 2, 3, 4, 5, 6) and seven.closed
    assert longest_cycle_constructive(build(5)).vertices == (1, 2, 3, 4)
    assert len(longest_cycle_constructive(build(9)).vertices) == 8
    for bad in (4, 3):
        with pytest.raises(ValueError):
            longest_cycle_constructive(build(bad))


def test_max_clique_examples():
    assert max_clique(build(6)).sorted_vertices() == (1, 2, 3, 4, 5)
    seven = max_clique(build(7))
    assert len(seven.vertices) == 4
    eight = max_clique(build(8))
    assert eight.sorted_vertices() == (1, 2, 3, 4, 5, 7)
    assert eight.maximal and eight.maximum


def test_max_clique_bound_error():
    with pytest.raises(ExactSearchBoundError):
        max_clique(build(65))
    tight = SearchBounds(clique_exact=10, chromatic_exact=10)
    with pytest.raises(ExactSearchBoundError):
        max_clique(build(11), tight)


def test_max_clique_is_lexicographically_smallest():
    # {1,2,4,5,6,7} is also a maximum clique of G_8; the smaller one wins
    assert max_clique(build(8)).sorted_vertices() == (1, 2, 3, 4, 5, 7)
    # both {0,1,2} and {1,2,3} are maximum in G_4
    assert max_clique(build(4)).sorted_vertices() == (0, 1, 2)


def test_clique_construction_examples():
    eight = clique_construction(8)
    assert sorted(eight.vertices) == [1, 2, 3, 4, 5, 7]
    assert eight.maximal and not eight.maximum
    two = clique_construction(2)
    assert sorted(two.vertices) == [0, 1]
    six = clique_construction(6)
    assert sorted(six.vertices) == [1, 2, 3, 4, 5]
    assert len(six.vertices) == 5  # m + k + 2 with m = 1, k = 2


def test_clique_construction_two_prime_product_keeps_one_power():
    # q > p^2 here, so only p^2 from the advertised power chain survives
    twenty_two = clique_construction(22)
    assert sorted(twenty_two.vertices) == [1, 2, 3, 4, 5, 7, 11, 13, 17, 19]
    assert twenty_two.maximal


@given(st.integers(2, 40))
@settings(max_examples=40)
def test_clique_construction_valid_and_maximal(n):
    witness = clique_construction(n)
    members = sorted(witness.vertices)
    from math import gcd

    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            g = gcd(a, b)
            assert g > 0 and n % g == 0
    assert witness.maximal
    assert len(max_clique(build(n)).vertices) >= len(primes_below(n)) + 1


def test_chromatic_examples():
    expected = {2: 2, 3: 2, 4: 3, 5: 3, 6: 5, 7: 4, 8: 6}
    for n, chi in expected.items():
        witness = chromatic_number(build(n))
        assert witness.color_count == chi, n
        assert witness.exact


def test_chromatic_witness_is_proper_and_canonical():
    g = build(12)
    witness = chromatic_number(g)
    for a, b in g.simple_edges:
        assert witness.colors[a] != witness.colors[b]
    assert witness.colors[0] == 0
    assert len(set(witness.colors.values())) == witness.color_count
    assert witness.color_count >= len(max_clique(g).vertices)


def test_chromatic_bound_error_and_greedy_mode():
    with pytest.raises(ExactSearchBoundError):
        chromatic_number(build(17))
    upper = greedy_coloring(build(17))
    assert not upper.exact
    g = build(17)
    for a, b in g.simple_edges:
        assert upper.colors[a] != upper.colors[b]


def test_planarity_examples():
    assert is_planar(build(5))
    assert not is_planar(build(6))
    assert is_planar(build(7))
    assert not is_planar(build(12))


def test_planarity_threshold_to_30():
    for n in range(2, 31):
        assert is_planar(build(n)) == (n <= 7 and n != 6), n


def test_k5_threshold_to_60():
    for n in range(2, 61):
        has_k5 = (
            len(max_clique(build(n)).vertices) >= 5
        )
        assert has_k5 == (n >= 6 and n != 7), n


def test_export_dot_goldens():
    assert export_dot(build(2)) == "graph G2 {\n1 -- 1;\n0 -- 1;\n}\n"
    assert export_dot(build(1)) == "graph G1 {\n}\n"
    g5 = export_dot(build(5))
    lines = g5.splitlines()
    assert lines[0] == "graph G5 {" and lines[-1] == "}"
    assert sum("--" in line for line in lines) == 7  # 6 edges + 1 loop


def test_export_dot_distinct_and_stable():
    texts = {export_dot(build(n)) for n in range(1, 40)}
    assert len(texts) == 39
    assert export_dot(build(9)) == export_dot(build(9))


def test_graph_json_round_trip():
    g = build(10)
    invariants, _ = analyze(g)
    payload = g.to_json_dict(invariants)
    rebuilt = graph_from_json_dict(payload)
    assert rebuilt == g
    assert rebuilt.to_json_dict(invariants) == payload


def test_analyze_reports():
    invariants, notes = analyze(build(6))
    assert invariants == {
        "connected": True,
        "gamma": 1,
        "triangle": True,
        "traceable": True,
        "hamiltonian": True,
        "clique_number": 5,
        "chromatic_number": 5,
        "planar": False,
    }
    assert notes == []
    invariants7, _ = analyze(build(7))
    assert invariants7["chromatic_number"] == 4
    assert invariants7["planar"] and not invariants7["hamiltonian"]


def test_analyze_outside_bounds_gives_null_with_note():
    invariants, notes = analyze(build(20))
    assert invariants["chromatic_number"] is None
    assert invariants["clique_number"] == 12  # within the clique bound
    assert any("chromatic_number" in note for note in notes)
    invariants1, _ = analyze(build(1))
    assert invariants1["traceable"] and not invariants1["hamiltonian"]
