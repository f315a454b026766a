import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagrangian_lab import (
    Hypergraph,
    HypergraphError,
    complete,
    from_json,
    from_text,
    gen_random,
    is_complete_on,
    level,
    loads,
    relabel,
    to_json,
    to_text,
    validate,
    vertex_support,
)


class TestValidate:
    def test_basic_construction(self):
        h = validate(3, [[1, 2], [1, 2, 3]])
        assert h.edge_types == (2, 3)
        assert h.num_edges(2) == 1 and h.num_edges(3) == 1

    def test_duplicate_after_canonicalization(self):
        with pytest.raises(HypergraphError, match="duplicate"):
            validate(3, [[1, 2], [2, 1]])

    def test_vertex_out_of_range(self):
        with pytest.raises(HypergraphError, match="out of range"):
            validate(2, [[1, 3]])

    def test_empty_edge_rejected(self):
        with pytest.raises(HypergraphError, match="empty edge"):
            validate(3, [[]])

    def test_repeated_vertex_rejected(self):
        with pytest.raises(HypergraphError, match="repeated vertex"):
            validate(3, [[1, 1]])

    def test_soft_limits(self):
        with pytest.raises(HypergraphError, match="soft limit"):
            validate(25, [[1, 2]])
        with pytest.raises(HypergraphError, match="soft limit"):
            validate(10, [[1, 2, 3, 4, 5, 6, 7]])
        h = validate(25, [[1, 25]], max_vertices=None)
        assert h.n == 25

    def test_isolated_vertices_allowed(self):
        h = validate(5, [[1, 2]])
        assert h.n == 5


class TestComplete:
    @pytest.mark.parametrize(
        "n,types,count",
        [(3, (1, 2), 6), (4, (2, 3), 10), (5, (1, 2, 3), 25)],
    )
    def test_edge_counts(self, n, types, count):
        assert complete(n, types).num_edges() == count

    def test_max_type_exceeds_n(self):
        with pytest.raises(HypergraphError):
            complete(2, (3,))

    def test_complete_is_complete_everywhere(self):
        for n in range(1, 9):
            for size in range(1, 5):
                for types in itertools.combinations((1, 2, 3, 4), size):
                    if max(types) > n:
                        continue
                    h = complete(n, types)
                    assert validate(h.n, h.edges()) == h
                    assert is_complete_on(h, range(1, n + 1), types)


class TestLevel:
    def test_level_two_of_k4(self):
        h = complete(4, (2, 3))
        lvl = level(h, 2)
        assert lvl.num_edges() == 6 and lvl.edge_types == (2,)
        assert lvl.n == h.n

    def test_empty_level(self):
        assert level(complete(4, (2, 3)), 1).num_edges() == 0

    def test_level_three_singleton(self):
        h = validate(3, [[1, 2], [1, 2, 3]])
        assert level(h, 3).edges() == [(1, 2, 3)]

    def test_reassembly(self):
        h = validate(5, [[1], [1, 2], [2, 3], [1, 2, 3], [3, 4, 5]])
        pieces = [e for r in h.edge_types for e in level(h, r).edges()]
        assert validate(h.n, pieces) == h


class TestVertexSupport:
    def test_partial_support(self):
        h = validate(5, [[1, 2], [1, 3], [2, 3]])
        assert vertex_support(h, 2) == {1, 2, 3}

    def test_empty_level_support(self):
        assert vertex_support(complete(4, (2,)), 3) == frozenset()

    def test_complete_support_is_everything(self):
        h = complete(4, (2, 3))
        assert vertex_support(h, 3) == {1, 2, 3, 4}
        for r in (2, 3):
            assert vertex_support(h, r) == frozenset(range(1, 5))


class TestIsCompleteOn:
    def test_complete_subset(self):
        assert is_complete_on(complete(4, (2, 3)), {1, 2, 3}, (2, 3))

    def test_missing_edge(self):
        h = validate(3, [[1, 3], [2, 3]])
        assert not is_complete_on(h, {1, 2}, (2,))

    def test_vacuous_empty_set(self):
        assert is_complete_on(validate(3, [[1, 2]]), set(), (2,))

    def test_types_larger_than_set_ignored(self):
        h = validate(4, [[1, 2]])
        assert is_complete_on(h, {1, 2}, (2, 3))


def test_relabel_roundtrip():
    h = validate(4, [[1, 2], [2, 3, 4]])
    mapping = {1: 4, 2: 3, 3: 2, 4: 1}
    back = {v: k for k, v in mapping.items()}
    assert relabel(relabel(h, mapping), back) == h
    assert relabel(h, mapping).has_edge([3, 4])


def test_relabel_requires_bijection():
    h = validate(3, [[1, 2]])
    with pytest.raises(HypergraphError):
        relabel(h, {1: 1, 2: 1, 3: 3})


class TestIO:
    def test_json_roundtrip(self):
        h = complete(4, (1, 3))
        assert from_json(to_json(h)) == h

    def test_text_roundtrip(self):
        h = validate(4, [[1], [2, 4], [1, 3, 4]])
        assert from_text(to_text(h)) == h

    def test_text_comments_and_blanks(self):
        text = "4\n# a comment\n1 2\n\n3 4  # trailing\n"
        h = from_text(text)
        assert h.num_edges() == 2 and h.has_edge([3, 4])

    def test_sniffing(self):
        h = complete(3, (2,))
        assert loads(to_json(h)) == h
        assert loads(to_text(h)) == h

    def test_malformed_json(self):
        with pytest.raises(HypergraphError):
            from_json("{not json")
        with pytest.raises(HypergraphError):
            from_json('{"n": 3}')

    def test_malformed_text(self):
        with pytest.raises(HypergraphError):
            from_text("x\n1 2\n")
        with pytest.raises(HypergraphError):
            from_text("")


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_random_graphs_roundtrip_and_reassemble(seed):
    h = gen_random(6, (1, 2, 3), 0.5, seed)
    assert from_json(to_json(h)) == h
    pieces = [e for r in h.edge_types for e in level(h, r).edges()]
    assert validate(h.n, pieces) == h
    for r in h.edge_types:
        assert vertex_support(h, r) <= frozenset(range(1, h.n + 1))


def test_hashable_and_equal():
    a = validate(3, [[1, 2], [1, 2, 3]])
    b = validate(3, [[1, 2, 3], [2, 1]])
    assert a == b and hash(a) == hash(b)
    assert a != validate(3, [[1, 2]])
    assert isinstance(a, Hypergraph)
