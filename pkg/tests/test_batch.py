import numpy as np
import pytest

from zagreb_walks import batch
from zagreb_walks.graphs import (
    classify,
    degree_sequence,
    degree_sum_sequence,
    is_connected,
    is_degree_balanced,
)
from zagreb_walks.indices import zagreb
from zagreb_walks.orderings import ordering_relation
from zagreb_walks.search import structure_from_code
from zagreb_walks.walks import walk_profiles


def all_codes(n, directed):
    return np.arange(1 << batch.pair_count(n, directed), dtype=np.int64)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_undirected_flags_match_classify(n):
    codes = all_codes(n, False)
    flags = batch.class_flags(batch.adjacency_block(codes, n, False), False)
    for i, code in enumerate(codes.tolist()):
        expect = classify(structure_from_code(code, n, False))
        for name in ("connected", "tree", "forest", "bipartite", "chemical", "regular",
                     "complete_bipartite"):
            assert bool(flags[name][i]) == getattr(expect, name), (name, code)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_directed_flags(n):
    codes = all_codes(n, True)
    flags = batch.class_flags(batch.adjacency_block(codes, n, True), True)
    for i, code in enumerate(codes.tolist()):
        d = structure_from_code(code, n, True)
        assert bool(flags["connected"][i]) == is_connected(d)
        assert bool(flags["degree_balanced"][i]) == is_degree_balanced(d)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_forest_codes_are_exactly_the_forests(n):
    codes = batch.forest_codes(n)
    assert np.all(np.diff(codes) > 0)
    if n <= 6:
        every = all_codes(n, False)
        flags = batch.class_flags(batch.adjacency_block(every, n, False), False)
        assert np.array_equal(codes, every[flags["forest"]])
    # labeled forest counts 1, 2, 7, 38, 291, 2932, 36961
    assert len(codes) == [1, 2, 7, 38, 291, 2932, 36961][n - 1]


def test_acyclic_fast_path_agrees():
    codes = batch.forest_codes(6)
    a = batch.adjacency_block(codes, 6, False)
    full, fast = batch.class_flags(a, False), batch.class_flags(a, False, acyclic=True)
    for name in full:
        assert np.array_equal(full[name], fast[name]), name


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_zagreb_block_matches_scalar(n):
    codes = all_codes(n, False)
    z = batch.zagreb_block(batch.adjacency_block(codes, n, False))
    for i, code in enumerate(codes.tolist()):
        g = structure_from_code(code, n, False)
        v = zagreb(g)
        assert (z["m1"][i], z["m2"][i], z["m"][i]) == (v.m1, v.m2, v.m)
        o = ordering_relation(degree_sequence(g), degree_sum_sequence(g))
        assert (z["similarly"][i], z["conversely"][i]) == (o.similarly, o.conversely)


@pytest.mark.parametrize("directed", [False, True])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_walk_vectors_match_scalar(n, directed):
    codes = all_codes(n, directed)
    s_mat, e_mat = batch.walk_vectors(batch.adjacency_block(codes, n, directed), 6)
    s_edge, e_edge = batch.walk_vectors_by_edges(codes, n, directed, 6)
    for i, code in enumerate(codes.tolist()):
        profiles = walk_profiles(structure_from_code(code, n, directed), 6)
        for k, p in enumerate(profiles):
            assert tuple(s_mat[k][i]) == tuple(s_edge[k][i]) == p.starting
            assert tuple(e_mat[k][i]) == tuple(e_edge[k][i]) == p.ending


def test_object_fallback_is_exact():
    assert batch.walk_dtype(5, 8) is np.int64
    assert batch.walk_dtype(9, 40) is object
    codes = np.array([(1 << batch.pair_count(4, False)) - 1], dtype=np.int64)  # K4
    a = batch.adjacency_block(codes, 4, False, dtype=object)
    starting, _ = batch.walk_vectors(a, 40)
    s_edge, _ = batch.walk_vectors_by_edges(codes, 4, False, 40, dtype=object)
    assert starting[40][0, 0] == s_edge[40][0, 0] == 3**40


def test_popcount():
    codes = np.array([0, 1, 3, 7, 1 << 35, (1 << 36) - 1], dtype=np.int64)
    assert batch.popcount(codes).tolist() == [0, 1, 2, 3, 1, 36]
