import itertools
import math
import os

import pytest

import ordpat as op
from ordpat import FeasibilityError, StructureError

from conftest import all_graphs, all_hypergraphs, perms_of


def spec_perm(*pats):
    return op.PropertySpec(
        "perm", forbidden=tuple(("perm", op.Permutation(p)) for p in pats)
    )


def test_enumerate_perm_examples():
    assert op.count_structures(spec_perm((1, 2, 3)), 3) == 5
    assert op.count_structures(op.PropertySpec("graph"), 2) == 2
    assert op.count_structures(op.PropertySpec("hypergraph"), 3) == 16


def test_unrestricted_counts():
    for n in range(1, 7):
        assert op.count_structures(op.PropertySpec("perm"), n) == math.factorial(n)
        assert op.count_structures(op.PropertySpec("graph"), n) == 2 ** math.comb(n, 2)
    # partitions: Bell numbers
    bell = [1, 1, 2, 5, 15, 52, 203]
    for n in range(1, 7):
        assert op.count_structures(op.PropertySpec("partition"), n) == bell[n]


def test_stream_equals_count_and_validity():
    spec = op.PropertySpec(
        "hypergraph", forbidden=(("perm", op.Permutation([1, 2])),), edge_size_cap=3
    )
    got = list(op.enumerate_structures(spec, 4))
    assert len(got) == op.count_structures(spec, 4)
    assert len(got) == len(set(got))
    for h in got:
        assert op.satisfies_spec(spec, h)


def test_pruned_matches_naive():
    cases = [
        (op.PropertySpec("graph", forbidden=(("perm", op.Permutation([2, 1])),)), 5),
        (
            op.PropertySpec(
                "graph",
                forbidden=(("induced", op.OrderedHypergraph(3, [(1, 2)])),),
            ),
            4,
        ),
        (
            op.PropertySpec(
                "hypergraph",
                forbidden=(
                    ("contain", op.OrderedHypergraph(2, [(1, 2)])),
                ),
            ),
            4,
        ),
        (
            op.PropertySpec(
                "hypergraph",
                forbidden=(("sub", op.make_h_of_pi(op.Permutation([1, 2]))),),
                degree_cap=2,
            ),
            4,
        ),
        (
            op.PropertySpec(
                "hypergraph",
                forbidden=(("class", op.PatternClass([2, 1])),),
                edge_size_cap=2,
            ),
            4,
        ),
        (spec_perm((1, 3, 2), (2, 1, 3)), 5),
        (
            op.PropertySpec(
                "partition",
                forbidden=(("induced", op.Partition(2, [(1, 2)])),),
            ),
            5,
        ),
        (
            op.PropertySpec(
                "partition", forbidden=(("perm", op.Permutation([1, 2])),)
            ),
            5,
        ),
        (op.PropertySpec("graph", edge_count_cap=lambda n: n), 4),
    ]
    for spec, n in cases:
        pruned = list(op.enumerate_structures(spec, n))
        naive = list(op.enumerate_structures(spec, n, method="naive"))
        assert pruned == naive, spec


def test_speed_examples():
    assert op.speed_table(spec_perm((2, 1)), 6).counts == (1, 1, 1, 1, 1, 1)
    assert op.g_family_speed(6) == (1, 2, 4, 9, 21, 52)
    # co-matchings filter equals telephone numbers
    for n in range(1, 6):
        cnt = sum(
            1
            for g in op.enumerate_structures(op.PropertySpec("graph"), n)
            if op.is_comatching(g)
        )
        assert cnt == op.telephone(n)


def test_degree_capped_speed_jump():
    # with a degree cap alone the speed is the telephone numbers; forbidding
    # one 2-permutation drops it strictly below lb_formula from n = 6 on
    unforb = op.PropertySpec("graph", degree_cap=1)
    assert tuple(
        op.count_structures(unforb, n) for n in range(1, 7)
    ) == tuple(op.telephone(n) for n in range(1, 7))
    for pat in ((1, 2), (2, 1)):
        spec = op.PropertySpec(
            "graph", degree_cap=1, forbidden=(("perm", op.Permutation(pat)),)
        )
        counts = tuple(op.count_structures(spec, n) for n in range(1, 7))
        assert counts == (1, 2, 4, 9, 21, 51)
        lbs = tuple(op.lb_formula(n) for n in range(1, 7))
        assert all(c <= l for c, l in zip(counts, lbs))
        assert counts[5] < lbs[5]


def test_closure_under_deletions():
    # containment-mode families are closed under vertex deletion, edge
    # deletion, and edge shrinking; induced-mode under vertex deletion
    spec = op.PropertySpec(
        "hypergraph", forbidden=(("contain", op.make_h_of_pi(op.Permutation([1]))),)
    )
    fam4 = list(op.enumerate_structures(spec, 4))
    for h in fam4:
        for v in range(1, 5):
            sub = op.hg_induced_sub(h, tuple(u for u in range(1, 5) if u != v))
            assert op.satisfies_spec(spec, sub)
        for i in range(len(h.edges)):
            smaller = op.OrderedHypergraph(
                4, h.edges[:i] + h.edges[i + 1 :], check=False
            )
            assert op.satisfies_spec(spec, smaller)
        for i, e in enumerate(h.edges):
            if len(e) > 2:
                shrunk = set(h.edges[: i] + h.edges[i + 1 :])
                shrunk.add(e[:-1])
                assert op.satisfies_spec(
                    spec, op.OrderedHypergraph(4, sorted(shrunk), check=False)
                )
    ind = op.PropertySpec(
        "graph", forbidden=(("induced", op.OrderedHypergraph(2, [(1, 2)])),)
    )
    for g in op.enumerate_structures(ind, 4):
        for v in range(1, 5):
            sub = op.hg_induced_sub(g, tuple(u for u in range(1, 5) if u != v))
            assert op.satisfies_spec(ind, sub)


def test_property_spec_validation():
    with pytest.raises(StructureError):
        op.PropertySpec("widget")
    with pytest.raises(StructureError):
        op.PropertySpec("perm", degree_cap=1)
    with pytest.raises(StructureError):
        op.PropertySpec("perm", forbidden=(("sub", op.OrderedHypergraph.empty(1)),))
    with pytest.raises(StructureError):
        op.PropertySpec("graph", forbidden=(("perm", op.OrderedHypergraph.empty(1)),))
    with pytest.raises(StructureError):
        op.PropertySpec("partition", forbidden=(("contain", op.Partition(0, ())),))


def test_feasibility_bounds():
    with pytest.raises(FeasibilityError):
        op.count_structures(op.PropertySpec("graph"), 8)
    with pytest.raises(FeasibilityError):
        op.count_structures(op.PropertySpec("hypergraph"), 6)
    with pytest.raises(FeasibilityError):
        op.extremal_ones(8, square=True)
    with pytest.raises(FeasibilityError):
        op.extremal_ones_oracle(5, square=True)
    with pytest.raises(FeasibilityError):
        op.max_weight_avoiding(6, op.Permutation([1]))
    with pytest.raises(FeasibilityError):
        op.ramsey_find(op.OrderedHypergraph.empty(21), 2)
    # force overrides the refusal
    v, _ = op.extremal_ones(8, square=True, patterns=[op.BinaryMatrix([[1]])],
                            force=True)
    assert v == 0


def test_extremal_examples():
    v, _ = op.extremal_ones(2, square=True, patterns=[op.BinaryMatrix([[1, 1]])])
    assert v == 2
    v, _ = op.extremal_ones(2, square=True, patterns=[op.BinaryMatrix([[1, 0], [0, 1]])])
    assert v == 3
    v, _ = op.extremal_ones(1, m=1, patterns=[op.BinaryMatrix([[1]])])
    assert v == 0
    with pytest.raises(StructureError):
        op.extremal_ones(2, patterns=[op.s1_matrix()])  # free m needs distinct rows
    with pytest.raises(StructureError):
        op.extremal_ones(2, distinct_rows=True, patterns=[op.s1_matrix()])


def test_extremal_matches_oracle_small():
    s1, s2 = op.s1_matrix(), op.s2_matrix()
    for pats in ([s1], [s2], [s1, s2], [op.BinaryMatrix([[1, 1]])]):
        for n in range(1, 4):
            v, w = op.extremal_ones(n, square=True, patterns=pats)
            vo, wo = op.extremal_ones_oracle(n, square=True, patterns=pats)
            assert v == vo
            assert w == wo


def test_extremal_generic_path_matches_oracle(rng):
    # a 3-row pattern forces the generic solver
    pat3 = op.BinaryMatrix([[1, 0], [0, 1], [1, 0]])
    for n in range(2, 4):
        v, w = op.extremal_ones(n, m=3, patterns=[pat3])
        vo, wo = op.extremal_ones_oracle(n, m=3, patterns=[pat3])
        assert v == vo and w == wo
    # mixed generic and pair patterns
    pats = [pat3, op.BinaryMatrix([[1, 1]])]
    v, w = op.extremal_ones(3, m=3, patterns=pats)
    vo, wo = op.extremal_ones_oracle(3, m=3, patterns=pats)
    assert v == vo and w == wo


def test_extremal_options_match_oracle():
    cls = op.PatternClass([2, 1])
    for kwargs in (
        dict(m=3, patterns=[cls], distinct_rows=True),
        dict(m=3, patterns=[op.s1_matrix()], max_row_weight=2),
        dict(m=2, patterns=[cls], distinct_rows=True, max_row_weight=1),
    ):
        v, w = op.extremal_ones(3, **kwargs)
        vo, wo = op.extremal_ones_oracle(3, **kwargs)
        assert v == vo and w == wo


def test_extremal_free_m_matches_oracle():
    for k, n in (((1,), 3), ((2, 1), 3), ((1, 2), 3)):
        cls = op.PatternClass(k)
        v, w = op.extremal_ones(n, patterns=[cls], distinct_rows=True)
        vo, wo = op.extremal_ones_oracle(n, patterns=[cls], distinct_rows=True)
        assert v == vo
        assert w == wo
        assert len(set(w.row_masks)) == w.m


def test_extremal_infeasible():
    with pytest.raises(StructureError):
        op.extremal_ones(2, m=1, patterns=[op.BinaryMatrix([[0, 0]])])


def test_extremal_witness_avoids():
    v, w = op.extremal_ones(5, square=True, patterns=[op.s1_matrix(), op.s2_matrix()])
    assert op.matrix_contains(w, op.s1_matrix()) is None
    assert op.matrix_contains(w, op.s2_matrix()) is None
    assert w.ones() == v


def test_max_weight_examples():
    v, _ = op.max_weight_avoiding(2, op.Permutation([1]))
    assert v == 0
    v, w = op.max_weight_avoiding(3, op.Permutation([2, 1]))
    # oracle: no hypergraph on [3] can contain a 2-permutation, so the
    # complete hypergraph wins
    ref = max(op.weight(h) for h in all_hypergraphs(3))
    assert v == ref == 9
    assert op.weight(w) == v


def test_max_weight_matches_exhaustive_and_monotone():
    for pat in ((1, 2), (2, 1)):
        pi = op.Permutation(pat)
        vals = []
        for n in range(1, 5):
            v, w = op.max_weight_avoiding(n, pi)
            ref = max(
                (op.weight(h) for h in all_hypergraphs(n)
                 if op.hg_contains_perm(h, pi) is None),
                default=0,
            )
            assert v == ref
            assert op.hg_contains_perm(w, pi) is None
            vals.append(v)
        assert vals == sorted(vals)
        assert vals == [0, 2, 9, 16]


def test_ramsey_examples():
    path = op.OrderedHypergraph(3, [(1, 2), (2, 3)])
    assert op.ramsey_find(path, 2) == ("clique", (1, 2))
    assert op.ramsey_find(op.OrderedHypergraph.empty(2), 2) == ("independent", (1, 2))
    c5 = op.OrderedHypergraph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert op.ramsey_find(c5, 3) is None
    # R(3) = 6: every graph on [6] has a homogeneous triple
    import random

    r = random.Random(5)
    for _ in range(30):
        edges = [e for e in itertools.combinations(range(1, 7), 2) if r.random() < 0.5]
        assert op.ramsey_find(op.OrderedHypergraph(6, edges), 3) is not None


def test_bipartite_ramsey():
    k22 = op.complete_bipartite(2)
    assert op.bipartite_ramsey_find(k22, (1, 2), (3, 4), 2)[0] == "complete"
    e22 = op.empty_bipartite(2)
    assert op.bipartite_ramsey_find(e22, (1, 2), (3, 4), 2)[0] == "empty"
    g = op.OrderedHypergraph(4, [(1, 3)])
    assert op.bipartite_ramsey_find(g, (1, 2), (3, 4), 2) is None
    with pytest.raises(StructureError):
        op.bipartite_ramsey_find(g, (1, 2), (2, 4), 1)


def test_work_splitting_determinism():
    spec = op.PropertySpec("graph", forbidden=(("perm", op.Permutation([1, 2])),))
    jobs_env = [1, 2, max(2, os.cpu_count() or 2)]
    counts = [op.count_structures(spec, 5, jobs=j) for j in jobs_env]
    assert len(set(counts)) == 1
    streams = [list(op.enumerate_structures(spec, 4, jobs=j)) for j in jobs_env]
    assert streams[0] == streams[1] == streams[2]
    results = [
        op.extremal_ones(4, square=True, patterns=[op.s1_matrix()], jobs=j)
        for j in jobs_env
    ]
    assert results[0] == results[1] == results[2]
    generic = [
        op.extremal_ones(3, m=3, patterns=[op.BinaryMatrix([[1, 0], [0, 1], [1, 0]])],
                         jobs=j)
        for j in jobs_env
    ]
    assert generic[0] == generic[1] == generic[2]
    perms = [
        list(op.enumerate_structures(spec_perm((1, 2, 3)), 5, jobs=j))
        for j in jobs_env
    ]
    assert perms[0] == perms[1] == perms[2]
    parts = [
        list(
            op.enumerate_structures(
                op.PropertySpec(
                    "partition", forbidden=(("perm", op.Permutation([1, 2])),)
                ),
                5,
                jobs=j,
            )
        )
        for j in jobs_env
    ]
    assert parts[0] == parts[1] == parts[2]
