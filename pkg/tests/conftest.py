import itertools

import pytest

import ordpat as op


def candidate_edges(n, graph=False):
    if graph:
        return list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for r in range(2, n + 1):
        out.extend(itertools.combinations(range(1, n + 1), r))
    out.sort()
    return out


def all_hypergraphs(n):
    cands = candidate_edges(n)
    for bits in range(1 << len(cands)):
        edges = tuple(cands[i] for i in range(len(cands)) if bits >> i & 1)
        yield op.OrderedHypergraph(n, edges, check=False)


def all_graphs(n):
    cands = candidate_edges(n, graph=True)
    for bits in range(1 << len(cands)):
        edges = tuple(cands[i] for i in range(len(cands)) if bits >> i & 1)
        yield op.OrderedHypergraph(n, edges, check=False)


def all_matchings(n):
    """All degree-<=1 graphs on [n]."""
    for g in all_graphs(n):
        deg = [0] * (n + 1)
        ok = True
        for a, b in g.edges:
            deg[a] += 1
            deg[b] += 1
            if deg[a] > 1 or deg[b] > 1:
                ok = False
                break
        if ok:
            yield g


def perms_of(k):
    return [op.Permutation(v, check=False) for v in itertools.permutations(range(1, k + 1))]


def perms_upto(k):
    out = []
    for j in range(k + 1):
        out.extend(perms_of(j))
    return out


def random_hypergraph(rng, n, edge_prob):
    cands = candidate_edges(n)
    edges = tuple(e for e in cands if rng.random() < edge_prob)
    return op.OrderedHypergraph(n, edges, check=False)


def random_matrix(rng, m, n, density):
    rows = [[1 if rng.random() < density else 0 for _ in range(n)] for _ in range(m)]
    return op.BinaryMatrix(rows, ncols=n)


@pytest.fixture
def rng():
    import random

    return random.Random(0xC0FFEE)
