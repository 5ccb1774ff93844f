"""Constructive maps: bijections, reductions, compressions, contractions,
and extraction procedures, each with a round-trip or witness-translation
contract that the test suite re-verifies independently.
"""
from __future__ import annotations

import itertools

from .errors import StructureError, UnrealizableError
from .structures import (
    BinaryMatrix,
    OrderedHypergraph,
    PatternClass,
    Permutation,
    Witness,
)
from .containment import verify_class_witness


class BracketSeq:
    """A legal sequence of k left and k right brackets (L/R symbols)."""

    __slots__ = ("symbols",)

    def __init__(self, symbols, check=True):
        syms = tuple(symbols)
        if check:
            depth = 0
            for s in syms:
                if s not in ("L", "R"):
                    raise StructureError(f"bad bracket symbol {s!r}")
                depth += 1 if s == "L" else -1
                if depth < 0:
                    raise StructureError("prefix with more R than L")
            if depth != 0:
                raise StructureError("unbalanced bracket sequence")
        self.symbols = syms

    @classmethod
    def from_string(cls, text):
        return cls(tuple(text.strip()))

    @property
    def k(self):
        return len(self.symbols) // 2

    def left_positions(self):
        return tuple(i + 1 for i, s in enumerate(self.symbols) if s == "L")

    def right_positions(self):
        return tuple(i + 1 for i, s in enumerate(self.symbols) if s == "R")

    def __str__(self):
        return "".join(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, BracketSeq) and self.symbols == other.symbols

    def __hash__(self):
        return hash(("BracketSeq", self.symbols))

    def __repr__(self):
        return f"BracketSeq({''.join(self.symbols)!r})"


class DegreeSequence:
    """Length-n sequence of non-negative integers with known total."""

    __slots__ = ("entries",)

    def __init__(self, entries, check=True):
        ent = tuple(int(x) for x in entries)
        if check and any(x < 0 for x in ent):
            raise StructureError("negative degree")
        self.entries = ent

    @property
    def total(self):
        return sum(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, DegreeSequence) and self.entries == other.entries

    def __hash__(self):
        return hash(("DegreeSequence", self.entries))

    def __repr__(self):
        return f"DegreeSequence({list(self.entries)})"


# ---------------------------------------------------------------------------
# degree-<=1 graphs: phi, psi, reconstruction


def _matching_edges(g):
    if not g.is_graph:
        raise StructureError("expected an ordered graph")
    deg = [0] * (g.n + 1)
    for a, b in g.edges:
        deg[a] += 1
        deg[b] += 1
    if any(d > 1 for d in deg):
        raise StructureError("maximum degree exceeds 1")
    # stored lex order = order by left endpoint (left endpoints are distinct)
    return g.edges


def phi_deg1(g):
    """The permutation encoding a degree-<=1 graph.

    With edges e_1..e_k ordered by left endpoint and pi the permutation
    sorting the right endpoints (b_{pi(1)} < .. < b_{pi(k)}), returns
    pi^{-1}; satisfies phi_deg1(make_h_of_pi(pi)) == pi.
    """
    edges = _matching_edges(g)
    rights = [e[1] for e in edges]
    order = sorted(range(len(edges)), key=lambda i: rights[i])
    pi = Permutation([i + 1 for i in order], check=False)
    return pi.inverse()


def psi_brackets(g):
    """Bracket sequence of a degree-<=1 graph: L at left endpoints, R at right."""
    edges = _matching_edges(g)
    lefts = {e[0] for e in edges}
    rights = {e[1] for e in edges}
    syms = []
    for v in range(1, g.n + 1):
        if v in lefts:
            syms.append("L")
        elif v in rights:
            syms.append("R")
    return BracketSeq(syms, check=False)


def reconstruct_deg1(n, phi, psi, support):
    """Rebuild the degree-<=1 graph on [n] from (phi, psi, support).

    Edge set is {{a(s(i)), a(t(phi(i)))}} for the bracket positions s/t;
    raises UnrealizableError when no graph realizes the pair (the formula
    always produces a matching, but it may fail to round-trip).
    """
    a = tuple(int(v) for v in support)
    k = phi.size
    if len(psi) != 2 * k or len(a) != 2 * k:
        raise StructureError("sizes of phi, psi and support disagree")
    if any(x >= y for x, y in zip(a, a[1:])):
        raise StructureError("support not strictly increasing")
    if a and (a[0] < 1 or a[-1] > n):
        raise StructureError(f"support not inside [{n}]")
    s = psi.left_positions()
    t = psi.right_positions()
    edges = [tuple(sorted((a[s[i - 1] - 1], a[t[phi(i) - 1] - 1]))) for i in range(1, k + 1)]
    g = OrderedHypergraph(n, edges)
    if phi_deg1(g) != phi or psi_brackets(g) != psi:
        raise UnrealizableError(f"no degree-<=1 graph has phi={list(phi)}, psi={psi}")
    return g


# ---------------------------------------------------------------------------
# general ordered graphs: the (phi_p, phi_l, phi_r) triple


def _r_key(e):
    return (e[1], e[0])


def phi_triple(g):
    """(phi_p, phi_l, phi_r) of an ordered graph.

    phi_p(j) is the position under <_r of the j-th edge under <_l, where
    e <_l f iff (e1,e2) < (f1,f2) and e <_r f iff (e2,e1) < (f2,f1);
    phi_l / phi_r are the left/right endpoint degree sequences.
    """
    if not g.is_graph:
        raise StructureError("expected an ordered graph")
    edges = g.edges  # stored lex order is exactly <_l
    m = len(edges)
    r_order = sorted(range(m), key=lambda i: _r_key(edges[i]))
    r_pos = [0] * m
    for pos, idx in enumerate(r_order):
        r_pos[idx] = pos + 1
    phi_p = Permutation(r_pos, check=False)
    left = [0] * g.n
    right = [0] * g.n
    for a, b in edges:
        left[a - 1] += 1
        right[b - 1] += 1
    return phi_p, DegreeSequence(left, check=False), DegreeSequence(right, check=False)


def reconstruct_triple(n, phi_p, phi_l, phi_r):
    """The unique ordered graph with the given triple, or None if unrealizable.

    Peels the <_r-minimal edge: its right endpoint is the first vertex with
    remaining right degree, its left endpoint the j*-th element of the left
    degree multiset where j* is the <_l-position mapped to 1 by phi_p.
    """
    m = phi_p.size
    left = list(phi_l.entries)
    right = list(phi_r.entries)
    if len(left) != n or len(right) != n:
        raise StructureError("degree sequences must have length n")
    if sum(left) != m or sum(right) != m:
        raise StructureError("degree totals disagree with the permutation size")
    remaining = list(phi_p.values)
    edges = []
    for _ in range(m):
        jstar = remaining.index(1)
        w = next((v for v in range(1, n + 1) if right[v - 1] > 0), None)
        # j*-th element of the left endpoint multiset, 1-based
        acc = 0
        u = None
        for v in range(1, n + 1):
            acc += left[v - 1]
            if acc >= jstar + 1:
                u = v
                break
        if u is None or w is None or u >= w:
            return None
        edge = (u, w)
        if edge in edges:
            return None
        edges.append(edge)
        left[u - 1] -= 1
        right[w - 1] -= 1
        del remaining[jstar]
        remaining = [x - 1 for x in remaining]
    g = OrderedHypergraph(n, edges, check=False) if not edges else OrderedHypergraph(n, edges)
    got = phi_triple(g)
    if got != (phi_p, phi_l, phi_r):
        return None
    return g


# ---------------------------------------------------------------------------
# contractions and compressions


def contract_pairs(hg):
    """Identify vertices 2i-1 and 2i; image edges of size < 2 are dropped
    (hypergraph validity; dropped singletons cannot host pattern pairs, so
    avoidance preservation is unaffected)."""
    if hg.n % 2:
        raise StructureError("vertex count must be even")
    half = hg.n // 2
    images = set()
    for mask in hg.edge_masks:
        img = tuple(
            i for i in range(1, half + 1) if mask >> (2 * i - 2) & 3
        )
        if len(img) >= 2:
            images.add(img)
    return OrderedHypergraph(half, sorted(images), check=False)


def block_compress(mat, width):
    """OR-compress each row into blocks of ``width`` columns (last block may
    be narrower)."""
    if width < 1:
        raise StructureError("block width must be >= 1")
    q = (mat.n + width - 1) // width
    rows = []
    for i in range(1, mat.m + 1):
        row = []
        for j in range(q):
            lo, hi = j * width + 1, min((j + 1) * width, mat.n)
            row.append(1 if any(mat.entry(i, c) for c in range(lo, hi + 1)) else 0)
        rows.append(row)
    return BinaryMatrix(rows, ncols=q)


def lift_block_witness(block_wit, mat, width, cls):
    """Lift a class witness against block_compress(mat, width) to one
    against ``mat``, choosing the leftmost 1 in each required block."""
    compressed = block_compress(mat, width)
    if not verify_class_witness(compressed, cls, block_wit):
        raise StructureError("witness does not validate against the compressed matrix")
    k = cls.k
    # slot s of the column vector is needed by exactly one pattern row
    row_for_slot = {}
    for i in range(1, k + 1):
        row_for_slot[i] = block_wit.row_assignment[i - 1]
        row_for_slot[k + cls.m_perm(i)] = block_wit.row_assignment[i - 1]
    cols = []
    for s, bcol in enumerate(block_wit.cols, start=1):
        r = row_for_slot[s]
        lo, hi = (bcol - 1) * width + 1, min(bcol * width, mat.n)
        c = next(c for c in range(lo, hi + 1) if mat.entry(r, c))
        cols.append(c)
    lifted = Witness(
        rows=block_wit.rows,
        cols=tuple(cols),
        row_assignment=block_wit.row_assignment,
    )
    assert verify_class_witness(mat, cls, lifted)
    return lifted


# ---------------------------------------------------------------------------
# the two-ones reductions


def incidence_reduction(mat):
    """Rows for the pairs (i,j), i<=j, with a 1 at (i,j): each carries ones
    at columns i and j (a single 1 when i == j), in lexicographic pair order."""
    if mat.m != mat.n:
        raise StructureError("matrix must be square")
    n = mat.n
    rows = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if mat.entry(i, j):
                rows.append((1 << (n - i)) | (1 << (n - j)))
    return BinaryMatrix.from_masks(rows, n)


def pair_graph_reduction(mat):
    """Upper-triangular n x n matrix with a 1 at (i,j), i<j, whenever some
    row of ``mat`` has ones at both columns i and j."""
    n = mat.n
    out = [0] * n
    for r in range(1, mat.m + 1):
        cols = [j for j in range(1, n + 1) if mat.entry(r, j)]
        if len(cols) > 2:
            raise StructureError(f"row {r} has more than two ones")
        if len(cols) == 2:
            i, j = cols
            out[i - 1] |= 1 << (n - j)
    return BinaryMatrix.from_masks(out, n)


def corner_pattern(cls):
    """(k+1) x (k+1) matrix with M in the top right corner and a single 1
    in the bottom left corner."""
    if cls.k < 1:
        raise StructureError("class must have k >= 1")
    k = cls.k
    rows = []
    for i in range(1, k + 1):
        r = [0] * (k + 1)
        r[cls.m_perm(i)] = 1
        rows.append(r)
    last = [0] * (k + 1)
    last[0] = 1
    rows.append(last)
    return BinaryMatrix(rows, ncols=k + 1)


def translate_incidence_witness(class_wit, cls):
    """Turn a class witness against incidence_reduction(mat) into a plain
    witness for the permutation matrix of ``cls`` against ``mat``:
    the k a-columns become rows, the k b-columns stay columns."""
    k = cls.k
    return Witness(rows=class_wit.cols[:k], cols=class_wit.cols[k:])


def translate_corner_witness(corner_wit, mat, cls):
    """Turn a witness for corner_pattern(cls) against pair_graph_reduction(mat)
    into a class witness for ``cls`` against ``mat``.

    The corner one forces all a-rows below b_1, so the columns
    a_1..a_k, b_2..b_{k+1} are increasing; for pattern row i the serving
    row of ``mat`` is the least row with ones at a_i and b_{pi(i)+1}."""
    k = cls.k
    a = corner_wit.rows[: k + 1]
    b = corner_wit.cols
    cols = a[:k] + b[1:]
    assign = []
    for i in range(1, k + 1):
        ca = a[i - 1]
        cb = b[cls.m_perm(i)]
        r = next(
            (
                r
                for r in range(1, mat.m + 1)
                if mat.entry(r, ca) and mat.entry(r, cb)
            ),
            None,
        )
        if r is None:
            raise StructureError("corner witness does not translate")
        assign.append(r)
    if len(set(assign)) != k:
        raise StructureError("translated rows collide")
    return Witness(rows=tuple(sorted(assign)), cols=cols, row_assignment=tuple(assign))


# ---------------------------------------------------------------------------
# sigma doubling and matching extraction


def sigma_double(pi):
    """The 2k-permutation with sigma(2i-1) = 2 pi(i), sigma(2i) = 2 pi(i) - 1."""
    vals = []
    for i in range(1, pi.size + 1):
        vals.append(2 * pi(i))
        vals.append(2 * pi(i) - 1)
    return Permutation(vals, check=False)


def extract_independent_matching(g, pi):
    """Given phi_p(g) == sigma_double(pi), the subgraph on the odd-indexed
    edges in <_l order; its edges are pairwise disjoint."""
    phi_p, _, _ = phi_triple(g)
    if phi_p != sigma_double(pi):
        raise StructureError("phi_p(g) != sigma_double(pi)")
    picked = [g.edges[i] for i in range(0, len(g.edges), 2)]
    out = OrderedHypergraph(g.n, picked, check=False)
    seen = set()
    for e in picked:
        if seen & set(e):
            raise StructureError("extracted edges unexpectedly share a vertex")
        seen |= set(e)
    return out


def greedy_star_matching(edges, cap, a_part=None):
    """A matching of size >= |A|/cap in a bipartite graph given as (a, b)
    pairs, where every B-vertex has degree <= cap.

    Prunes every A-vertex to its least neighbour, leaving stars centred in
    B, and takes the least edge of each star."""
    edge_list = sorted(set((a, b) for a, b in edges))
    a_deg = {}
    b_deg = {}
    for a, b in edge_list:
        a_deg[a] = a_deg.get(a, 0) + 1
        b_deg[b] = b_deg.get(b, 0) + 1
    if a_part is not None:
        missing = [a for a in a_part if a not in a_deg]
        if missing:
            raise StructureError(f"A-vertices of degree 0: {missing}")
    over = [b for b, d in b_deg.items() if d > cap]
    if over:
        raise StructureError(f"B-vertices of degree > {cap}: {over}")
    kept = {}
    for a, b in edge_list:  # sorted, so first b seen per a is the least
        if a not in kept:
            kept[a] = b
    stars = {}
    for a, b in kept.items():
        stars.setdefault(b, []).append(a)
    matching = sorted((min(leaves), b) for b, leaves in stars.items())
    a_size = len(a_part) if a_part is not None else len(a_deg)
    assert len(matching) * cap >= a_size
    return matching
