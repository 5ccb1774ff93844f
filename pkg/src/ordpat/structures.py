"""Ordered combinatorial structures and their basic attributes.

Vertices are the integers 1..n and the vertex order is integer order, so
structures on [n] are compared directly; no canonicalization layer exists
or is needed.  Edge sets are kept sorted (each edge an increasing vertex
tuple, edges in lexicographic order) so that serialization and incidence
rows are deterministic.  All types are immutable after construction and
hashable; every operation here is a pure function.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import StructureError


class Permutation:
    """A permutation of [k] in one-line notation; ``p(i)`` is the image of i."""

    __slots__ = ("values",)

    def __init__(self, values, check=True):
        vals = tuple(int(v) for v in values)
        if check and sorted(vals) != list(range(1, len(vals) + 1)):
            raise StructureError(f"not a bijection of [{len(vals)}]: {vals}")
        self.values = vals

    @classmethod
    def identity(cls, k):
        return cls(range(1, k + 1), check=False)

    @property
    def size(self):
        return len(self.values)

    def __call__(self, i):
        return self.values[i - 1]

    def inverse(self):
        inv = [0] * len(self.values)
        for i, v in enumerate(self.values):
            inv[v - 1] = i + 1
        return Permutation(inv, check=False)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.values == other.values

    def __hash__(self):
        return hash(("Permutation", self.values))

    def __repr__(self):
        return f"Permutation({list(self.values)})"


def all_permutations(k):
    """All permutations of [k] in lexicographic one-line order."""
    for vals in itertools.permutations(range(1, k + 1)):
        yield Permutation(vals, check=False)


class OrderedHypergraph:
    """Ordered hypergraph on [n]: distinct edges, each a vertex set of size >= 2.

    Specializes to an ordered graph when every edge has size 2.  Edges are
    stored as increasing tuples in lexicographic order; ``edge_masks`` holds
    the same edges as bit masks (bit v-1 set for vertex v).
    """

    __slots__ = ("n", "edges", "edge_masks")

    def __init__(self, n, edges, check=True):
        n = int(n)
        if check:
            if n < 0:
                raise StructureError("vertex count must be >= 0")
            norm = []
            for e in edges:
                t = tuple(sorted(set(int(v) for v in e)))
                if len(t) < 2:
                    raise StructureError(f"edge {t} has fewer than 2 vertices")
                if t[0] < 1 or t[-1] > n:
                    raise StructureError(f"edge {t} not inside [{n}]")
                norm.append(t)
            norm.sort()
            for a, b in zip(norm, norm[1:]):
                if a == b:
                    raise StructureError(f"repeated edge {a}")
            edges = tuple(norm)
        else:
            edges = tuple(edges)
        self.n = n
        self.edges = edges
        self.edge_masks = tuple(_vertex_mask(e) for e in edges)

    @classmethod
    def empty(cls, n):
        return cls(n, (), check=False)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def is_graph(self):
        return all(len(e) == 2 for e in self.edges)

    def degree(self, v):
        if not 1 <= v <= self.n:
            raise StructureError(f"vertex {v} not in [{self.n}]")
        bit = 1 << (v - 1)
        return sum(1 for m in self.edge_masks if m & bit)

    def support(self):
        """Non-isolated vertices, increasing."""
        mask = 0
        for m in self.edge_masks:
            mask |= m
        return tuple(v for v in range(1, self.n + 1) if mask >> (v - 1) & 1)

    def __eq__(self, other):
        return (
            isinstance(other, OrderedHypergraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash(("OrderedHypergraph", self.n, self.edges))

    def __repr__(self):
        return f"OrderedHypergraph({self.n}, {list(self.edges)})"


def _vertex_mask(e):
    m = 0
    for v in e:
        m |= 1 << (v - 1)
    return m


class Partition:
    """Partition of [n] into disjoint non-empty blocks covering [n]."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks, check=True):
        n = int(n)
        norm = tuple(sorted(tuple(sorted(int(v) for v in b)) for b in blocks))
        if check:
            seen = set()
            for b in norm:
                if not b:
                    raise StructureError("empty block")
                for v in b:
                    if not 1 <= v <= n:
                        raise StructureError(f"element {v} not in [{n}]")
                    if v in seen:
                        raise StructureError(f"element {v} in two blocks")
                    seen.add(v)
            if len(seen) != n:
                raise StructureError("blocks do not cover the ground set")
        self.n = n
        self.blocks = norm

    def block_of(self, v):
        for b in self.blocks:
            if v in b:
                return b
        raise StructureError(f"element {v} not in [{self.n}]")

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash(("Partition", self.n, self.blocks))

    def __repr__(self):
        return f"Partition({self.n}, {list(self.blocks)})"


class BinaryMatrix:
    """Dense m x n 0/1 matrix.

    Rows are stored as bit masks with column 1 as the most significant of n
    bits, so integer order on a row mask equals left-to-right lexicographic
    order on its entries.
    """

    __slots__ = ("m", "n", "row_masks")

    def __init__(self, rows, ncols=None):
        rows = [tuple(int(x) for x in r) for r in rows]
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise StructureError("ragged rows")
        else:
            n = 0 if ncols is None else int(ncols)
        if any(x not in (0, 1) for r in rows for x in r):
            raise StructureError("entries must be 0 or 1")
        self.m = len(rows)
        self.n = n
        self.row_masks = tuple(_row_mask(r, n) for r in rows)

    @classmethod
    def from_masks(cls, masks, n):
        obj = cls.__new__(cls)
        obj.m = len(masks)
        obj.n = n
        obj.row_masks = tuple(masks)
        return obj

    def entry(self, i, j):
        """Entry at 1-based row i, column j."""
        return self.row_masks[i - 1] >> (self.n - j) & 1

    def row_tuple(self, i):
        mask = self.row_masks[i - 1]
        return tuple(mask >> (self.n - j) & 1 for j in range(1, self.n + 1))

    def to_lists(self):
        return [list(self.row_tuple(i)) for i in range(1, self.m + 1)]

    def ones(self):
        return sum(bin(mask).count("1") for mask in self.row_masks)

    def row_string(self, i):
        return format(self.row_masks[i - 1], f"0{self.n}b") if self.n else ""

    def transpose(self):
        return BinaryMatrix(
            [[self.entry(i, j) for i in range(1, self.m + 1)] for j in range(1, self.n + 1)],
            ncols=self.m,
        )

    def __eq__(self, other):
        return (
            isinstance(other, BinaryMatrix)
            and (self.m, self.n, self.row_masks) == (other.m, other.n, other.row_masks)
        )

    def __hash__(self):
        return hash(("BinaryMatrix", self.m, self.n, self.row_masks))

    def __repr__(self):
        return f"BinaryMatrix({self.to_lists()})"


def _row_mask(entries, n):
    mask = 0
    for j, x in enumerate(entries):
        if x:
            mask |= 1 << (n - 1 - j)
    return mask


class PatternClass:
    """Equivalence class of k x 2k matrices (K,L) under row permutation.

    The canonical representative is (I,M) where M is the k x k permutation
    matrix with its row-i one in column ``m_perm(i)``; row i of (I,M) then
    carries ones at columns i and ``m_perm(i) + k``, matching the edge
    {i, pi(i)+k} of the corresponding matching.
    """

    __slots__ = ("k", "m_perm")

    def __init__(self, m_perm):
        if not isinstance(m_perm, Permutation):
            m_perm = Permutation(m_perm)
        self.k = m_perm.size
        self.m_perm = m_perm

    def canonical_matrix(self):
        k = self.k
        rows = []
        for i in range(1, k + 1):
            r = [0] * (2 * k)
            r[i - 1] = 1
            r[k + self.m_perm(i) - 1] = 1
            rows.append(r)
        return BinaryMatrix(rows, ncols=2 * k)

    def perm_matrix(self):
        """The right block M alone, as a k x k permutation matrix."""
        k = self.k
        rows = []
        for i in range(1, k + 1):
            r = [0] * k
            r[self.m_perm(i) - 1] = 1
            rows.append(r)
        return BinaryMatrix(rows, ncols=k)

    def __eq__(self, other):
        return isinstance(other, PatternClass) and self.m_perm == other.m_perm

    def __hash__(self):
        return hash(("PatternClass", self.m_perm.values))

    def __repr__(self):
        return f"PatternClass({list(self.m_perm.values)})"


@dataclass(frozen=True)
class Witness:
    """Index certificate of a containment; always re-verifiable.

    ``rows`` / ``cols`` are increasing 1-based row/column indices (edge
    indices / vertices for hypergraph operations).  When the k chosen host
    rows serve the pattern rows out of vertical order, ``row_assignment``
    records the host row (or edge) serving each pattern row in turn.
    """

    rows: tuple = ()
    cols: tuple = ()
    row_assignment: tuple | None = None


# ---------------------------------------------------------------------------
# named constructions


def make_h_of_pi(pi, kind="graph"):
    """The matching-like structure on [2k] with edges {i, pi(i)+k}.

    ``kind`` selects the carrier: "graph"/"hypergraph" give an
    OrderedHypergraph, "partition" the partition of [2k] into those pairs.
    """
    if kind not in ("graph", "hypergraph", "partition"):
        raise StructureError(f"unknown kind {kind!r}")
    k = pi.size
    pairs = [(i, pi(i) + k) for i in range(1, k + 1)]
    if kind == "partition":
        return Partition(2 * k, pairs)
    return OrderedHypergraph(2 * k, pairs)


def make_g(n, support_verts, pi):
    """H(pi) embedded on the increasing 2k-subset ``support_verts`` of [n]."""
    a = tuple(int(v) for v in support_verts)
    k = pi.size
    if len(a) != 2 * k:
        raise StructureError(f"support size {len(a)} != 2*{k}")
    if any(x >= y for x, y in zip(a, a[1:])):
        raise StructureError("support not strictly increasing")
    if a and (a[0] < 1 or a[-1] > n):
        raise StructureError(f"support not inside [{n}]")
    edges = [(a[i - 1], a[pi(i) + k - 1]) for i in range(1, k + 1)]
    return OrderedHypergraph(n, edges)


def _perm_matrix_to_perm(mat):
    k = mat.m
    if mat.n != k:
        raise StructureError("not square")
    vals = []
    for i in range(1, k + 1):
        row = mat.row_tuple(i)
        if sum(row) != 1:
            raise StructureError(f"row {i} is not a unit row")
        vals.append(row.index(1) + 1)
    if sorted(vals) != list(range(1, k + 1)):
        raise StructureError("columns not a bijection")
    return Permutation(vals, check=False)


def canonical_pattern(left, right):
    """Canonicalize the pair (K,L) of permutation matrices to its class (I,M).

    Permutes the rows so the left block becomes the identity and reads M off
    the right block; idempotent under re-canonicalization.
    """
    pk = _perm_matrix_to_perm(left)
    pl = _perm_matrix_to_perm(right)
    k = pk.size
    if pl.size != k:
        raise StructureError("blocks differ in size")
    m_vals = [0] * k
    for r in range(1, k + 1):
        m_vals[pk(r) - 1] = pl(r)
    return PatternClass(Permutation(m_vals, check=False))


def incidence_matrix(hg):
    """Edge-indicator rows of ``hg``, one per edge in lexicographic edge order."""
    n = hg.n
    rows = []
    for e in hg.edges:
        mask = 0
        for v in e:
            mask |= 1 << (n - v)
        rows.append(mask)
    return BinaryMatrix.from_masks(rows, n)


def hypergraph_of_partition(part):
    """Hypergraph on [n] whose edges are the blocks of size >= 2."""
    return OrderedHypergraph(
        part.n, [b for b in part.blocks if len(b) >= 2], check=False
    )


def weight(hg):
    """Sum of edge sizes."""
    return sum(len(e) for e in hg.edges)


def two_degree(hg, v):
    """Number of vertices u != v sharing some edge with v."""
    if not 1 <= v <= hg.n:
        raise StructureError(f"vertex {v} not in [{hg.n}]")
    bit = 1 << (v - 1)
    seen = 0
    for m in hg.edge_masks:
        if m & bit:
            seen |= m
    seen &= ~bit
    return bin(seen).count("1")


# ---------------------------------------------------------------------------
# standard objects


def complete_graph(t):
    if t < 1:
        raise StructureError("size must be >= 1")
    return OrderedHypergraph(t, itertools.combinations(range(1, t + 1), 2))


def complete_bipartite(t):
    """K_{t,t} on [2t] with edges {i,j} for i <= t < j."""
    if t < 1:
        raise StructureError("size must be >= 1")
    edges = [(i, j) for i in range(1, t + 1) for j in range(t + 1, 2 * t + 1)]
    return OrderedHypergraph(2 * t, edges)


def empty_bipartite(t):
    """E_{t,t}: 2t vertices, no edges."""
    if t < 1:
        raise StructureError("size must be >= 1")
    return OrderedHypergraph.empty(2 * t)


def s1_matrix():
    return BinaryMatrix([[1, 0, 1, 0], [0, 1, 0, 1]])


def s2_matrix():
    return BinaryMatrix([[0, 1, 0, 1], [1, 0, 1, 0]])


def standard_object(name, size=None):
    """Dispatch for the named standard objects K_t, K_tt, S1, S2, E_ll."""
    if name == "S1":
        return s1_matrix()
    if name == "S2":
        return s2_matrix()
    if size is None:
        raise StructureError(f"{name} needs a size")
    if name == "K_t":
        return complete_graph(size)
    if name == "K_tt":
        return complete_bipartite(size)
    if name == "E_ll":
        return empty_bipartite(size)
    raise StructureError(f"unknown standard object {name!r}")


# ---------------------------------------------------------------------------
# predicates


def _require_graph(g):
    if not g.is_graph:
        raise StructureError("expected an ordered graph (all edges of size 2)")


def is_comatching(g):
    """True iff all non-edges of the ordered graph are pairwise disjoint."""
    _require_graph(g)
    present = set(g.edges)
    nonedges = [
        e for e in itertools.combinations(range(1, g.n + 1), 2) if e not in present
    ]
    for e, f in itertools.combinations(nonedges, 2):
        if set(e) & set(f):
            return False
    return True


def is_starmatching(g):
    """True iff {x,y} in E implies {x,y'} in E for every y <= y' <= n.

    Reads the defining condition with x as the smaller endpoint, so rays
    extend rightward; the mirrored (leftward) variant would be an equally
    plausible reading.
    """
    _require_graph(g)
    present = set(g.edges)
    for x, y in g.edges:
        for y2 in range(y + 1, g.n + 1):
            if (x, y2) not in present:
                return False
    return True


def satisfies_k_l(hg, degree_cap, size_cap):
    """True iff every vertex lies in <= degree_cap edges and every edge has
    size <= size_cap; None means unbounded."""
    if size_cap is not None and any(len(e) > size_cap for e in hg.edges):
        return False
    if degree_cap is not None:
        counts = [0] * (hg.n + 1)
        for e in hg.edges:
            for v in e:
                counts[v] += 1
                if counts[v] > degree_cap:
                    return False
    return True
