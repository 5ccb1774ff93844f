"""Containment relations, each returning a re-verifiable Witness or None.

Every search backtracks over columns/vertices in increasing order, so the
returned witness is the lexicographically least one (rows/vertex list
compared first, then columns, then the row assignment).  The ``verify_*``
functions re-check a witness by direct index comparison and never search;
they are the independent side of every dual-route test.
"""
from __future__ import annotations

import itertools

from .errors import StructureError
from .structures import (
    BinaryMatrix,
    OrderedHypergraph,
    Partition,
    Permutation,
    Witness,
)


# ---------------------------------------------------------------------------
# permutations


def perm_contains(host, pattern):
    """Increasing positions of an order-isomorphic copy of ``pattern``, or None."""
    hv = host.values
    pv = pattern.values
    n, k = len(hv), len(pv)
    if k > n:
        return None
    chosen = []

    def extend(start):
        j = len(chosen)
        if j == k:
            return True
        for pos in range(start, n - (k - j) + 1):
            ok = True
            for t, p in enumerate(chosen):
                if (hv[p] < hv[pos]) != (pv[t] < pv[j]):
                    ok = False
                    break
            if ok:
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return Witness(cols=tuple(p + 1 for p in chosen))
    return None


def verify_perm_witness(host, pattern, wit):
    pos = wit.cols
    if len(pos) != pattern.size:
        return False
    if any(a >= b for a, b in zip(pos, pos[1:])):
        return False
    if pos and (pos[0] < 1 or pos[-1] > host.size):
        return False
    for i, j in itertools.combinations(range(len(pos)), 2):
        if (host(pos[i]) < host(pos[j])) != (pattern(i + 1) < pattern(j + 1)):
            return False
    return True


# ---------------------------------------------------------------------------
# matrices


def _columns_dominating(host_rows, n, pattern, rows):
    """Greedy leftmost columns making host rows ``rows`` dominate ``pattern``.

    Greedy matching of an increasing column subsequence against per-column
    requirements is complete and yields the least column list.
    """
    q = pattern.n
    cols = []
    c = 0
    for j in range(1, q + 1):
        found = False
        while c < n:
            c += 1
            if all(
                host_rows[rows[i]] >> (n - c) & 1
                for i in range(pattern.m)
                if pattern.entry(i + 1, j)
            ):
                cols.append(c)
                found = True
                break
        if not found:
            return None
    return tuple(cols)


def matrix_contains(host, pattern):
    """Sub-matrix of ``host`` dominating the ones of ``pattern``, or None."""
    p, q = pattern.m, pattern.n
    if p > host.m or q > host.n:
        return None
    for rows in itertools.combinations(range(host.m), p):
        cols = _columns_dominating(host.row_masks, host.n, pattern, rows)
        if cols is not None:
            return Witness(rows=tuple(r + 1 for r in rows), cols=cols)
    return None


def verify_matrix_witness(host, pattern, wit):
    rows, cols = wit.rows, wit.cols
    if len(rows) != pattern.m or len(cols) != pattern.n:
        return False
    for seq, hi in ((rows, host.m), (cols, host.n)):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            return False
        if seq and (seq[0] < 1 or seq[-1] > hi):
            return False
    for i in range(1, pattern.m + 1):
        for j in range(1, pattern.n + 1):
            if pattern.entry(i, j) and not host.entry(rows[i - 1], cols[j - 1]):
                return False
    return True


def matrix_contains_class(host, cls):
    """Containment of some member of the row-permutation class ``cls``.

    The witness picks k distinct host rows in arbitrary vertical order
    (recorded in ``row_assignment``) and columns a_1<..<a_k<b_1<..<b_k such
    that the row serving pattern row i has ones at a_i and b_{m_perm(i)}.
    """
    k = cls.k
    if k > host.m or 2 * k > host.n:
        return None
    n = host.n
    masks = host.row_masks
    pi = cls.m_perm

    def assign(acols, bcols):
        # pattern row i needs a host row with ones at acols[i] and bcols[pi(i+1)]
        chosen = []
        used = set()

        def rec(i):
            if i == k:
                return True
            ca = acols[i]
            cb = bcols[pi(i + 1) - 1]
            need = (1 << (n - ca)) | (1 << (n - cb))
            for r in range(host.m):
                if r in used:
                    continue
                if masks[r] & need == need:
                    used.add(r)
                    chosen.append(r)
                    if rec(i + 1):
                        return True
                    chosen.pop()
                    used.remove(r)
            return False

        return tuple(r + 1 for r in chosen) if rec(0) else None

    for acols in itertools.combinations(range(1, n + 1), k):
        for bcols in itertools.combinations(range(acols[-1] + 1, n + 1), k):
            got = assign(acols, bcols)
            if got is not None:
                return Witness(
                    rows=tuple(sorted(got)),
                    cols=acols + bcols,
                    row_assignment=got,
                )
    return None


def verify_class_witness(host, cls, wit):
    k = cls.k
    cols = wit.cols
    assign = wit.row_assignment
    if assign is None or len(assign) != k or len(cols) != 2 * k:
        return False
    if len(set(assign)) != k or tuple(sorted(assign)) != wit.rows:
        return False
    if any(a >= b for a, b in zip(cols, cols[1:])):
        return False
    if cols and (cols[0] < 1 or cols[-1] > host.n):
        return False
    if any(not 1 <= r <= host.m for r in assign):
        return False
    for i in range(1, k + 1):
        r = assign[i - 1]
        if not host.entry(r, cols[i - 1]):
            return False
        if not host.entry(r, cols[k + cls.m_perm(i) - 1]):
            return False
    return True


# ---------------------------------------------------------------------------
# ordered hypergraphs


def hg_induced_sub(hg, subset):
    """Induced sub-hypergraph on ``subset``: relabeled traces of size >= 2."""
    u = tuple(int(v) for v in subset)
    if any(a >= b for a, b in zip(u, u[1:])):
        raise StructureError("subset not strictly increasing")
    if u and (u[0] < 1 or u[-1] > hg.n):
        raise StructureError(f"subset not inside [{hg.n}]")
    pos = {v: i + 1 for i, v in enumerate(u)}
    traces = set()
    for e in hg.edges:
        t = tuple(pos[v] for v in e if v in pos)
        if len(t) >= 2:
            traces.add(t)
    return OrderedHypergraph(len(u), sorted(traces), check=False)


def _traces_with_sources(hg, u):
    """Distinct relabeled traces on ``u`` with the least host edge index of each."""
    pos = {v: i + 1 for i, v in enumerate(u)}
    out = {}
    for idx, e in enumerate(hg.edges):
        t = tuple(pos[v] for v in e if v in pos)
        if len(t) >= 2 and t not in out:
            out[t] = idx + 1
    return out


def is_induced_sub(small, host):
    """Vertex embedding making ``small`` an induced sub-hypergraph of ``host``."""
    if small.n > host.n:
        return None
    target = set(small.edges)
    for u in itertools.combinations(range(1, host.n + 1), small.n):
        if set(_traces_with_sources(host, u)) == target:
            return Witness(cols=u)
    return None


def is_sub_hypergraph(small, host):
    """Embedding with every edge of ``small`` equal to a host trace."""
    if small.n > host.n:
        return None
    for u in itertools.combinations(range(1, host.n + 1), small.n):
        traces = _traces_with_sources(host, u)
        if all(e in traces for e in small.edges):
            return Witness(
                cols=u,
                rows=tuple(sorted(traces[e] for e in small.edges)),
                row_assignment=tuple(traces[e] for e in small.edges),
            )
    return None


def hg_contains(small, host):
    """Containment: distinct host traces d_i with f_i a subset of d_i.

    Distinctness is required of the traces (the edges of the intermediate
    sub-hypergraph), not merely of the host edges producing them.
    """
    if small.n > host.n:
        return None
    k = len(small.edges)
    for u in itertools.combinations(range(1, host.n + 1), small.n):
        traces = _traces_with_sources(host, u)
        items = sorted(traces.items(), key=lambda kv: kv[1])
        chosen = []
        used = set()

        def rec(i):
            if i == k:
                return True
            f = set(small.edges[i])
            for t, src in items:
                if t in used:
                    continue
                if f <= set(t):
                    used.add(t)
                    chosen.append(src)
                    if rec(i + 1):
                        return True
                    chosen.pop()
                    used.remove(t)
            return False

        if rec(0):
            return Witness(
                cols=u, rows=tuple(sorted(chosen)), row_assignment=tuple(chosen)
            )
    return None


def hg_contains_perm(hg, pi):
    """Containment of the k-permutation ``pi``: increasing vertices
    v_1<..<v_2k and distinct edges E_i with {v_i, v_{pi(i)+k}} inside E_i.

    None exactly when ``hg`` avoids ``pi``.
    """
    k = pi.size
    n = hg.n
    m = len(hg.edges)
    if 2 * k > n or k > m:
        return None if k > 0 else Witness()
    if k == 0:
        return Witness()

    # owner[j] = pattern edge (0-based) whose H(pi)-edge uses slot j+1
    owner = [0] * (2 * k)
    for i in range(1, k + 1):
        owner[i - 1] = i - 1
        owner[pi(i) + k - 1] = i - 1

    # bitsets over edge indices
    containing = [0] * (n + 1)
    for idx, emask in enumerate(hg.edge_masks):
        bit = 1 << idx
        for v in range(1, n + 1):
            if emask >> (v - 1) & 1:
                containing[v] |= bit

    full = (1 << m) - 1

    def matchable(cands):
        # injective system over <= k candidate bitsets: tiny backtracking
        order = sorted(range(k), key=lambda i: bin(cands[i]).count("1"))
        used = 0

        def rec(t):
            nonlocal used
            if t == k:
                return True
            avail = cands[order[t]] & ~used
            while avail:
                low = avail & -avail
                avail ^= low
                used |= low
                if rec(t + 1):
                    used ^= low
                    return True
                used ^= low
            return False

        return rec(0)

    verts = []
    cands = [full] * k

    def extend(prev):
        j = len(verts)
        if j == 2 * k:
            return True
        o = owner[j]
        for v in range(prev + 1, n - (2 * k - j) + 2):
            newmask = cands[o] & containing[v]
            if not newmask:
                continue
            old = cands[o]
            cands[o] = newmask
            if matchable(cands):
                verts.append(v)
                if extend(v):
                    return True
                verts.pop()
            cands[o] = old
        return False

    if not extend(0):
        return None

    # least injective assignment of edges for the found vertex tuple
    chosen = []
    used = set()

    def pick(i):
        if i == k:
            return True
        avail = cands[i]
        while avail:
            low = avail & -avail
            avail ^= low
            idx = low.bit_length()  # 1-based edge index
            if idx in used:
                continue
            used.add(idx)
            chosen.append(idx)
            if pick(i + 1):
                return True
            chosen.pop()
            used.remove(idx)
        return False

    pick(0)
    return Witness(
        cols=tuple(verts), rows=tuple(sorted(chosen)), row_assignment=tuple(chosen)
    )


def verify_hg_perm_witness(hg, pi, wit):
    k = pi.size
    verts = wit.cols
    assign = wit.row_assignment
    if k == 0:
        return verts == () and not assign
    if assign is None or len(assign) != k or len(verts) != 2 * k:
        return False
    if len(set(assign)) != k:
        return False
    if any(a >= b for a, b in zip(verts, verts[1:])):
        return False
    if verts[0] < 1 or verts[-1] > hg.n:
        return False
    for i in range(1, k + 1):
        idx = assign[i - 1]
        if not 1 <= idx <= len(hg.edges):
            return False
        edge = set(hg.edges[idx - 1])
        if not {verts[i - 1], verts[pi(i) + k - 1]} <= edge:
            return False
    return True


def avoids_perm(hg, pi):
    return hg_contains_perm(hg, pi) is None


# ---------------------------------------------------------------------------
# partitions


def sub_partition(part, subset):
    """Sub-partition induced by ``subset``: relabel, then drop empty classes."""
    s = tuple(int(v) for v in subset)
    if any(a >= b for a, b in zip(s, s[1:])):
        raise StructureError("subset not strictly increasing")
    if s and (s[0] < 1 or s[-1] > part.n):
        raise StructureError(f"subset not inside [{part.n}]")
    pos = {v: i + 1 for i, v in enumerate(s)}
    blocks = []
    for b in part.blocks:
        nb = tuple(pos[v] for v in b if v in pos)
        if nb:
            blocks.append(nb)
    return Partition(len(s), blocks, check=False)


def partition_contains(part, pattern):
    """Subset of [n] inducing ``pattern`` as a sub-partition, or None."""
    if pattern.n > part.n:
        return None
    for s in itertools.combinations(range(1, part.n + 1), pattern.n):
        if sub_partition(part, s) == pattern:
            return Witness(cols=s)
    return None
