"""Exhaustive and pruned enumeration of avoidance classes, exact extremal
solvers, and small Ramsey-type searches.

All counts are exact Python integers.  Enumeration order is deterministic
(lexicographic over the decision tree) and work splitting partitions the
tree by prefix, so counts, maxima and witnesses are identical for any
worker count.  Every solver here has an independent brute-force companion
(`method="naive"` streams, `extremal_ones_oracle`) used by the tests.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import FeasibilityError, StructureError
from .structures import (
    BinaryMatrix,
    OrderedHypergraph,
    Partition,
    PatternClass,
    Permutation,
    hypergraph_of_partition,
    make_g,
    weight,
)
from .containment import (
    hg_contains,
    hg_contains_perm,
    is_induced_sub,
    is_sub_hypergraph,
    matrix_contains,
    matrix_contains_class,
    partition_contains,
    perm_contains,
)
from . import kernels

DEFAULT_BOUNDS = {"perm": 10, "graph": 7, "hypergraph": 5, "partition": 10}
EXTREMAL_BOUND = 7
ORACLE_BOUND = 4
RAMSEY_BOUND = 20

_UNIVERSES = ("perm", "graph", "hypergraph", "partition")
_MONOTONE_KINDS = frozenset({"perm", "sub", "contain", "class"})

_KIND_TYPES = {
    "perm": Permutation,
    "sub": OrderedHypergraph,
    "induced": (OrderedHypergraph, Partition),
    "contain": OrderedHypergraph,
    "class": PatternClass,
}


@dataclass(frozen=True)
class PropertySpec:
    """A property given by a universe, forbidden patterns, and caps.

    ``forbidden`` holds (kind, pattern) pairs: kind "perm" forbids
    containment of the permutation (via H(pi) semantics outside the perm
    universe), "sub"/"induced"/"contain" forbid a structure in the named
    mode, "class" forbids a matrix pattern class via the incidence matrix.
    ``edge_count_cap`` is an int or a function of n.
    """

    universe: str
    forbidden: tuple = ()
    degree_cap: int | None = None
    edge_size_cap: int | None = None
    edge_count_cap: object = None

    def __post_init__(self):
        if self.universe not in _UNIVERSES:
            raise StructureError(f"unknown universe {self.universe!r}")
        object.__setattr__(self, "forbidden", tuple(self.forbidden))
        allowed_kinds = {
            "perm": {"perm"},
            "graph": {"perm", "sub", "induced", "contain", "class"},
            "hypergraph": {"perm", "sub", "induced", "contain", "class"},
            "partition": {"perm", "induced"},
        }[self.universe]
        for kind, pat in self.forbidden:
            if kind not in allowed_kinds:
                raise StructureError(
                    f"pattern kind {kind!r} not supported in {self.universe} universe"
                )
            want = _KIND_TYPES[kind]
            if self.universe == "partition" and kind == "induced":
                want = Partition
            if not isinstance(pat, want):
                raise StructureError(f"pattern {pat!r} has wrong type for kind {kind!r}")
        if self.universe == "perm" and (
            self.degree_cap is not None
            or self.edge_size_cap is not None
            or self.edge_count_cap is not None
        ):
            raise StructureError("caps do not apply to the permutation universe")
        for cap in (self.degree_cap, self.edge_size_cap):
            if cap is not None and cap < 0:
                raise StructureError("caps must be >= 0")

    def max_edges(self, n):
        cap = self.edge_count_cap
        if cap is None:
            return None
        return cap(n) if callable(cap) else int(cap)


@dataclass(frozen=True)
class SpeedTable:
    """Exact counts |P_1|, ..., |P_N| for a property."""

    spec: PropertySpec
    counts: tuple = field(default=())

    def __iter__(self):
        return iter(self.counts)


def _check_bound(universe, n, force):
    bound = DEFAULT_BOUNDS[universe]
    if n > bound and not force:
        raise FeasibilityError(
            f"n={n} exceeds the {universe} bound {bound}; pass force=True to override"
        )
    if n < 0:
        raise StructureError("n must be >= 0")


def _contained(universe, structure, kind, pat):
    if universe == "perm":
        return perm_contains(structure, pat) is not None
    if universe == "partition":
        if kind == "perm":
            return hg_contains_perm(hypergraph_of_partition(structure), pat) is not None
        return partition_contains(structure, pat) is not None
    if kind == "perm":
        return hg_contains_perm(structure, pat) is not None
    if kind == "sub":
        return is_sub_hypergraph(pat, structure) is not None
    if kind == "induced":
        return is_induced_sub(pat, structure) is not None
    if kind == "contain":
        return hg_contains(pat, structure) is not None
    if kind == "class":
        from .structures import incidence_matrix

        return matrix_contains_class(incidence_matrix(structure), pat) is not None
    raise StructureError(f"unknown pattern kind {kind!r}")


def _caps_ok(spec, structure, n):
    if spec.universe == "perm":
        return True
    hg = (
        hypergraph_of_partition(structure)
        if spec.universe == "partition"
        else structure
    )
    if spec.edge_size_cap is not None and any(
        len(e) > spec.edge_size_cap for e in hg.edges
    ):
        return False
    if spec.degree_cap is not None:
        counts = {}
        for e in hg.edges:
            for v in e:
                counts[v] = counts.get(v, 0) + 1
                if counts[v] > spec.degree_cap:
                    return False
    cap = spec.max_edges(n)
    if cap is not None and len(hg.edges) > cap:
        return False
    return True


def satisfies_spec(spec, structure):
    """Full membership test: caps hold and no forbidden pattern is contained."""
    n = structure.size if spec.universe == "perm" else structure.n
    if not _caps_ok(spec, structure, n):
        return False
    return not any(
        _contained(spec.universe, structure, kind, pat) for kind, pat in spec.forbidden
    )


# ---------------------------------------------------------------------------
# streams


def _candidate_edges(universe, n, size_cap):
    if universe == "graph":
        return list(itertools.combinations(range(1, n + 1), 2))
    hi = n if size_cap is None else min(n, size_cap)
    out = []
    for r in range(2, hi + 1):
        out.extend(itertools.combinations(range(1, n + 1), r))
    out.sort()
    return out


def _set_stream(spec, n, prefix, pruned):
    """Graphs/hypergraphs on [n] by include/exclude DFS over candidate
    edges in lexicographic order (exclude branch first)."""
    cands = _candidate_edges(spec.universe, n, spec.edge_size_cap)
    mono = [fp for fp in spec.forbidden if fp[0] in _MONOTONE_KINDS]
    induced = [fp for fp in spec.forbidden if fp[0] == "induced"]
    edge_cap = spec.max_edges(n)
    chosen = []

    def incr_ok():
        h = OrderedHypergraph(n, tuple(chosen), check=False)
        if edge_cap is not None and len(chosen) > edge_cap:
            return False
        if spec.degree_cap is not None or spec.edge_size_cap is not None:
            from .structures import satisfies_k_l

            if not satisfies_k_l(h, spec.degree_cap, spec.edge_size_cap):
                return False
        return not any(_contained(spec.universe, h, k, p) for k, p in mono)

    for dec, cand in zip(prefix, cands):
        if dec:
            chosen.append(cand)
            if pruned and not incr_ok():
                return

    def walk(i):
        if i == len(cands):
            h = OrderedHypergraph(n, tuple(chosen), check=False)
            if pruned:
                if not any(_contained(spec.universe, h, k, p) for k, p in induced):
                    yield h
            elif satisfies_spec(spec, h):
                yield h
            return
        yield from walk(i + 1)
        chosen.append(cands[i])
        if not pruned or incr_ok():
            yield from walk(i + 1)
        chosen.pop()

    yield from walk(len(prefix))


def _prefix_contains_using_last(vals, pat):
    k = pat.size
    top = len(vals)
    if k == 0:
        return True
    if k > top:
        return False
    pv = pat.values
    last = top - 1
    for combo in itertools.combinations(range(top - 1), k - 1):
        pos = combo + (last,)
        if all(
            (vals[pos[a]] < vals[pos[b]]) == (pv[a] < pv[b])
            for a in range(k)
            for b in range(a + 1, k)
        ):
            return True
    return False


def _perm_stream(spec, n, prefix, pruned):
    pats = [p for _, p in spec.forbidden]
    vals = []
    used = [False] * (n + 1)

    def place_ok():
        return not any(_prefix_contains_using_last(vals, p) for p in pats)

    for v in prefix:
        vals.append(v)
        used[v] = True
        if pruned and not place_ok():
            return

    def walk():
        if len(vals) == n:
            p = Permutation(tuple(vals), check=False)
            if pruned or satisfies_spec(spec, p):
                yield p
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            vals.append(v)
            used[v] = True
            if not pruned or place_ok():
                yield from walk()
            vals.pop()
            used[v] = False

    yield from walk()


def _partition_stream(spec, n, prefix, pruned):
    blocks = []

    def current(k):
        return Partition(k, [b for b in blocks], check=False)

    def place_ok(k):
        p = current(k)
        if not _caps_ok(spec, p, n):
            return False
        return not any(
            _contained("partition", p, kind, pat) for kind, pat in spec.forbidden
        )

    def assign(elem, digit):
        if digit <= len(blocks):
            blocks[digit - 1] = blocks[digit - 1] + (elem,)
        else:
            blocks.append((elem,))

    def unassign(elem, digit):
        if blocks[digit - 1] == (elem,):
            blocks.pop()
        else:
            blocks[digit - 1] = blocks[digit - 1][:-1]

    ok = True
    for elem, digit in enumerate(prefix, start=1):
        assign(elem, digit)
        if pruned and not place_ok(elem):
            ok = False
            break
    if not ok:
        return

    def walk(elem):
        if elem > n:
            p = current(n)
            if pruned or satisfies_spec(spec, p):
                yield p
            return
        for digit in range(1, len(blocks) + 2):
            assign(elem, digit)
            if not pruned or place_ok(elem):
                yield from walk(elem + 1)
            unassign(elem, digit)

    yield from walk(len(prefix) + 1)


def _stream(spec, n, prefix, pruned):
    if spec.universe == "perm":
        return _perm_stream(spec, n, prefix, pruned)
    if spec.universe == "partition":
        return _partition_stream(spec, n, prefix, pruned)
    return _set_stream(spec, n, prefix, pruned)


def _task_prefixes(spec, n, jobs):
    """Decision prefixes partitioning the search tree, in DFS visit order."""
    if spec.universe == "perm":
        return [(v,) for v in range(1, n + 1)] or [()]
    if spec.universe == "partition":
        depth = min(max(n - 1, 0), 3)
        prefixes = [(1,)] if n >= 1 else [()]
        for _ in range(depth):
            nxt = []
            for p in prefixes:
                for d in range(1, max(p) + 2):
                    nxt.append(p + (d,))
            prefixes = nxt
        return prefixes
    m = len(_candidate_edges(spec.universe, n, spec.edge_size_cap))
    depth = 0
    while 2**depth < 2 * jobs and depth < min(m, 6):
        depth += 1
    return [tuple(bits) for bits in itertools.product((0, 1), repeat=depth)]


def _run_tasks(tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        futures = [ex.submit(t) for t in tasks]
        return [f.result() for f in futures]


def enumerate_structures(spec, n, *, force=False, jobs=1, method="pruned"):
    """Stream exactly the structures on [n] satisfying ``spec``.

    ``method="naive"`` generates the whole universe and filters at the
    leaves; it is the independent oracle for the pruned search and yields
    the same stream in the same order.
    """
    _check_bound(spec.universe, n, force)
    pruned = method == "pruned"
    if method not in ("pruned", "naive"):
        raise StructureError(f"unknown method {method!r}")
    if jobs <= 1:
        yield from _stream(spec, n, (), pruned)
        return
    prefixes = _task_prefixes(spec, n, jobs)
    tasks = [
        (lambda p=p: list(_stream(spec, n, p, pruned))) for p in prefixes
    ]
    for chunk in _run_tasks(tasks, jobs):
        yield from chunk


def count_structures(spec, n, *, force=False, jobs=1, method="pruned"):
    """Exact number of structures on [n] in the property."""
    _check_bound(spec.universe, n, force)
    pruned = method == "pruned"
    prefixes = _task_prefixes(spec, n, jobs) if jobs > 1 else [()]
    tasks = [
        (lambda p=p: sum(1 for _ in _stream(spec, n, p, pruned))) for p in prefixes
    ]
    return sum(_run_tasks(tasks, jobs))


def speed_table(spec, n_max, *, force=False, jobs=1, method="pruned"):
    counts = tuple(
        count_structures(spec, n, force=force, jobs=jobs, method=method)
        for n in range(1, n_max + 1)
    )
    return SpeedTable(spec=spec, counts=counts)


# ---------------------------------------------------------------------------
# the matching family G(n, A, pi)


def g_family(n):
    """All distinct G(n, A, pi): H(pi) embedded on a 2k-subset A of [n]."""
    seen = set()
    for k in range(n // 2 + 1):
        for a in itertools.combinations(range(1, n + 1), 2 * k):
            for vals in itertools.permutations(range(1, k + 1)):
                g = make_g(n, a, Permutation(vals, check=False))
                if g not in seen:
                    seen.add(g)
                    yield g


def g_family_speed(n_max):
    return tuple(sum(1 for _ in g_family(n)) for n in range(1, n_max + 1))


# ---------------------------------------------------------------------------
# extremal number of ones


def _normalize_patterns(patterns):
    pats = tuple(patterns)
    for p in pats:
        if not isinstance(p, (BinaryMatrix, PatternClass)):
            raise StructureError(f"pattern {p!r} is not a matrix or class")
    return pats


def _avoids_all(bm, patterns):
    for p in patterns:
        if isinstance(p, PatternClass):
            if matrix_contains_class(bm, p) is not None:
                return False
        elif matrix_contains(bm, p) is not None:
            return False
    return True


def _split_small_patterns(patterns):
    """(single-row masks, ordered-pair masks, leftovers) for the kernel path."""
    singles, pairs, generic = [], [], []
    for p in patterns:
        if isinstance(p, PatternClass):
            cm = p.canonical_matrix()
            if p.k == 1:
                singles.append((cm.row_masks[0], cm.n))
            elif p.k == 2:
                r1, r2 = cm.row_masks
                pairs.append((r1, r2, cm.n))
                pairs.append((r2, r1, cm.n))
            else:
                generic.append(p)
        else:
            if p.m == 1:
                singles.append((p.row_masks[0], p.n))
            elif p.m == 2:
                pairs.append((p.row_masks[0], p.row_masks[1], p.n))
            else:
                generic.append(p)
    return singles, pairs, generic


def _kernel_fixed_m(n, m, singles, pairs, max_row_weight, distinct_rows, jobs):
    values = [
        v
        for v in range(1 << n)
        if max_row_weight is None or bin(v).count("1") <= max_row_weight
    ]
    varr = np.array(values, dtype=np.int64)
    pops = np.array([bin(v).count("1") for v in values], dtype=np.int64)
    if singles:
        p1 = np.array([[p, q] for p, q in singles], dtype=np.int64)
        allowed0 = kernels.build_single_ok(varr, n, p1)
    else:
        allowed0 = np.ones(len(values), dtype=np.uint8)
    if pairs:
        p2 = np.array(pairs, dtype=np.int64)
        blocked = kernels.build_pair_blocked(varr, n, p2)
    else:
        blocked = np.zeros((len(values), len(values)), dtype=np.uint8)
    order = np.array(
        sorted(range(len(values)), key=lambda i: (-int(pops[i]), i)), dtype=np.int64
    )
    if jobs <= 1:
        best = int(kernels.search_best_total(pops, order, blocked, allowed0, m, distinct_rows, -1))
    else:
        firsts = [i for i in range(len(values)) if allowed0[i]]
        tasks = [
            (
                lambda i=i: int(
                    kernels.search_best_total(pops, order, blocked, allowed0, m, distinct_rows, i)
                )
            )
            for i in firsts
        ]
        results = _run_tasks(tasks, jobs)
        best = max(results, default=-1)
    if best < 0:
        return None
    out = np.zeros(m, dtype=np.int64)
    found = kernels.search_lex_first(pops, blocked, allowed0, m, distinct_rows, best, out)
    assert found
    masks = [values[int(i)] for i in out]
    return best, BinaryMatrix.from_masks(masks, n)


def _fixed_m_generic(n, m, patterns, distinct_rows, max_row_weight, jobs):
    all_values = [
        v
        for v in range(1 << n)
        if max_row_weight is None or bin(v).count("1") <= max_row_weight
    ]

    def partial_ok(masks):
        return _avoids_all(BinaryMatrix.from_masks(masks, n), patterns)

    values = [v for v in all_values if partial_ok((v,))]
    if m == 0:
        return 0, BinaryMatrix.from_masks([], n)
    if not values:
        return None
    pops = {v: bin(v).count("1") for v in values}
    cap = max(pops.values())
    desc = sorted(values, key=lambda v: (-pops[v], v))

    def best_from(forced_first):
        # per-task state, safe under the thread-pool splitting
        best = -1

        def dfs(masks, cur):
            nonlocal best
            level = len(masks)
            if level == m:
                if cur > best:
                    best = cur
                return
            for v in desc:
                if distinct_rows and v in masks:
                    continue
                if forced_first is not None and level == 0 and v != forced_first:
                    continue
                if cur + pops[v] + (m - level - 1) * cap <= best:
                    break
                if not partial_ok(masks + (v,)):
                    continue
                dfs(masks + (v,), cur + pops[v])

        dfs((), 0)
        return best

    if jobs <= 1:
        best = best_from(None)
    else:
        results = _run_tasks([(lambda v=v: best_from(v)) for v in values], jobs)
        best = max(results, default=-1)
    if best < 0:
        return None

    target = best

    def dfs_lex(masks, cur):
        level = len(masks)
        if level == m:
            return masks if cur == target else None
        for v in values:
            if distinct_rows and v in masks:
                continue
            if cur + pops[v] + (m - level - 1) * cap < target:
                continue
            if not partial_ok(masks + (v,)):
                continue
            got = dfs_lex(masks + (v,), cur + pops[v])
            if got is not None:
                return got
        return None

    masks = dfs_lex((), 0)
    assert masks is not None
    return best, BinaryMatrix.from_masks(list(masks), n)


def _free_m_classes(n, classes, max_row_weight, jobs):
    all_values = [
        v
        for v in range(1 << n)
        if max_row_weight is None or bin(v).count("1") <= max_row_weight
    ]

    def subset_ok(masks):
        return _avoids_all(BinaryMatrix.from_masks(masks, n), classes)

    values = [v for v in all_values if subset_ok((v,))]
    pops = [bin(v).count("1") for v in values]
    suffix = [0] * (len(values) + 1)
    for i in range(len(values) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + pops[i]
    best = -1

    def dfs_best(i, masks, cur):
        nonlocal best
        if cur > best:
            best = cur
        if i == len(values) or cur + suffix[i] <= best:
            return
        if subset_ok(masks + (values[i],)):
            dfs_best(i + 1, masks + (values[i],), cur + pops[i])
        dfs_best(i + 1, masks, cur)

    dfs_best(0, (), 0)
    target = best

    def dfs_lex(i, masks, cur):
        if i == len(values):
            return masks if cur == target else None
        if cur + suffix[i] < target:
            return None
        if subset_ok(masks + (values[i],)):
            got = dfs_lex(i + 1, masks + (values[i],), cur + pops[i])
            if got is not None:
                return got
        return dfs_lex(i + 1, masks, cur)

    masks = dfs_lex(0, (), 0)
    assert masks is not None
    return best, BinaryMatrix.from_masks(list(masks), n)


def extremal_ones(
    n,
    m=None,
    patterns=(),
    *,
    distinct_rows=False,
    max_row_weight=None,
    square=False,
    force=False,
    jobs=1,
):
    """Exact maximum number of ones over matrices of the given shape avoiding
    every pattern, with the lexicographically least witness attaining it.

    Shapes: ``square`` fixes an n x n matrix; otherwise ``m`` fixes the row
    count; with ``m`` omitted the row count is free, which requires
    ``distinct_rows`` and class patterns only (free-m search is over row
    sets, so patterns must be row-order insensitive).
    """
    if n > EXTREMAL_BOUND and not force:
        raise FeasibilityError(
            f"n={n} exceeds the extremal bound {EXTREMAL_BOUND}; pass force=True"
        )
    if n < 0:
        raise StructureError("n must be >= 0")
    patterns = _normalize_patterns(patterns)
    if square:
        m = n
    if m is None:
        if not distinct_rows:
            raise StructureError("free row count requires distinct_rows")
        if not all(isinstance(p, PatternClass) for p in patterns):
            raise StructureError("free row count requires class patterns only")
        got = _free_m_classes(n, patterns, max_row_weight, jobs)
    else:
        if m < 0:
            raise StructureError("m must be >= 0")
        if m == 0:
            return 0, BinaryMatrix.from_masks([], n)
        singles, pairs, generic = _split_small_patterns(patterns)
        if not generic and n <= 12:
            got = _kernel_fixed_m(
                n, m, singles, pairs, max_row_weight, distinct_rows, jobs
            )
        else:
            got = _fixed_m_generic(n, m, patterns, distinct_rows, max_row_weight, jobs)
    if got is None:
        raise StructureError("no matrix of this shape avoids the patterns")
    value, wit = got
    assert _avoids_all(wit, patterns)
    return int(value), wit


def extremal_ones_oracle(
    n,
    m=None,
    patterns=(),
    *,
    distinct_rows=False,
    max_row_weight=None,
    square=False,
    force=False,
):
    """Exhaustive reference for extremal_ones; independent of the solver."""
    if not force and (n > ORACLE_BOUND or (m is not None and m > 5)):
        raise FeasibilityError("oracle sizes capped at n<=4, m<=5; pass force=True")
    patterns = _normalize_patterns(patterns)
    if square:
        m = n
    cache = {}

    def avoided(masks):
        bm = None
        for p in patterns:
            if isinstance(p, BinaryMatrix) and p.m in (1, 2):
                hit = False
                idx = range(len(masks))
                tuples = (
                    [(i,) for i in idx]
                    if p.m == 1
                    else list(itertools.combinations(idx, 2))
                )
                for rows in tuples:
                    key = (tuple(masks[i] for i in rows), p)
                    got = cache.get(key)
                    if got is None:
                        sub = BinaryMatrix.from_masks([masks[i] for i in rows], n)
                        got = matrix_contains(sub, p) is not None
                        cache[key] = got
                    if got:
                        hit = True
                        break
                if hit:
                    return False
            elif isinstance(p, PatternClass) and p.k in (1, 2):
                hit = False
                idx = range(len(masks))
                tuples = (
                    [(i,) for i in idx]
                    if p.k == 1
                    else list(itertools.combinations(idx, 2))
                )
                for rows in tuples:
                    key = (tuple(sorted(masks[i] for i in rows)), p)
                    got = cache.get(key)
                    if got is None:
                        sub = BinaryMatrix.from_masks(
                            sorted(masks[i] for i in rows), n
                        )
                        got = matrix_contains_class(sub, p) is not None
                        cache[key] = got
                    if got:
                        hit = True
                        break
                if hit:
                    return False
            else:
                if bm is None:
                    bm = BinaryMatrix.from_masks(list(masks), n)
                if isinstance(p, PatternClass):
                    if matrix_contains_class(bm, p) is not None:
                        return False
                elif matrix_contains(bm, p) is not None:
                    return False
        return True

    row_values = [
        v
        for v in range(1 << n)
        if max_row_weight is None or bin(v).count("1") <= max_row_weight
    ]
    best, best_masks = -1, None
    if m is None:
        if not distinct_rows:
            raise StructureError("free row count requires distinct_rows")
        for bits in range(1 << len(row_values)):
            masks = tuple(
                row_values[i] for i in range(len(row_values)) if bits >> i & 1
            )
            if not avoided(masks):
                continue
            tot = sum(bin(v).count("1") for v in masks)
            if tot > best or (tot == best and masks < best_masks):
                best, best_masks = tot, masks
    else:
        for masks in itertools.product(row_values, repeat=m):
            if distinct_rows and len(set(masks)) != m:
                continue
            if not avoided(masks):
                continue
            tot = sum(bin(v).count("1") for v in masks)
            if tot > best:
                best, best_masks = tot, masks
    if best < 0:
        raise StructureError("no matrix of this shape avoids the patterns")
    return best, BinaryMatrix.from_masks(list(best_masks), n)


# ---------------------------------------------------------------------------
# extremal weight of avoiding hypergraphs


def max_weight_avoiding(n, pi, *, force=False, jobs=1):
    """Maximum of ||H|| over hypergraphs on [n] avoiding the permutation pi,
    with the lexicographically least witness."""
    _check_bound("hypergraph", n, force)
    cands = _candidate_edges("hypergraph", n, None)
    sizes = [len(e) for e in cands]
    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]

    def still_avoids(edges):
        return (
            hg_contains_perm(OrderedHypergraph(n, edges, check=False), pi) is None
        )

    best = -1

    def dfs_best(i, edges, cur):
        nonlocal best
        if cur > best:
            best = cur
        if i == len(cands) or cur + suffix[i] <= best:
            return
        new = edges + (cands[i],)
        if still_avoids(new):
            dfs_best(i + 1, new, cur + sizes[i])
        dfs_best(i + 1, edges, cur)

    dfs_best(0, (), 0)
    target = best

    def dfs_lex(i, edges, cur):
        if i == len(cands):
            return edges if cur == target else None
        if cur + suffix[i] < target:
            return None
        new = edges + (cands[i],)
        if still_avoids(new):
            got = dfs_lex(i + 1, new, cur + sizes[i])
            if got is not None:
                return got
        return dfs_lex(i + 1, edges, cur)

    edges = dfs_lex(0, (), 0)
    wit = OrderedHypergraph(n, edges, check=False)
    assert weight(wit) == target
    return target, wit


# ---------------------------------------------------------------------------
# Ramsey helpers


def _adjacency_masks(g):
    if not g.is_graph:
        raise StructureError("expected an ordered graph")
    adj = [0] * (g.n + 1)
    for a, b in g.edges:
        adj[a] |= 1 << (b - 1)
        adj[b] |= 1 << (a - 1)
    return adj


def ramsey_find(g, size, *, force=False):
    """A clique or an independent set of ``size`` vertices, tagged which;
    None when neither exists.  Cliques are searched first, in
    lexicographic vertex order."""
    if size < 1:
        raise StructureError("size must be >= 1")
    if g.n > RAMSEY_BOUND and not force:
        raise FeasibilityError(f"graph exceeds the Ramsey bound {RAMSEY_BOUND}")
    adj = _adjacency_masks(g)

    def homogeneous(want_edges):
        for combo in itertools.combinations(range(1, g.n + 1), size):
            ok = True
            for a, b in itertools.combinations(combo, 2):
                if bool(adj[a] >> (b - 1) & 1) != want_edges:
                    ok = False
                    break
            if ok:
                return combo
        return None

    got = homogeneous(True)
    if got is not None:
        return ("clique", got)
    got = homogeneous(False)
    if got is not None:
        return ("independent", got)
    return None


def bipartite_ramsey_find(g, part_a, part_b, size, *, force=False):
    """A complete or empty induced bipartite pair of ``size`` + ``size``
    vertices between the disjoint parts, complete searched first."""
    if size < 1:
        raise StructureError("size must be >= 1")
    if g.n > RAMSEY_BOUND and not force:
        raise FeasibilityError(f"graph exceeds the Ramsey bound {RAMSEY_BOUND}")
    pa = tuple(part_a)
    pb = tuple(part_b)
    if set(pa) & set(pb):
        raise StructureError("parts must be disjoint")
    adj = _adjacency_masks(g)

    def homogeneous(want_edges):
        for ca in itertools.combinations(pa, size):
            for cb in itertools.combinations(pb, size):
                ok = True
                for a in ca:
                    for b in cb:
                        if bool(adj[a] >> (b - 1) & 1) != want_edges:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    return ca, cb
        return None

    got = homogeneous(True)
    if got is not None:
        return ("complete", got[0], got[1])
    got = homogeneous(False)
    if got is not None:
        return ("empty", got[0], got[1])
    return None
