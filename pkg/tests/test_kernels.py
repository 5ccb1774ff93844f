import os
import subprocess
import sys

import numpy as np
import pytest

import ordpat as op
from ordpat import kernels

from conftest import random_matrix


def test_pair_contains_matches_reference(rng):
    for _ in range(300):
        n = rng.randint(1, 7)
        q = rng.randint(1, 5)
        v1, v2 = rng.randrange(1 << n), rng.randrange(1 << n)
        p1, p2 = rng.randrange(1 << q), rng.randrange(1 << q)
        host = op.BinaryMatrix.from_masks([v1, v2], n)
        pat = op.BinaryMatrix.from_masks([p1, p2], q)
        ref = op.matrix_contains(host, pat) is not None
        got = kernels.pair_contains_mask(v1, v2, n, p1, p2, q)
        assert bool(got) == ref


def test_row_contains_matches_reference(rng):
    for _ in range(300):
        n = rng.randint(1, 7)
        q = rng.randint(1, 5)
        v = rng.randrange(1 << n)
        p = rng.randrange(1 << q)
        host = op.BinaryMatrix.from_masks([v], n)
        pat = op.BinaryMatrix.from_masks([p], q)
        ref = op.matrix_contains(host, pat) is not None
        assert bool(kernels.row_contains_mask(v, n, p, q)) == ref


def test_jit_and_pure_paths_agree(rng):
    n = 4
    values = np.arange(1 << n, dtype=np.int64)
    pats2 = np.array(
        [[0b1010, 0b0101, 4], [0b11, 0b11, 2]], dtype=np.int64
    )
    pats1 = np.array([[0b111, 3]], dtype=np.int64)
    blocked_a = kernels.build_pair_blocked(values, n, pats2)
    blocked_b = kernels.pure_impl("build_pair_blocked")(values, n, pats2)
    assert (blocked_a == blocked_b).all()
    ok_a = kernels.build_single_ok(values, n, pats1)
    ok_b = kernels.pure_impl("build_single_ok")(values, n, pats1)
    assert (ok_a == ok_b).all()
    pops = np.array([bin(v).count("1") for v in range(1 << n)], dtype=np.int64)
    order = np.array(
        sorted(range(1 << n), key=lambda i: (-int(pops[i]), i)), dtype=np.int64
    )
    for m in (1, 2, 3, 4):
        for distinct in (False, True):
            best_a = kernels.search_best_total(
                pops, order, blocked_a, ok_a, m, distinct, -1
            )
            best_b = kernels.pure_impl("search_best_total")(
                pops, order, blocked_a, ok_a, m, distinct, -1
            )
            assert int(best_a) == int(best_b)
            if int(best_a) >= 0:
                out_a = np.zeros(m, dtype=np.int64)
                out_b = np.zeros(m, dtype=np.int64)
                assert kernels.search_lex_first(
                    pops, blocked_a, ok_a, m, distinct, int(best_a), out_a
                )
                assert kernels.pure_impl("search_lex_first")(
                    pops, blocked_a, ok_a, m, distinct, int(best_a), out_b
                )
                assert (out_a == out_b).all()


def test_search_matches_bruteforce(rng):
    import itertools

    n = 3
    values = np.arange(1 << n, dtype=np.int64)
    pops = np.array([bin(v).count("1") for v in range(1 << n)], dtype=np.int64)
    order = np.array(
        sorted(range(1 << n), key=lambda i: (-int(pops[i]), i)), dtype=np.int64
    )
    for trial in range(20):
        nb = rng.randint(0, 2)
        pats2 = np.array(
            [
                [rng.randrange(1 << 2), rng.randrange(1 << 2), 2]
                for _ in range(nb)
            ],
            dtype=np.int64,
        ).reshape(nb, 3)
        blocked = (
            kernels.build_pair_blocked(values, n, pats2)
            if nb
            else np.zeros((8, 8), dtype=np.uint8)
        )
        allowed0 = np.ones(8, dtype=np.uint8)
        m = rng.randint(1, 3)
        best = -1
        first = None
        for rows in itertools.product(range(8), repeat=m):
            if any(blocked[rows[i], rows[j]] for i in range(m) for j in range(i + 1, m)):
                continue
            tot = sum(int(pops[r]) for r in rows)
            if tot > best:
                best, first = tot, rows
        got = int(kernels.search_best_total(pops, order, blocked, allowed0, m, False, -1))
        assert got == best
        if best >= 0:
            out = np.zeros(m, dtype=np.int64)
            assert kernels.search_lex_first(pops, blocked, allowed0, m, False, best, out)
            assert tuple(int(x) for x in out) == first


def test_pure_env_flag_subprocess():
    code = (
        "import os\n"
        "assert os.environ.get('ORDPAT_PURE') == '1'\n"
        "from ordpat import kernels\n"
        "assert not kernels.JIT_ENABLED\n"
        "import ordpat as op\n"
        "v, w = op.extremal_ones(3, square=True, patterns=[op.s1_matrix()])\n"
        "print(v, w.row_masks)\n"
    )
    env = dict(os.environ, ORDPAT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.returncode == 0, out.stderr
    v, w = op.extremal_ones(3, square=True, patterns=[op.s1_matrix()])
    assert out.stdout.strip() == f"{v} {w.row_masks}"


def test_kernel_flag_reflects_env():
    if os.environ.get("ORDPAT_PURE") not in (None, "", "0"):
        assert not kernels.JIT_ENABLED
    else:
        assert kernels.JIT_ENABLED == (not kernels.PURE_REQUESTED)
