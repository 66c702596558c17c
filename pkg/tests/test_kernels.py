"""Parity between the compiled kernels and their pure-Python twins.

Every public kernel function is driven with identical inputs through
both modules; outputs must match exactly, including enumeration order
and first-witness choices.  Skipped when the extension is not built.
"""

from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

import laminarmatroids._kernels_py as P
from _corpus import named_corpus, random_laminar_presentation, random_script
from laminarmatroids import run_script

K = pytest.importorskip("laminarmatroids._kernels")

SEED = 424242


def mask_pool(rng, count=40, n=10):
    return [rng.randrange(1, 1 << n) for _ in range(count)]


def matroid_pool():
    pool = [m for m in named_corpus(n_cap=8) if 0 < m.n <= 8]
    rng = random.Random(SEED)
    for _ in range(30):
        pool.append(run_script(random_script(rng, n_max=7)).to_explicit())
    return pool


MATROIDS = matroid_pool()


def test_backend_labels():
    assert P.BACKEND == "python"
    assert K.BACKEND == "compiled"
    assert P._MAX_N == K._MAX_N == 16


def test_popcount_and_submask_order():
    rng = random.Random(SEED)
    for _ in range(200):
        x = rng.randrange(0, 1 << 16)
        assert K.popcount(x) == P.popcount(x)
    for _ in range(60):
        u = rng.randrange(0, 1 << 12)
        for k in range(-1, P.popcount(u) + 2):
            assert list(K.submasks_of_size(u, k)) == list(
                P.submasks_of_size(u, k)
            )


def test_family_helpers_match():
    rng = random.Random(SEED + 1)
    for _ in range(60):
        fam = mask_pool(rng)
        x = rng.randrange(0, 1 << 10)
        assert K.contains_member(fam, x) == P.contains_member(fam, x)
        assert K.minimal_sets(fam) == P.minimal_sets(fam)
        assert K.verify_antichain(fam) == P.verify_antichain(fam)
        assert K.verify_elimination(fam, 10) == P.verify_elimination(fam, 10)


def test_matroid_kernels_match():
    rng = random.Random(SEED + 2)
    for m in MATROIDS:
        cs, n, r = list(m._masks), m.n, m.rank()
        full = (1 << n) - 1
        for _ in range(8):
            x = rng.randrange(0, full + 1)
            assert K.greedy_rank(cs, x, n) == P.greedy_rank(cs, x, n)
            assert K.closure_mask(cs, x, n) == P.closure_mask(cs, x, n)
        assert K.verify_antichain(cs) == P.verify_antichain(cs)
        assert K.verify_elimination(cs, n) == P.verify_elimination(cs, n)
        assert K.cocircuit_masks(n, cs, r) == P.cocircuit_masks(n, cs, r)
        assert K.cyclic_flat_masks(n, cs) == P.cyclic_flat_masks(n, cs)
        if r >= 1:
            assert K.truncation_circuits(n, cs, r) == P.truncation_circuits(
                n, cs, r
            )
        dm = rng.randrange(0, full + 1)
        tm = rng.randrange(0, full + 1) & ~dm
        assert K.minor_circuits(cs, dm, tm) == P.minor_circuits(cs, dm, tm)


def test_laminar_circuit_masks_match():
    rng = random.Random(SEED + 3)
    for _ in range(40):
        p = random_laminar_presentation(rng, n_max=8)
        n = len(p.elements)
        sets = [p.ground.mask_of(a) for a in p.members]
        caps = [p.capacity(a) for a in p.members]
        assert K.laminar_circuit_masks(n, sets, caps) == P.laminar_circuit_masks(
            n, sets, caps
        )


def test_iso_bijection_matches():
    rng = random.Random(SEED + 4)
    for m in MATROIDS[:40]:
        cs, n = list(m._masks), m.n
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = sorted(
            sum(1 << perm[i] for i in range(n) if c >> i & 1) for c in cs
        )
        assert K.iso_bijection(n, cs, n, relabeled) == P.iso_bijection(
            n, cs, n, relabeled
        )
        if len(cs) > 1:
            broken = sorted(cs[:-1] + [cs[-1] ^ 1 ^ (1 << (n - 1))])
            assert K.iso_bijection(n, cs, n, broken) == P.iso_bijection(
                n, cs, n, broken
            )


def test_find_minor_matches():
    targets = [m for m in MATROIDS if 3 <= m.n <= 5 and m._masks][:6]
    hosts = [m for m in MATROIDS if m.n >= 5][:25]
    for host in hosts:
        cs, n, r = list(host._masks), host.n, host.rank()
        for tgt in targets:
            got_k = K.find_minor(
                n, cs, r, tgt.n, list(tgt._masks), tgt.rank()
            )
            got_p = P.find_minor(
                n, cs, r, tgt.n, list(tgt._masks), tgt.rank()
            )
            assert got_k == got_p


def test_pure_env_var_forces_python_backend():
    code = (
        "from laminarmatroids._backend import backend_name;"
        "print(backend_name())"
    )
    env = dict(os.environ, LAMINARMATROIDS_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.stdout.strip() == "python"
    env.pop("LAMINARMATROIDS_PURE")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.stdout.strip() == "compiled"
