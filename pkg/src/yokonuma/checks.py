"""Verification suites shared by the command line and the test-suite."""

from __future__ import annotations

import random

from . import permwords as pw
from . import yhecke as yh
from .scalars import ONE, U


def braid_moves(word: tuple[int, ...]):
    """Words obtained from ``word`` by one braid or commutation move."""
    out = []
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        if abs(a - b) > 1:
            out.append(word[:pos] + (b, a) + word[pos + 2:])
        if pos + 2 < len(word) and abs(a - b) == 1 and word[pos + 2] == a:
            out.append(word[:pos] + (b, a, b) + word[pos + 3:])
    return out


def presentation_suite(d: int, n: int, triples: int = 500, seed: int = 0) -> dict:
    """Defining relations of ``Y_{d,n}`` checked on computed elements.

    Returns failure counts per check; every count must be zero.
    """
    rng = random.Random(seed)
    one = yh.unit(d, n)
    g = {i: yh.gen_g(i, d, n) for i in range(1, n)}
    fails = {k: 0 for k in ("braid", "commute", "idempotent", "e_g_commute", "inverse",
                            "quadratic", "word_independence", "associativity", "left_right")}
    counts = dict.fromkeys(fails, 0)

    def tally(name, ok):
        counts[name] += 1
        if not ok:
            fails[name] += 1

    for i in g:
        if i + 1 in g:
            tally("braid", yh.product(g[i], g[i + 1], g[i]) == yh.product(g[i + 1], g[i], g[i + 1]))
        for j in g:
            if j > i + 1:
                tally("commute", yh.mul(g[i], g[j]) == yh.mul(g[j], g[i]))
        e = yh.idempotent_e(i, d, n)
        tally("idempotent", yh.mul(e, e) == e)
        tally("e_g_commute", yh.mul(e, g[i]) == yh.mul(g[i], e))
        inv = yh.g_inverse(i, d, n)
        tally("inverse", yh.mul(g[i], inv) == one and yh.mul(inv, g[i]) == one)
        rhs = one + e.scale(U - ONE) + yh.mul(e, g[i]).scale(U - ONE)
        tally("quadratic", yh.mul(g[i], g[i]) == rhs)
    for p in pw.perms_in_order(n):
        canon = pw.letters(pw.canonical_word(p))
        ref = yh.basis_element(d, n, (0,) * n, p)
        for alt in braid_moves(canon):
            tally("word_independence", yh.eval_letters([("g", i) for i in alt], d, n) == ref)
    for _ in range(triples):
        a, b, c = (yh.basis_element(d, n, *yh.random_basis_word(d, n, rng)) for _ in range(3))
        tally("associativity", yh.mul(yh.mul(a, b), c) == yh.mul(a, yh.mul(b, c)))
    for _ in range(max(1, triples // 10)):
        a = yh.random_element(d, n, rng)
        for i in g:
            tally("left_right", yh.left_mul_g(a, i) == yh.mul(g[i], a))
    return {"d": d, "n": n, "seed": seed, "checked": counts, "failures": fails, "ok": not any(fails.values())}
