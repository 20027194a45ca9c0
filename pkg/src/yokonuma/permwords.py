"""Symmetric-group combinatorics for the basis words.

Conventions (all 1-based, as in ``s_i = (i, i+1)`` and ``t_j``):

* A permutation is a tuple ``p`` of images, ``p[j-1] == p(j)``.
* Products compose as functions: ``(p*q)(j) = p(q(j))``, so the word
  ``s_a s_b`` is the permutation ``j -> s_a(s_b(j))``.
* A canonical word is a tuple of runs ``(i, k)``, each run standing for the
  descending product ``s_i s_{i-1} ... s_{i-k}``; run heads strictly
  increase from left to right.
* A framing vector is a tuple of residues mod ``d``.
"""

from __future__ import annotations

import itertools
import math
import os
from functools import lru_cache

Permutation = tuple
CanonicalWord = tuple
FramingVector = tuple

DEFAULT_MAX_DIM = int(os.environ.get("YTL_MAX_DIM", "200000"))


class ResourceCapExceeded(RuntimeError):
    pass


def check_cap(size: int, cap: int | None = None):
    cap = DEFAULT_MAX_DIM if cap is None else cap
    if size > cap:
        raise ResourceCapExceeded(f"{size} basis words exceed the cap of {cap}")


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def transposition(i: int, n: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise IndexError(f"s_{i} does not exist in S_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def compose(p: Permutation, q: Permutation) -> Permutation:
    if len(p) != len(q):
        raise ValueError("size mismatch")
    return tuple(p[j - 1] for j in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for j, pj in enumerate(p, start=1):
        inv[pj - 1] = j
    return tuple(inv)


def is_permutation(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def times_s(p: Permutation, i: int) -> Permutation:
    """``p * s_i``: swap the images of ``i`` and ``i+1``."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def s_times(i: int, p: Permutation) -> Permutation:
    """``s_i * p``: swap the values ``i`` and ``i+1``."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


@lru_cache(maxsize=None)
def length(p: Permutation) -> int:
    """Number of inversions."""
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


@lru_cache(maxsize=None)
def canonical_word(p: Permutation) -> CanonicalWord:
    """Runs ``(i, k)`` whose product of letters is ``p``.

    Peel strands from the top: for ``m = n, ..., 2`` the current permutation
    factors as ``p' * (s_{m-1} ... s_j)`` with ``j = p^{-1}(m)`` and ``p'``
    fixing ``m``.
    """
    cur = list(p)
    runs = []
    for m in range(len(p), 1, -1):
        j = cur.index(m) + 1
        if j == m:
            continue
        runs.append((m - 1, m - 1 - j))
        # cur <- cur * (s_{m-1} ... s_j)^{-1} = cur * s_j s_{j+1} ... s_{m-1}
        for letter in range(j, m):
            cur[letter - 1], cur[letter] = cur[letter], cur[letter - 1]
    runs.reverse()
    return tuple(runs)


def letters(word: CanonicalWord) -> tuple[int, ...]:
    return tuple(i - step for i, k in word for step in range(k + 1))


def word_to_perm(word_letters, n: int) -> Permutation:
    p = identity(n)
    for i in word_letters:
        p = times_s(p, i)
    return p


def feet(word: CanonicalWord) -> tuple[int, ...]:
    return tuple(i - k for i, k in word)


def in_sigma(p: Permutation) -> bool:
    """True when the run feet of the canonical word strictly increase."""
    f = feet(canonical_word(p))
    return all(a < b for a, b in zip(f, f[1:]))


@lru_cache(maxsize=None)
def perms_in_order(n: int) -> tuple[Permutation, ...]:
    """All of ``S_n`` sorted by length, then by the canonical letter sequence."""
    return tuple(
        sorted(itertools.permutations(range(1, n + 1)), key=lambda p: (length(p), letters(canonical_word(p))))
    )


def framings(d: int, n: int):
    return itertools.product(range(d), repeat=n)


def enumerate_S(d: int, n: int, cap: int | None = None):
    """Basis words ``(framing, permutation)`` of ``Y_{d,n}``, framing-major."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    check_cap(d ** n * math.factorial(n), cap)
    perms = perms_in_order(n)
    for f in framings(d, n):
        for p in perms:
            yield f, p


def enumerate_Sigma(d: int, n: int, cap: int | None = None):
    """The subfamily of :func:`enumerate_S` with strictly increasing feet.

    Yields ``(framing, canonical_word)`` pairs.
    """
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    check_cap(d ** n * catalan(n), cap)
    words = [canonical_word(p) for p in perms_in_order(n) if in_sigma(p)]
    for f in framings(d, n):
        for w in words:
            yield f, w


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def act(p: Permutation, f: FramingVector, d: int | None = None) -> FramingVector:
    """Move framing entry ``j`` to position ``p(j)``: ``p t^f p^-1``."""
    if len(p) != len(f):
        raise ValueError("size mismatch")
    out = [0] * len(f)
    for j, pj in enumerate(p):
        out[pj - 1] = f[j]
    if d is not None:
        out = [v % d for v in out]
    return tuple(out)


def framing(values, d: int) -> FramingVector:
    if d < 1:
        raise ValueError("d must be >= 1")
    return tuple(int(v) % d for v in values)


def format_word(word: CanonicalWord) -> str:
    return "".join("(" + " ".join(f"s{i - s}" for s in range(k + 1)) + ")" for i, k in word)


def format_framing(f: FramingVector) -> str:
    return "[" + ",".join(str(v) for v in f) + "]"
