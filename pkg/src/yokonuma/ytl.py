"""The quotient ``YTL_{d,n}(u)`` of ``Y_{d,n}(u)`` by the linear relations

    r_i = g_i g_{i+1} g_i + g_i g_{i+1} + g_{i+1} g_i + g_i + g_{i+1} + 1.

Two independent routes to the quotient live here:

* :func:`reduce_to_sigma` rewrites words onto the restricted family
  (canonical words with strictly increasing run feet);
* :func:`ideal_basis_span` lists the two-sided ideal as a matrix whose rank
  gives the quotient dimension.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from . import permwords as pw
from . import yhecke as yh
from .exactlinalg import ExactMatrix, rank_over_u, rank_rational, rank_symbolic
from .scalars import ONE, U, Laurent

DEFAULT_MAX_STEPS = int(os.environ.get("YTL_MAX_STEPS", "1000000"))


class RewriteError(RuntimeError):
    pass


def linear_relation(i: int, d: int, n: int) -> yh.AlgebraElement:
    if not 1 <= i <= n - 2:
        raise IndexError(f"no linear relation r_{i} for n={n}")
    gi, gj = yh.gen_g(i, d, n), yh.gen_g(i + 1, d, n)
    gij = yh.mul(gi, gj)
    return yh.mul(gij, gi) + gij + yh.mul(gj, gi) + gi + gj + yh.unit(d, n)


# --- rewriting onto Sigma -------------------------------------------------

_BRAID_CACHE: dict = {}


def braid_factor(p: pw.Permutation):
    """Split ``p = x * (s_k s_{k+1} s_k) * y`` with lengths adding.

    Returns ``(x, k, y_letters)`` or ``None`` when no reduced word of ``p``
    contains a braid triple.  ``y`` is built from right descents, so the
    search visits each permutation below ``p`` in weak order at most once.
    """
    if p in _BRAID_CACHE:
        return _BRAID_CACHE[p]
    n = len(p)
    seen = set()
    stack = [(p, ())]
    found = None
    while stack:
        q, y = stack.pop()
        if q in seen:
            continue
        seen.add(q)
        descents = [i for i in range(1, n) if q[i - 1] > q[i]]
        for k in descents:
            if k + 1 in descents:
                # q = x * s_k s_{k+1} s_k
                x = pw.times_s(pw.times_s(pw.times_s(q, k), k + 1), k)
                found = (x, k, y)
                break
        if found:
            break
        for i in reversed(descents):
            stack.append((pw.times_s(q, i), (i,) + y))
    _BRAID_CACHE[p] = found
    return found


_SIGMA_CACHE: dict = {}


def _tail(k: int, d: int, n: int) -> yh.AlgebraElement:
    """``g_k g_{k+1} + g_{k+1} g_k + g_k + g_{k+1} + 1`` as a right factor."""
    gk, gl = yh.gen_g(k, d, n), yh.gen_g(k + 1, d, n)
    return yh.mul(gk, gl) + yh.mul(gl, gk) + gk + gl + yh.unit(d, n)


def _reduce_perm(d: int, n: int, p: pw.Permutation, budget: list) -> dict:
    """Sigma-expansion of ``g_p`` (zero framing) as a term dict."""
    key = (d, n, p)
    if key in _SIGMA_CACHE:
        return _SIGMA_CACHE[key]
    if pw.in_sigma(p):
        out = {((0,) * n, p): ONE}
        _SIGMA_CACHE[key] = out
        return out
    split = braid_factor(p)
    if split is None:
        raise RewriteError(f"{pw.format_word(pw.canonical_word(p))} has no braid triple but is outside Sigma")
    x, k, y = split
    budget[0] -= 1
    if budget[0] < 0:
        raise RewriteError("rewriting step cap exceeded")
    # g_p = g_x (g_k g_{k+1} g_k) g_y  ==  -g_x (tail) g_y  mod the ideal
    expr = yh.left_mul_word((0,) * n, x, _tail(k, d, n))
    for letter in y:
        expr = yh.right_mul_g(expr, letter)
    level = pw.length(p)
    out: dict = {}
    for (r, q), c in expr.terms.items():
        if pw.length(q) >= level:
            raise RewriteError(f"rewrite of {p} did not lower length (got {q})")
        sub = _reduce_perm(d, n, q, budget)
        _add_shifted(out, sub, r, -c, d)
    _SIGMA_CACHE[key] = out
    return out


def _add_shifted(out: dict, terms: dict, shift, scale, d: int):
    for (r, q), c in terms.items():
        k = (tuple((a + b) % d for a, b in zip(r, shift)), q)
        v = c * scale
        if k in out:
            s = out[k] + v
            if s:
                out[k] = s
            else:
                del out[k]
        elif v:
            out[k] = v


def reduce_to_sigma(a: yh.AlgebraElement, max_steps: int | None = None) -> yh.AlgebraElement:
    """Image of ``a`` modulo the linear relations, written over Sigma.

    Each rewrite replaces one braid triple ``g_k g_{k+1} g_k`` inside a
    length-additive factorisation by minus the five shorter terms, so the
    length of every produced word drops strictly; results per permutation are
    memoised and framings ride along on the left.
    """
    budget = [DEFAULT_MAX_STEPS if max_steps is None else max_steps]
    out: dict = {}
    for (r, p), c in a.terms.items():
        _add_shifted(out, _reduce_perm(a.d, a.n, p, budget), r, c, a.d)
    return yh.AlgebraElement._raw(a.d, a.n, out)


def is_sigma_supported(a: yh.AlgebraElement) -> bool:
    return all(pw.in_sigma(p) for _, p in a.terms)


def ytl_mul(a: yh.AlgebraElement, b: yh.AlgebraElement) -> yh.AlgebraElement:
    return reduce_to_sigma(yh.mul(a, b))


# --- the ideal as a matrix -------------------------------------------------


def basis_index(d: int, n: int, cap: int | None = None) -> dict:
    return {w: i for i, w in enumerate(pw.enumerate_S(d, n, cap))}


def coordinates(a: yh.AlgebraElement, index: dict) -> dict:
    return {index[k]: c for k, c in a.terms.items()}


def ideal_products(d: int, n: int, cap: int | None = None):
    """Yield ``(i, a_word, b_word, a * r_i * b)`` over all basis words."""
    words = list(pw.enumerate_S(d, n, cap))
    for i in range(1, n - 1):
        r = linear_relation(i, d, n)
        right = [(b, yh.right_mul_word(r, *b)) for b in words]
        for a in words:
            for b, rb in right:
                yield i, a, b, yh.left_mul_word(a[0], a[1], rb)


def ideal_basis_span(d: int, n: int, cap: int | None = None) -> ExactMatrix:
    """Rows: coordinates over S of ``a * r_i * b`` for all basis words."""
    index = basis_index(d, n, cap)
    rows = [coordinates(x, index) for _, _, _, x in ideal_products(d, n, cap)]
    return ExactMatrix(rows, len(index))


def dim_formula(d: int, n: int) -> int:
    return d ** n * pw.catalan(n)


@dataclass
class DimensionReport:
    d: int
    n: int
    dim_formula: int
    dim_rank: int | None
    ideal_rank: int | None
    rank_detail: dict | None

    @property
    def agree(self) -> bool:
        return self.dim_rank == self.dim_formula

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "n": self.n,
            "dim_formula": self.dim_formula,
            "dim_rank": self.dim_rank,
            "ideal_rank": self.ideal_rank,
            "agree": self.agree if self.dim_rank is not None else None,
        }
        if self.rank_detail is not None:
            out["rank_report"] = self.rank_detail
        return out


def ytl_dimension(d: int, n: int, method: str = "formula", samples: int = 3, seed: int = 0,
                  symbolic: bool = False, cap: int | None = None):
    """Quotient dimension via the closed formula, the ideal rank, or both.

    ``method='formula'`` and ``'rank'`` return an ``int``; ``'both'``
    returns a :class:`DimensionReport`.
    """
    if method == "formula":
        return dim_formula(d, n)
    if method not in ("rank", "both"):
        raise ValueError(f"unknown method {method!r}")
    full = d ** n * math.factorial(n)
    m = ideal_basis_span(d, n, cap)
    if symbolic:
        rank = rank_symbolic(m)
        detail = {"rank": rank, "mode": "symbolic"}
    else:
        rep = rank_over_u(m, samples=samples, seed=seed)
        rank = rep.rank
        detail = rep.to_json()
    if method == "rank":
        return full - rank
    return DimensionReport(d, n, dim_formula(d, n), full - rank, rank, detail)


def kernel_rank(d: int, n: int, samples: int = 3, seed: int = 0) -> int:
    """Rank of ``{a - reduce_to_sigma(a) : a in S}`` over ``Q(u)``."""
    index = basis_index(d, n)
    rows = []
    for (f, p) in index:
        a = yh.basis_element(d, n, f, p)
        rows.append(coordinates(a - reduce_to_sigma(a), index))
    return rank_over_u(ExactMatrix(rows, len(index)), samples=samples, seed=seed).rank


def sigma_relations(d: int, n: int, cap: int | None = None) -> ExactMatrix:
    """Images of the ideal under :func:`reduce_to_sigma`, over Sigma coordinates.

    Every row is zero exactly when the rewriting is annihilated by the ideal.
    """
    index = {(f, p): i for i, (f, p) in enumerate(
        (f, p) for f, p in pw.enumerate_S(d, n, cap) if pw.in_sigma(p))}
    rows = []
    for _, _, _, x in ideal_products(d, n, cap):
        red = reduce_to_sigma(x)
        if red:
            rows.append({index[k]: c for k, c in red.terms.items()})
    return ExactMatrix(rows, len(index))


# --- non-invertible generators --------------------------------------------


@dataclass(frozen=True)
class Scaled:
    """``num / (u+1)^den``: keeps ``1/(u+1)`` out of the Laurent ring."""

    num: yh.AlgebraElement
    den: int = 0

    def __mul__(self, other):
        if isinstance(other, Scaled):
            return Scaled(ytl_mul(self.num, other.num), self.den + other.den)
        if isinstance(other, yh.AlgebraElement):
            return Scaled(ytl_mul(self.num, other), self.den)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, yh.AlgebraElement):
            return Scaled(ytl_mul(other, self.num), self.den)
        return NotImplemented

    def _lift(self, k: int) -> yh.AlgebraElement:
        return self.num.scale((U + ONE) ** (k - self.den))

    def __add__(self, other):
        if isinstance(other, yh.AlgebraElement):
            other = Scaled(other)
        k = max(self.den, other.den)
        return Scaled(self._lift(k) + other._lift(k), k)

    def __sub__(self, other):
        if isinstance(other, yh.AlgebraElement):
            other = Scaled(other)
        k = max(self.den, other.den)
        return Scaled(self._lift(k) - other._lift(k), k)

    def ytl_equal(self, other) -> bool:
        """Equality in the quotient after clearing the ``(u+1)`` powers."""
        if isinstance(other, yh.AlgebraElement):
            other = Scaled(other)
        k = max(self.den, other.den)
        return reduce_to_sigma(self._lift(k) - other._lift(k)).is_zero()


def l_generator(i: int, d: int, n: int) -> Scaled:
    """``l_i = (g_i + 1)/(u + 1)``."""
    return Scaled(yh.gen_g(i, d, n) + yh.unit(d, n), 1)


def verify_l_presentation(d: int, n: int) -> list[dict]:
    """Check every relation of the ``l_i, t_j`` presentation in the quotient."""
    one = yh.unit(d, n)
    ls = {i: l_generator(i, d, n) for i in range(1, n)}
    ts = {j: yh.gen_t(j, 1, d, n) for j in range(1, n + 1)}
    checks = []

    def record(name, idx, ok):
        checks.append({"relation": name, "indices": list(idx), "holds": bool(ok)})

    for j in ts:
        record("t_j^d = 1", (j,), yh.gen_t(j, d, d, n) == one)
    for j in ts:
        for k in ts:
            if j < k:
                record("t_j t_k = t_k t_j", (j, k), yh.mul(ts[j], ts[k]) == yh.mul(ts[k], ts[j]))
    for i, li in ls.items():
        for j, tj in ts.items():
            if j not in (i, i + 1):
                record("l_i t_j = t_j l_i", (i, j), (li * tj).ytl_equal(tj * li))
        ti, ti1 = ts[i], ts[i + 1]
        rhs = (ti1 * li) + Scaled((ti - ti1), 1)
        record("l_i t_i = t_{i+1} l_i + (t_i - t_{i+1})/(u+1)", (i,), (li * ti).ytl_equal(rhs))
        rhs = (ti * li) + Scaled((ti1 - ti), 1)
        record("l_i t_{i+1} = t_i l_i + (t_{i+1} - t_i)/(u+1)", (i, ), (li * ti1).ytl_equal(rhs))
        e = yh.idempotent_e(i, d, n)
        coef = e.scale(U - ONE) + one.scale(2)
        record("l_i^2 = ((u-1)e_i + 2)/(u+1) l_i", (i,), (li * li).ytl_equal(Scaled(coef, 1) * li))
        coef1 = e.scale(U - ONE) + one
        for j in (i - 1, i + 1):
            if j in ls:
                lhs = li * ls[j] * li
                record("l_i l_j l_i = ((u-1)e_i + 1)/(u+1)^2 l_i, |i-j|=1", (i, j),
                       lhs.ytl_equal(Scaled(coef1, 2) * li))
        for j in ls:
            if j > i + 1:
                record("l_i l_j = l_j l_i, |i-j|>1", (i, j), (li * ls[j]).ytl_equal(ls[j] * li))
    return checks


def tau_coefficient_d1(n: int = 3) -> Scaled:
    """At ``d=1``: the scalar ``c`` with ``l_1 l_2 l_1 = c * l_1`` read off
    by comparing Sigma coordinates."""
    if n < 3:
        raise ValueError("need n >= 3")
    l1, l2 = l_generator(1, 1, n), l_generator(2, 1, n)
    lhs = (l1 * l2 * l1)
    ref = l1.num  # g_1 + 1
    key = ((0,) * n, pw.transposition(1, n))
    a, b = lhs.num.terms.get(key), ref.terms.get(key)
    c = a.exact_div(b)
    # lhs = c/(u+1)^3 * (g_1 + 1) = [c/(u+1)^2] * l_1
    if not lhs.num == ref.scale(c):
        raise RewriteError("l_1 l_2 l_1 is not a multiple of l_1")
    return Scaled(yh.unit(1, n).scale(c), lhs.den - 1)


def specialize_tl(a: yh.AlgebraElement) -> yh.AlgebraElement:
    """``t_j -> 1``; a homomorphism onto ``Y_{1,n}`` and hence onto ``TL_n``."""
    return yh.specialize_d1(a)
