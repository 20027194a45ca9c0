"""The Markov trace on ``Y_{d,n}`` with parameters ``z, x_1, ..., x_{d-1}``,
and the test of whether it factors through the linear-relation quotient.

The trace of a basis word is computed by stripping the top strand:

* strand ``n`` fixed by the permutation: ``tr(a t_n^s) = x_s tr(a)``;
* otherwise ``t^r g_p = a g_{n-1} b`` with ``a, b`` in ``Y_{d,n-1}`` and
  ``tr(a g_{n-1} b) = z tr(a b)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from . import permwords as pw
from . import yhecke as yh
from .scalars import (
    ONE,
    U,
    Laurent,
    QuadExt,
    QuadRoots,
    TracePoly,
    as_fraction,
    modulus_str,
    quad_roots_numeric,
)
from .ytl import linear_relation


class DegenerateQuadratic(ValueError):
    pass


@lru_cache(maxsize=None)
def _trace_word(d: int, n: int, r: tuple, p: tuple) -> TracePoly:
    if n == 0:
        return TracePoly.const(d)
    top = p.index(n) + 1  # p^{-1}(n)
    if top == n:
        return TracePoly.x(r[-1], d) * _trace_word(d, n - 1, r[:-1], p[:-1])
    # p = p' * (s_{n-1} ... s_top), p' fixing n
    q = list(p)
    for letter in range(top, n):
        q[letter - 1], q[letter] = q[letter], q[letter - 1]
    a = yh.basis_element(d, n - 1, r[:-1], tuple(q[:-1]))
    ab = yh.right_mul_t(a, n - 1, r[-1]) if n >= 2 else a
    for letter in range(n - 2, top - 1, -1):
        ab = yh.right_mul_g(ab, letter)
    return TracePoly.z(d) * trace(ab)


def trace(a: yh.AlgebraElement) -> TracePoly:
    """Linear extension of the trace of basis words."""
    out = TracePoly(a.d)
    for (r, p), c in a.terms.items():
        out = out + _trace_word(a.d, a.n, r, p) * c
    return out


def E(s: int, d: int) -> TracePoly:
    """``(1/d) sum_m x_m x_{s-m}``; ``E(0, d)`` is the trace of ``e_i``."""
    out = TracePoly(d)
    for m in range(d):
        out = out + TracePoly.x(m, d) * TracePoly.x(s - m, d)
    return out * Fraction(1, d)


@dataclass(frozen=True)
class ZQuadratic:
    """``a z^2 + b z + c`` with z-free :class:`TracePoly` coefficients."""

    d: int
    a: TracePoly
    b: TracePoly
    c: TracePoly

    def as_poly(self) -> TracePoly:
        z = TracePoly.z(self.d)
        return self.a * z * z + self.b * z + self.c

    def __str__(self):
        return str(self.as_poly())


def z_quadratic(d: int) -> ZQuadratic:
    """Condition ``tr(r_1) = 0`` read off from the implemented trace."""
    p = trace(linear_relation(1, d, 3))
    if p.z_degree() > 2:
        raise DegenerateQuadratic(f"trace of the relation has z-degree {p.z_degree()}")
    return ZQuadratic(d, p.z_coefficient(2), p.z_coefficient(1), p.z_coefficient(0))


def radical_form_quadratic(d: int) -> ZQuadratic:
    """The quadratic whose roots are the frequently quoted radical expression

        z = (-u E + E - 3 +- sqrt((u E - E + 3)^2 - 4(u - 1))) / (2(u - 1)),

    namely ``(u-1) z^2 + ((u-1) E + 3) z + 1``.  Kept only for comparison:
    its leading coefficient differs from :func:`z_quadratic`.
    """
    e0 = E(0, d)
    return ZQuadratic(d, TracePoly.const(d, U - ONE), e0 * (U - ONE) + 3, TracePoly.const(d, 1))


@dataclass(frozen=True)
class TraceParams:
    d: int
    u: Fraction
    x: dict = field(default_factory=dict)

    def __post_init__(self):
        u = as_fraction(self.u)
        if u in (0, 1):
            from .scalars import ParameterDomainError

            raise ParameterDomainError(f"u must avoid 0 and 1, got {u}")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "x", {int(s): as_fraction(v) for s, v in self.x.items()})

    def to_json(self) -> dict:
        return {"u": str(self.u), "x": {str(s): str(v) for s, v in sorted(self.x.items())}}


def default_params(d: int, u=2) -> TraceParams:
    """``u = 2`` and ``x_s = 1/(s+1)``: distinct, small, and away from 1."""
    return TraceParams(d, as_fraction(u), {s: Fraction(1, s + 1) for s in range(1, d)})


def z_roots(params: TraceParams) -> QuadRoots:
    q = z_quadratic(params.d)
    a = q.a.substitute(params.u, params.x)
    if not a:
        raise DegenerateQuadratic("leading coefficient u+1 vanishes")
    return quad_roots_numeric(a, q.b.substitute(params.u, params.x), q.c.substitute(params.u, params.x))


def obstruction(w: yh.AlgebraElement, i: int, params: TraceParams, root: QuadExt) -> QuadExt:
    """``tr(w r_i)`` evaluated at the parameters and ``z = root``."""
    p = trace(yh.mul(w, linear_relation(i, w.d, w.n)))
    return p.substitute(params.u, params.x, root)


@dataclass
class ObstructionReport:
    d: int
    n: int
    params: TraceParams
    quadratic: str
    roots: list
    entries: list
    nonzero_count: int
    witnesses: list

    def to_json(self) -> dict:
        out = {"d": self.d, "n": self.n}
        out.update(self.params.to_json())
        out.update(
            quadratic=self.quadratic,
            roots=self.roots,
            entries=self.entries,
            nonzero_count=self.nonzero_count,
            witnesses=self.witnesses,
        )
        return out


def factoring_scan(d: int, n: int, params: TraceParams | None = None, roots: str = "both",
                   cap: int | None = None) -> ObstructionReport:
    """Evaluate the obstruction on every basis word and relation position.

    ``roots='one'`` uses the first root only.  A word is a witness when its
    obstruction is nonzero at every root scanned.
    """
    if params is None:
        params = default_params(d)
    if params.d != d:
        raise ValueError("parameter d mismatch")
    if n < 3:
        raise ValueError("the linear relation needs n >= 3")
    zr = z_roots(params)
    chosen = list(enumerate(zr.roots))[: 1 if roots == "one" else 2]
    labels = zr.describe()
    relations = {i: linear_relation(i, d, n) for i in range(1, n - 1)}
    entries = []
    nonzero = 0
    witness_words: dict = {}
    for f, p in pw.enumerate_S(d, n, cap):
        w = yh.basis_element(d, n, f, p)
        text = yh.word_text(f, p)
        for i, rel in relations.items():
            poly = trace(yh.mul(w, rel))
            for rid, root in chosen:
                val = poly.substitute(params.u, params.x, root)
                zero = val.is_zero()
                entries.append({"word": text, "relation": i, "root": rid + 1, "value": str(val), "is_zero": zero})
                if not zero:
                    nonzero += 1
                    witness_words.setdefault((text, i), set()).add(rid)
    witnesses = sorted({t for (t, _), ids in witness_words.items() if len(ids) == len(chosen)})
    return ObstructionReport(
        d, n, params, str(z_quadratic(d)), [labels[rid] for rid, _ in chosen], entries, nonzero, witnesses
    )


# --- closed forms for w = t1^k1 t2^k2 t3^k times g1 g2 g1 -----------------


def closed_form_braid_triple(k1: int, k2: int, k: int, d: int) -> TracePoly:
    """``z x_{k1+k} x_{k2} + (u-1) z E^{(k1+k2+k)} + (u-1) z^2 x_{k1+k2+k}``."""
    z, x = TracePoly.z(d), lambda s: TracePoly.x(s, d)
    um1 = U - ONE
    return z * x(k1 + k) * x(k2) + z * E(k1 + k2 + k, d) * um1 + z * z * x(k1 + k2 + k) * um1


def closed_form_rewritten(k1: int, k2: int, k: int, d: int) -> TracePoly:
    """``-2 z^2 x_{k1+k2+k} - z x_{k1} x_{k2+k} - z x_k x_{k1+k2} - x_{k1} x_{k2} x_k``."""
    z, x = TracePoly.z(d), lambda s: TracePoly.x(s, d)
    return -(z * z * x(k1 + k2 + k) * 2 + z * x(k1) * x(k2 + k) + z * x(k) * x(k1 + k2) + x(k1) * x(k2) * x(k))


def closed_form_condition(k1: int, k2: int, k: int, d: int) -> TracePoly:
    """``(u+1) z^2 x_{K} + (x_{k1+k} x_{k2} + x_{k1} x_{k2+k} + x_k x_{k1+k2}) z
    + (u-1) z E^{(K)} + x_{k1} x_{k2} x_k`` with ``K = k1+k2+k``."""
    z, x = TracePoly.z(d), lambda s: TracePoly.x(s, d)
    K = k1 + k2 + k
    lin = x(k1 + k) * x(k2) + x(k1) * x(k2 + k) + x(k) * x(k1 + k2)
    return z * z * x(K) * (U + ONE) + z * lin + z * E(K, d) * (U - ONE) + x(k1) * x(k2) * x(k)


def identity_tr9_tr10(d: int) -> dict:
    """Compare the implemented trace with the closed forms for every triple.

    For ``w = t1^k1 t2^k2 t3^k``: the trace of ``w g1 g2 g1``, the trace of
    minus the five shorter terms, and their difference (which must equal
    ``tr(w r_1)`` and the closed-form condition).
    """
    n = 3
    g1, g2 = yh.gen_g(1, d, n), yh.gen_g(2, d, n)
    rows = []
    for k1, k2, k in iproduct(range(d), repeat=3):
        w = yh.basis_element(d, n, (k1, k2, k), pw.identity(n))
        wg1 = yh.mul(w, g1)
        wg12 = yh.mul(wg1, g2)
        triple = trace(yh.mul(wg12, g1))
        rewritten = -(trace(yh.mul(yh.mul(w, g2), g1)) + trace(wg12) + trace(yh.mul(w, g2)) + trace(wg1) + trace(w))
        cf9, cf10 = closed_form_braid_triple(k1, k2, k, d), closed_form_rewritten(k1, k2, k, d)
        cond = closed_form_condition(k1, k2, k, d)
        diff = triple - rewritten
        rows.append(
            {
                "k": [k1, k2, k],
                "braid_triple_matches": triple == cf9,
                "rewritten_matches": rewritten == cf10,
                "condition_matches": diff == cond and diff == trace(yh.mul(w, linear_relation(1, d, n))),
                "braid_triple_mismatch": str(triple - cf9),
                "rewritten_mismatch": str(rewritten - cf10),
            }
        )
    zq = z_quadratic(d).as_poly()
    zero_cond = closed_form_condition(0, 0, 0, d)
    return {
        "d": d,
        "rows": rows,
        "all_hold": all(r["braid_triple_matches"] and r["rewritten_matches"] and r["condition_matches"] for r in rows),
        "k0_reproduces_z_quadratic": zero_cond == zq or zero_cond == -zq,
        "z_quadratic": str(zq),
    }


def radical_form_report(params: TraceParams) -> dict:
    """Does the radical expression solve the derived quadratic?

    Both quadratics share their ``z^1`` and ``z^0`` coefficients, so they
    have a common root only if ``z = 0`` solves one of them; decided exactly.
    """
    derived = z_quadratic(params.d)
    radical = radical_form_quadratic(params.d)
    da = [q.substitute(params.u, params.x) for q in (derived.a, derived.b, derived.c)]
    ra = [q.substitute(params.u, params.x) for q in (radical.a, radical.b, radical.c)]
    shared = _common_root(da, ra)
    return {
        "derived_quadratic": str(derived),
        "radical_form_quadratic": str(radical),
        "radical_roots_solve_derived": shared,
        "derived_roots": quad_roots_numeric(*da).describe(),
        "radical_roots": quad_roots_numeric(*ra).describe() if ra[0] else None,
    }


def _common_root(p, q) -> bool:
    """Whether two quadratics ``[a, b, c]`` share a root (resultant test)."""
    a1, b1, c1 = p
    a2, b2, c2 = q
    res = (a1 * c2 - a2 * c1) ** 2 - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1)
    return res == 0


def check_trace_rules(d: int, n: int, pairs: int = 200, seed: int = 0) -> dict:
    """Randomised checks of the defining rules of the trace."""
    import random

    rng = random.Random(seed)
    fails = {"normalization": 0, "commutativity": 0, "markov": 0, "framing": 0, "linearity": 0}
    if trace(yh.unit(d, n)) != TracePoly.const(d):
        fails["normalization"] += 1
    for _ in range(pairs):
        fa, pa = yh.random_basis_word(d, n, rng)
        fb, pb = yh.random_basis_word(d, n, rng)
        a, b = yh.basis_element(d, n, fa, pa), yh.basis_element(d, n, fb, pb)
        if trace(yh.mul(a, b)) != trace(yh.mul(b, a)):
            fails["commutativity"] += 1
        big_a, big_b = yh.embed(a, n + 1), yh.embed(b, n + 1)
        gn = yh.gen_g(n, d, n + 1)
        if trace(yh.mul(yh.mul(big_a, gn), big_b)) != TracePoly.z(d) * trace(yh.mul(a, b)):
            fails["markov"] += 1
        s = rng.randrange(d)
        if trace(yh.right_mul_t(big_a, n + 1, s)) != TracePoly.x(s, d) * trace(a):
            fails["framing"] += 1
        c1 = Laurent({rng.randint(-2, 2): Fraction(rng.randint(-4, 4), rng.randint(1, 3))})
        if trace(a.scale(c1) + b) != trace(a) * c1 + trace(b):
            fails["linearity"] += 1
    return {"d": d, "n": n, "pairs": pairs, "seed": seed, "failures": fails,
            "ok": not any(fails.values())}


__all__ = [
    "E",
    "ObstructionReport",
    "TraceParams",
    "ZQuadratic",
    "check_trace_rules",
    "closed_form_braid_triple",
    "closed_form_condition",
    "closed_form_rewritten",
    "default_params",
    "factoring_scan",
    "identity_tr9_tr10",
    "modulus_str",
    "obstruction",
    "radical_form_quadratic",
    "radical_form_report",
    "trace",
    "z_quadratic",
    "z_roots",
]
