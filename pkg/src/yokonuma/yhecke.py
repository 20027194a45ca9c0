"""Exact arithmetic in the Yokonuma-Hecke algebra ``Y_{d,n}(u)``.

Elements live on the basis ``t_1^{r_1} ... t_n^{r_n} g_w`` indexed by
``(framing, permutation)``; framing always sits on the left.  Products are
computed one generator at a time using

* ``g_w t_j = t_{w(j)} g_w``,
* ``g_w g_i = g_{w s_i}`` when the length goes up, and otherwise
  ``g_i^2 = 1 + (u-1) e_i + (u-1) e_i g_i`` with
  ``e_i = (1/d) sum_m t_i^m t_{i+1}^{-m}``.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction

from . import permwords as pw
from .scalars import ONE, U, Laurent, parse_laurent

DEFAULT_MAX_SUPPORT = int(os.environ.get("YTL_MAX_SUPPORT", "1000000"))


class ParameterMismatch(ValueError):
    pass


class SupportCapExceeded(RuntimeError):
    pass


class AlgebraElement:
    """Finite linear combination of basis words of ``Y_{d,n}``.

    ``terms`` maps ``(framing, permutation)`` to a nonzero :class:`Laurent`.
    Treat instances as immutable.
    """

    __slots__ = ("d", "n", "terms")

    def __init__(self, d: int, n: int, terms=None):
        self.d, self.n = d, n
        clean = {}
        for (f, p), c in (terms or {}).items():
            c = Laurent.coerce(c)
            if c:
                key = (pw.framing(f, d), tuple(p))
                if len(key[0]) != n or len(p) != n:
                    raise ParameterMismatch(f"word {key} has wrong size for n={n}")
                clean[key] = clean[key] + c if key in clean else c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, d, n, terms):
        obj = cls.__new__(cls)
        obj.d, obj.n, obj.terms = d, n, terms
        return obj

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if (self.d, self.n) != (other.d, other.n):
            raise ParameterMismatch(f"(d,n)=({self.d},{self.n}) vs ({other.d},{other.n})")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, None)
        return AlgebraElement._raw(self.d, self.n, out)

    def __neg__(self):
        return AlgebraElement._raw(self.d, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = Laurent.coerce(c)
        if not c:
            return AlgebraElement._raw(self.d, self.n, {})
        return AlgebraElement._raw(self.d, self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.d, self.n) == (other.d, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, self.n, frozenset(self.terms.items())))

    def coefficient(self, framing, perm) -> Laurent:
        return self.terms.get((pw.framing(framing, self.d), tuple(perm)), Laurent())

    def sorted_terms(self):
        order = {p: i for i, p in enumerate(pw.perms_in_order(self.n))}
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], order[kv[0][1]]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (f, p), c in self.sorted_terms():
            w = word_text(f, p)
            if c.is_constant():
                v = c.constant_value()
                sign, v = ("-", -v) if v < 0 else ("+", v)
                body = w if v == 1 else (str(v) if w == "1" else f"{v}*{w}")
            else:
                sign, body = "+", f"({c})" if w == "1" else f"({c})*{w}"
            out.append((sign, body))
        text = " ".join(f"{s} {b}" for s, b in out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"AlgebraElement(d={self.d}, n={self.n}, {self})"

    def to_json(self) -> list[dict]:
        return [
            {"framing": list(f), "word": list(pw.letters(pw.canonical_word(p))), "coefficient": str(c)}
            for (f, p), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, d: int, n: int, data) -> "AlgebraElement":
        terms = {}
        for entry in data:
            p = pw.word_to_perm(entry["word"], n)
            if pw.letters(pw.canonical_word(p)) != tuple(entry["word"]):
                raise ValueError(f"{entry['word']} is not a canonical word")
            key = (pw.framing(entry["framing"], d), p)
            terms[key] = terms.get(key, Laurent()) + parse_laurent(entry["coefficient"])
        return cls(d, n, terms)


def word_text(framing, perm) -> str:
    """``t1^2 t3 g1 g2 g1`` style rendering of one basis word (``1`` if empty)."""
    toks = []
    for j, r in enumerate(framing, start=1):
        if r:
            toks.append(f"t{j}" if r == 1 else f"t{j}^{r}")
    toks += [f"g{i}" for i in pw.letters(pw.canonical_word(perm))]
    return " ".join(toks) if toks else "1"


def _accumulate(out: dict, terms: dict, scale):
    for k, c in terms.items():
        if scale is not None:
            c = c * scale
        if k in out:
            s = out[k] + c
            if s:
                out[k] = s
            else:
                del out[k]
        elif c:
            out[k] = c


def _add_term(out: dict, key, c):
    if key in out:
        s = out[key] + c
        if s:
            out[key] = s
        else:
            del out[key]
    else:
        out[key] = c


def _guard(terms: dict, cap: int | None):
    cap = DEFAULT_MAX_SUPPORT if cap is None else cap
    if len(terms) > cap:
        raise SupportCapExceeded(f"support size {len(terms)} exceeds cap {cap}")


def _check_g(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise IndexError(f"g_{i} does not exist for n={n}")


def _check_t(j: int, n: int):
    if not 1 <= j <= n:
        raise IndexError(f"t_{j} does not exist for n={n}")


_E_COEF: dict[int, Laurent] = {}


def _e_coef(d: int) -> Laurent:
    """``(u-1)/d``."""
    if d not in _E_COEF:
        _E_COEF[d] = (U - ONE) * Fraction(1, d)
    return _E_COEF[d]


# --- constructors ----------------------------------------------------------


def zero(d: int, n: int) -> AlgebraElement:
    return AlgebraElement._raw(d, n, {})


def basis_element(d: int, n: int, framing, perm, coeff=1) -> AlgebraElement:
    return AlgebraElement(d, n, {(tuple(framing), tuple(perm)): coeff})


def unit(d: int, n: int) -> AlgebraElement:
    return basis_element(d, n, (0,) * n, pw.identity(n))


def gen_g(i: int, d: int, n: int) -> AlgebraElement:
    _check_g(i, n)
    return basis_element(d, n, (0,) * n, pw.transposition(i, n))


def gen_t(j: int, s: int, d: int, n: int) -> AlgebraElement:
    _check_t(j, n)
    f = [0] * n
    f[j - 1] = s % d
    return basis_element(d, n, f, pw.identity(n))


def idempotent_e(i: int, d: int, n: int) -> AlgebraElement:
    _check_g(i, n)
    c = Laurent.const(Fraction(1, d))
    terms = {}
    for m in range(d):
        f = [0] * n
        f[i - 1] = m % d
        f[i] = (-m) % d
        terms[(tuple(f), pw.identity(n))] = c
    return AlgebraElement._raw(d, n, terms)


def g_inverse(i: int, d: int, n: int) -> AlgebraElement:
    """``g_i + (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i``."""
    e = idempotent_e(i, d, n)
    c = Laurent.monomial(-1) - ONE
    return gen_g(i, d, n) + e.scale(c) + right_mul_g(e, i).scale(c)


# --- generator multiplication --------------------------------------------


def right_mul_g(a: AlgebraElement, i: int, cap: int | None = None) -> AlgebraElement:
    """``a * g_i`` in normal form."""
    d, n = a.d, a.n
    _check_g(i, n)
    out: dict = {}
    ec = _e_coef(d)
    for (r, p), c in a.terms.items():
        if p[i - 1] < p[i]:
            _add_term(out, (r, pw.times_s(p, i)), c)
            continue
        q = pw.times_s(p, i)
        _add_term(out, (r, q), c)
        cc = c * ec
        if not cc:
            continue
        ai, bi = q[i - 1] - 1, q[i] - 1
        for m in range(d):
            r2 = list(r)
            r2[ai] = (r2[ai] + m) % d
            r2[bi] = (r2[bi] - m) % d
            r2 = tuple(r2)
            _add_term(out, (r2, q), cc)
            _add_term(out, (r2, p), cc)
    _guard(out, cap)
    return AlgebraElement._raw(d, n, out)


def left_mul_g(a: AlgebraElement, i: int, cap: int | None = None) -> AlgebraElement:
    """``g_i * a`` in normal form (mirror image of :func:`right_mul_g`)."""
    d, n = a.d, a.n
    _check_g(i, n)
    out: dict = {}
    ec = _e_coef(d)
    for (r, p), c in a.terms.items():
        # g_i t^r = t^{s_i . r} g_i
        r1 = list(r)
        r1[i - 1], r1[i] = r1[i], r1[i - 1]
        r1 = tuple(r1)
        if p.index(i) < p.index(i + 1):
            _add_term(out, (r1, pw.s_times(i, p)), c)
            continue
        q = pw.s_times(i, p)
        _add_term(out, (r1, q), c)
        cc = c * ec
        if not cc:
            continue
        for m in range(d):
            r2 = list(r1)
            r2[i - 1] = (r2[i - 1] + m) % d
            r2[i] = (r2[i] - m) % d
            r2 = tuple(r2)
            _add_term(out, (r2, q), cc)
            _add_term(out, (r2, p), cc)
    _guard(out, cap)
    return AlgebraElement._raw(d, n, out)


def right_mul_t(a: AlgebraElement, j: int, s: int) -> AlgebraElement:
    """``a * t_j^s``; moving past ``g_p`` lands on strand ``p(j)``."""
    d, n = a.d, a.n
    _check_t(j, n)
    s %= d
    if not s:
        return a
    out = {}
    for (r, p), c in a.terms.items():
        r2 = list(r)
        k = p[j - 1] - 1
        r2[k] = (r2[k] + s) % d
        out[(tuple(r2), p)] = c
    return AlgebraElement._raw(d, n, out)


def left_mul_t(a: AlgebraElement, j: int, s: int) -> AlgebraElement:
    d, n = a.d, a.n
    _check_t(j, n)
    s %= d
    if not s:
        return a
    out = {}
    for (r, p), c in a.terms.items():
        r2 = list(r)
        r2[j - 1] = (r2[j - 1] + s) % d
        out[(tuple(r2), p)] = c
    return AlgebraElement._raw(d, n, out)


def left_mul_framing(a: AlgebraElement, f) -> AlgebraElement:
    """``t^f * a``."""
    d = a.d
    if not any(f):
        return a
    out = {}
    for (r, p), c in a.terms.items():
        out[(tuple((x + y) % d for x, y in zip(r, f)), p)] = c
    return AlgebraElement._raw(d, a.n, out)


def right_mul_word(a: AlgebraElement, framing, perm, cap: int | None = None) -> AlgebraElement:
    """``a * t^framing * g_perm``."""
    for j, s in enumerate(framing, start=1):
        if s:
            a = right_mul_t(a, j, s)
    for i in pw.letters(pw.canonical_word(perm)):
        a = right_mul_g(a, i, cap)
    return a


def left_mul_word(framing, perm, a: AlgebraElement, cap: int | None = None) -> AlgebraElement:
    """``t^framing * g_perm * a``."""
    for i in reversed(pw.letters(pw.canonical_word(perm))):
        a = left_mul_g(a, i, cap)
    return left_mul_framing(a, framing)


def mul(a: AlgebraElement, b: AlgebraElement, cap: int | None = None) -> AlgebraElement:
    """Bilinear product, factoring each basis word of ``b`` into letters."""
    a._check(b)
    out: dict = {}
    for (r, p), c in b.terms.items():
        prod = right_mul_word(a, r, p, cap)
        _accumulate(out, prod.terms, c)
    _guard(out, cap)
    return AlgebraElement._raw(a.d, a.n, out)


def product(*factors: AlgebraElement) -> AlgebraElement:
    out = factors[0]
    for f in factors[1:]:
        out = mul(out, f)
    return out


def eval_letters(letter_seq, d: int, n: int) -> AlgebraElement:
    """Evaluate a product of ``('g', i)`` / ``('t', j, s)`` letters left to right."""
    a = unit(d, n)
    for tok in letter_seq:
        if tok[0] == "g":
            a = right_mul_g(a, tok[1])
        else:
            a = right_mul_t(a, tok[1], tok[2])
    return a


def embed(a: AlgebraElement, n_new: int) -> AlgebraElement:
    """Inclusion ``Y_{d,n} -> Y_{d,n_new}``: new strands are fixed, framing 0."""
    if n_new < a.n:
        raise ValueError("can only embed into more strands")
    pad = n_new - a.n
    return AlgebraElement._raw(
        a.d,
        n_new,
        {(r + (0,) * pad, p + tuple(range(a.n + 1, n_new + 1))): c for (r, p), c in a.terms.items()},
    )


def specialize_d1(a: AlgebraElement) -> AlgebraElement:
    """``t_j -> 1, g_i -> g_i`` onto ``Y_{1,n}``."""
    out: dict = {}
    for (r, p), c in a.terms.items():
        _add_term(out, ((0,) * a.n, p), c)
    return AlgebraElement._raw(1, a.n, out)


def random_basis_word(d: int, n: int, rng: random.Random):
    f = tuple(rng.randrange(d) for _ in range(n))
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return f, tuple(p)


def random_element(d: int, n: int, rng: random.Random, terms: int = 3) -> AlgebraElement:
    out = {}
    for _ in range(terms):
        key = random_basis_word(d, n, rng)
        c = Laurent({rng.randint(-2, 2): Fraction(rng.randint(-5, 5), rng.randint(1, 4))})
        out[key] = out.get(key, Laurent()) + c
    return AlgebraElement(d, n, out)
