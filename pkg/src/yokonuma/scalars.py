"""Exact scalars: Laurent polynomials in ``u``, trace polynomials in
``z, x1, ..., x_{d-1}``, and elements of a quadratic extension ``Q[z]/(m)``.

Rationals are :class:`fractions.Fraction` throughout; nothing is ever a float.

Text form (used in reports and parsed back by :func:`parse_poly`)::

    -1 + 2*u^-1 + 3*z*x1^2 - 1/2*u*z

Terms are joined by `` + `` / `` - ``; a term is an optional rational
coefficient followed by ``*``-separated factors ``u``, ``z`` or ``x<s>``,
each with an optional integer exponent ``^k``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC


class SignatureMismatch(ValueError):
    """Operands built for different framing orders ``d``."""


class ParameterDomainError(ValueError):
    pass


class IncompleteAssignment(ValueError):
    pass


class NotAQuadratic(ValueError):
    pass


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(pieces: list[tuple[Fraction, list[str]]]) -> str:
    """Render ``[(coef, [factor, ...]), ...]`` in the canonical grammar."""
    if not pieces:
        return "0"
    out = []
    for idx, (c, factors) in enumerate(pieces):
        neg = c < 0
        mag = -c if neg else c
        if factors:
            body = "*".join(factors) if mag == 1 else _fmt_rat(mag) + "*" + "*".join(factors)
        else:
            body = _fmt_rat(mag)
        if idx == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _u_order(e: int):
    # constant first, then u^-1, u, u^-2, u^2, ...
    return abs(e), e


def _factor(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


class Laurent:
    """Sparse Laurent polynomial in ``u`` with rational coefficients.

    Immutable.  ``terms`` maps exponent to a nonzero :class:`Fraction`.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = as_fraction(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Laurent":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "Laurent":
        c = as_fraction(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exp: int, c=1) -> "Laurent":
        c = as_fraction(c)
        return cls._raw({exp: c} if c else {})

    @classmethod
    def coerce(cls, other) -> "Laurent":
        if isinstance(other, Laurent):
            return other
        return cls.const(other)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get(0, Fraction(0))

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    def __add__(self, other):
        if not isinstance(other, Laurent):
            try:
                other = Laurent.const(other)
            except TypeError:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Laurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Laurent):
            try:
                other = Laurent.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Laurent.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            try:
                c = as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Laurent._raw({})
            return Laurent._raw({e: v * c for e, v in self.terms.items()})
        if not self.terms or not other.terms:
            return Laurent._raw({})
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a rational or by a single Laurent monomial."""
        if isinstance(other, Laurent):
            if len(other.terms) != 1:
                return self.exact_div(other)
            (e, c), = other.terms.items()
            return Laurent._raw({k - e: v / c for k, v in self.terms.items()})
        c = as_fraction(other)
        return Laurent._raw({e: v / c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ZeroDivisionError(f"{self} is not a unit in the Laurent ring")
            (e, c), = self.terms.items()
            return Laurent._raw({e * k: c ** k})
        out = Laurent.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Quotient ``self / other`` when it is again a Laurent polynomial.

        Raises ``ArithmeticError`` if ``other`` does not divide ``self``.
        """
        other = Laurent.coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self.terms:
            return self
        # shift both to ordinary polynomials and run long division
        sa, sb = self.min_exp(), other.min_exp()
        num = [Fraction(0)] * (self.max_exp() - sa + 1)
        for e, c in self.terms.items():
            num[e - sa] = c
        den = [Fraction(0)] * (other.max_exp() - sb + 1)
        for e, c in other.terms.items():
            den[e - sb] = c
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        lead = den[-1]
        for i in range(len(num) - len(den), -1, -1):
            coef = num[i + len(den) - 1] / lead
            q[i] = coef
            if coef:
                for j, dc in enumerate(den):
                    num[i + j] -= coef * dc
        if any(num):
            raise ArithmeticError(f"{other} does not divide {self}")
        return Laurent._raw({i + sa - sb: c for i, c in enumerate(q) if c})

    def evaluate(self, u) -> Fraction:
        u = as_fraction(u)
        if not u and any(e < 0 for e in self.terms):
            raise ZeroDivisionError("negative power of u evaluated at 0")
        return sum((c * u ** e for e, c in self.terms.items()), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.terms == other.terms
        try:
            return self.terms == Laurent.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        pieces = [(self.terms[e], [_factor("u", e)] if e else []) for e in sorted(self.terms, key=_u_order)]
        return _join_terms(pieces)

    def __repr__(self):
        return f"Laurent({self})"


U = Laurent.monomial(1)
ONE = Laurent.const(1)
ZERO = Laurent.const(0)


class TracePoly:
    """Polynomial in ``z, x_1, ..., x_{d-1}`` with Laurent-in-``u`` coefficients.

    Monomials are ``(z_exp, (e_1, ..., e_{d-1}))``; ``x_0`` is the unit and is
    never stored.
    """

    __slots__ = ("d", "terms", "_hash")

    def __init__(self, d: int, terms=None):
        if d < 1:
            raise ValueError("d must be >= 1")
        self.d = d
        clean = {}
        if terms:
            for mono, c in terms.items():
                zexp, xexp = mono
                xexp = tuple(xexp)
                if len(xexp) != d - 1:
                    raise SignatureMismatch(f"monomial {mono} has wrong x-length for d={d}")
                c = Laurent.coerce(c)
                if c:
                    clean[(int(zexp), xexp)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, d, terms):
        obj = cls.__new__(cls)
        obj.d = d
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, d: int, c=1) -> "TracePoly":
        c = Laurent.coerce(c)
        return cls._raw(d, {(0, (0,) * (d - 1)): c} if c else {})

    @classmethod
    def z(cls, d: int) -> "TracePoly":
        return cls._raw(d, {(1, (0,) * (d - 1)): ONE})

    @classmethod
    def x(cls, s: int, d: int) -> "TracePoly":
        """``x_s`` with the subscript read mod ``d``; ``x_0`` is 1."""
        s %= d
        if s == 0:
            return cls.const(d)
        xexp = [0] * (d - 1)
        xexp[s - 1] = 1
        return cls._raw(d, {(0, tuple(xexp)): ONE})

    def _check(self, other: "TracePoly"):
        if other.d != self.d:
            raise SignatureMismatch(f"d={self.d} vs d={other.d}")

    def _lift(self, other):
        if isinstance(other, TracePoly):
            self._check(other)
            return other
        return TracePoly.const(self.d, other)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out[m] + c if m in out else c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TracePoly._raw(self.d, out)

    __radd__ = __add__

    def __neg__(self):
        return TracePoly._raw(self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TracePoly):
            try:
                c = Laurent.coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return TracePoly._raw(self.d, {})
            return TracePoly._raw(self.d, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        out = {}
        for (z1, x1), c1 in self.terms.items():
            for (z2, x2), c2 in other.terms.items():
                m = (z1 + z2, tuple(a + b for a, b in zip(x1, x2)))
                out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return TracePoly._raw(self.d, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = TracePoly.const(self.d)
        for _ in range(k):
            out = out * self
        return out

    def z_degree(self) -> int:
        return max((m[0] for m in self.terms), default=0)

    def z_coefficient(self, k: int) -> "TracePoly":
        """Coefficient of ``z^k``, itself free of ``z``."""
        return TracePoly._raw(
            self.d, {(0, m[1]): c for m, c in self.terms.items() if m[0] == k}
        )

    def substitute(self, u, x_vals=None, z_val=None):
        """Evaluate at rational ``u`` and ``x_s``; ``z`` goes to ``z_val``.

        ``z_val`` may be a :class:`QuadExt` (result is a ``QuadExt``), a
        rational, or ``None`` when the polynomial is free of ``z``.
        """
        u = as_fraction(u)
        if u in (0, 1):
            raise ParameterDomainError(f"u must avoid 0 and 1, got {u}")
        xs = _x_assignment(self.d, x_vals)
        if isinstance(z_val, QuadExt):
            total = QuadExt.from_rational(0, z_val.modulus)
            zpow_cache = {0: QuadExt.from_rational(1, z_val.modulus)}
            for (ze, xe), c in self.terms.items():
                coef = c.evaluate(u)
                for s, e in enumerate(xe, start=1):
                    if e:
                        coef *= xs[s] ** e
                if ze not in zpow_cache:
                    zpow_cache[ze] = z_val ** ze
                total = total + zpow_cache[ze] * coef
            return total
        if z_val is None and self.z_degree() > 0:
            raise IncompleteAssignment("z value required")
        zv = as_fraction(z_val) if z_val is not None else Fraction(0)
        total = Fraction(0)
        for (ze, xe), c in self.terms.items():
            coef = c.evaluate(u)
            for s, e in enumerate(xe, start=1):
                if e:
                    coef *= xs[s] ** e
            total += coef * zv ** ze
        return total

    def specialize(self, u, x_vals=None) -> "TracePoly":
        """Substitute ``u`` and the ``x_s`` but keep ``z`` symbolic."""
        u = as_fraction(u)
        if u in (0, 1):
            raise ParameterDomainError(f"u must avoid 0 and 1, got {u}")
        xs = _x_assignment(self.d, x_vals)
        flat = (0,) * (self.d - 1)
        out: dict = {}
        for (ze, xe), c in self.terms.items():
            v = c.evaluate(u)
            for s, e in enumerate(xe, start=1):
                if e:
                    v *= xs[s] ** e
            out[ze] = out.get(ze, 0) + v
        return TracePoly(self.d, {(ze, flat): v for ze, v in out.items()})

    def __eq__(self, other):
        if isinstance(other, TracePoly):
            return self.d == other.d and self.terms == other.terms
        try:
            return self.terms == TracePoly.const(self.d, other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self.terms.items())))
        return self._hash

    def _pieces(self):
        rows = []
        for (ze, xe), c in self.terms.items():
            for ue, v in c.terms.items():
                rows.append(((ze, xe, ue), v))
        rows.sort(key=lambda r: (r[0][0], tuple(r[0][1]), _u_order(r[0][2])))
        pieces = []
        for (ze, xe, ue), v in rows:
            factors = []
            if ue:
                factors.append(_factor("u", ue))
            if ze:
                factors.append(_factor("z", ze))
            for s, e in enumerate(xe, start=1):
                if e:
                    factors.append(_factor(f"x{s}", e))
            pieces.append((v, factors))
        return pieces

    def __str__(self):
        return _join_terms(self._pieces())

    def __repr__(self):
        return f"TracePoly(d={self.d}, {self})"


def _x_assignment(d: int, x_vals) -> dict[int, Fraction]:
    xs = {}
    for s, v in (x_vals or {}).items():
        s = int(s)
        if not 1 <= s <= d - 1:
            raise IncompleteAssignment(f"x_{s} is not a parameter for d={d}")
        xs[s] = as_fraction(v)
    missing = [s for s in range(1, d) if s not in xs]
    if missing:
        raise IncompleteAssignment(f"missing values for x_{missing}")
    return xs


# --- quadratic extension -------------------------------------------------


class QuadExt:
    """``c0 + c1*z`` in ``Q[z]/(m(z))`` for a monic ``m`` of degree 1 or 2.

    ``modulus`` holds the non-leading coefficients of ``m`` from low degree
    up: ``(q, p)`` for ``z^2 + p*z + q`` or ``(q,)`` for ``z + q``.  Over a
    linear modulus every element is a plain rational (``c1 == 0``).
    Quadratic moduli passed in here are expected to be irreducible over Q
    whenever zero tests are meant to be decisive;
    :func:`quad_roots_numeric` guarantees that.
    """

    __slots__ = ("c0", "c1", "modulus")

    def __init__(self, c0, c1, modulus):
        modulus = tuple(as_fraction(m) for m in modulus)
        if len(modulus) not in (1, 2):
            raise NotAQuadratic("modulus must be monic of degree 1 or 2")
        c0, c1 = as_fraction(c0), as_fraction(c1)
        if len(modulus) == 1:
            # z == -q
            c0, c1 = c0 - c1 * modulus[0], Fraction(0)
        self.c0, self.c1, self.modulus = c0, c1, modulus

    @classmethod
    def from_rational(cls, c, modulus):
        return cls(c, 0, modulus)

    @classmethod
    def generator(cls, modulus):
        return cls(0, 1, modulus)

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.modulus != self.modulus:
                raise SignatureMismatch("quadratic-extension moduli differ")
            return other
        return QuadExt(as_fraction(other), 0, self.modulus)

    def __add__(self, other):
        o = self._lift(other)
        return QuadExt(self.c0 + o.c0, self.c1 + o.c1, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.c0, -self.c1, self.modulus)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        a0, a1, b0, b1 = self.c0, self.c1, o.c0, o.c1
        c0, c1, c2 = a0 * b0, a0 * b1 + a1 * b0, a1 * b1
        if c2:
            q, p = self.modulus
            c0 -= c2 * q
            c1 -= c2 * p
        return QuadExt(c0, c1, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        out = QuadExt(1, 0, self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.c0 and not self.c1

    def is_rational(self) -> bool:
        return not self.c1

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (TypeError, SignatureMismatch):
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1, self.modulus))

    def __str__(self):
        pieces = []
        if self.c0:
            pieces.append((self.c0, []))
        if self.c1:
            pieces.append((self.c1, ["z"]))
        return _join_terms(pieces)

    def __repr__(self):
        return f"QuadExt({self} mod {modulus_str(self.modulus)})"


def modulus_str(modulus) -> str:
    if len(modulus) == 1:
        return _join_terms([(Fraction(1), ["z"])] + ([(modulus[0], [])] if modulus[0] else []))
    q, p = modulus
    pieces = [(Fraction(1), ["z^2"])]
    if p:
        pieces.append((p, ["z"]))
    if q:
        pieces.append((q, []))
    return _join_terms(pieces)


def rational_sqrt(c: Fraction):
    """Exact square root of a rational, or ``None`` if it is not a square."""
    c = as_fraction(c)
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class QuadRoots:
    """The two roots of ``a*z^2 + b*z + c`` as :class:`QuadExt` scalars."""

    def __init__(self, a, b, c):
        a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
        if not a:
            raise NotAQuadratic("leading coefficient is zero")
        self.coefficients = (a, b, c)
        self.monic = (c / a, b / a)  # (q, p)
        self.discriminant = b * b - 4 * a * c
        sq = rational_sqrt(self.discriminant)
        if sq is not None:
            r1, r2 = sorted(((-b + sq) / (2 * a), (-b - sq) / (2 * a)))
            self.rational_roots = tuple(sorted({r1, r2}))
            self.roots = (
                QuadExt.from_rational(r1, (-r1,)),
                QuadExt.from_rational(r2, (-r2,)),
            )
        else:
            self.rational_roots = None
            z = QuadExt.generator(self.monic)
            self.roots = (z, QuadExt(-self.monic[1], -1, self.monic))

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    def describe(self) -> list[str]:
        """Human-readable roots: rationals when split, else symbolic."""
        if self.rational_roots is not None:
            return [_fmt_rat(r) for r in (self.roots[0].c0, self.roots[1].c0)]
        a, b, _ = self.coefficients
        D = self.discriminant
        base = f"({_fmt_rat(-b)} {{}} sqrt({_fmt_rat(D)}))/({_fmt_rat(2 * a)})"
        return [base.format("+"), base.format("-")]


def quad_roots_numeric(a, b, c) -> QuadRoots:
    return QuadRoots(a, b, c)


# --- parsing --------------------------------------------------------------

_TERM_SPLIT = re.compile(r"(?<!\^)\s*([+-])\s*")
_FACTOR = re.compile(r"^(u|z|x(\d+))(?:\^(-?\d+))?$")
_RAT = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly(text: str, d: int | None = None):
    """Parse the canonical text form.

    Returns a :class:`Laurent` when only ``u`` occurs and ``d`` is None,
    otherwise a :class:`TracePoly` over ``d`` (default inferred from the
    largest ``x`` subscript).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    parts = _TERM_SPLIT.split(s)
    # split yields ['', sign, term, sign, term, ...]
    if parts[0].strip():
        raise ValueError(f"cannot parse {text!r}")
    terms = []
    max_x = 0
    for sign, body in zip(parts[1::2], parts[2::2]):
        body = body.strip()
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coef = Fraction(1)
        ue = ze = 0
        xe: dict[int, int] = {}
        for tok in body.split("*"):
            tok = tok.strip()
            if _RAT.match(tok):
                coef *= Fraction(tok)
                continue
            m = _FACTOR.match(tok)
            if not m:
                raise ValueError(f"bad factor {tok!r} in {text!r}")
            e = int(m.group(3)) if m.group(3) else 1
            if m.group(1) == "u":
                ue += e
            elif m.group(1) == "z":
                ze += e
            else:
                s_idx = int(m.group(2))
                if s_idx == 0:
                    continue
                xe[s_idx] = xe.get(s_idx, 0) + e
                max_x = max(max_x, s_idx)
        if sign == "-":
            coef = -coef
        terms.append((coef, ue, ze, xe))
    if d is None and max_x == 0 and all(t[2] == 0 for t in terms):
        out = Laurent()
        for coef, ue, _, _ in terms:
            out = out + Laurent.monomial(ue, coef)
        return out
    if d is None:
        d = max_x + 1
    out = TracePoly(d)
    for coef, ue, ze, xe in terms:
        vec = [0] * (d - 1)
        for s_idx, e in xe.items():
            if s_idx >= d:
                raise SignatureMismatch(f"x{s_idx} does not exist for d={d}")
            vec[s_idx - 1] += e
        out = out + TracePoly(d, {(ze, tuple(vec)): Laurent.monomial(ue, coef)})
    return out


def parse_laurent(text: str) -> Laurent:
    p = parse_poly(text)
    if isinstance(p, TracePoly):
        if any(m != (0, (0,) * (p.d - 1)) for m in p.terms):
            raise ValueError(f"{text!r} is not a polynomial in u alone")
        return p.terms.get((0, (0,) * (p.d - 1)), ZERO)
    return p
