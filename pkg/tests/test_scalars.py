from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from yokonuma.scalars import (
    IncompleteAssignment, Laurent, ParameterDomainError, QuadExt, QuadRoots, SignatureMismatch,
    TracePoly, U, as_fraction, parse_laurent, parse_poly, rational_sqrt,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
laurents = st.dictionaries(st.integers(-3, 3), rationals, max_size=4).map(Laurent)


def trace_polys(d):
    mono = st.tuples(st.integers(0, 2), st.tuples(*[st.integers(0, 2)] * (d - 1)))
    return st.dictionaries(mono, laurents, max_size=4).map(lambda t: TracePoly(d, t))


usym = sympy.Symbol("u")


def to_sympy(p: Laurent):
    return sum((sympy.Rational(c.numerator, c.denominator) * usym ** e for e, c in p.terms.items()),
               sympy.Integer(0))


def from_sympy(expr) -> Laurent:
    expr = sympy.expand(expr)
    out = {}
    for term in sympy.Add.make_args(expr):
        c, rest = term.as_coeff_Mul()
        e = 0 if rest == 1 else sympy.degree(rest, usym) if rest.is_polynomial(usym) else -sympy.degree(1 / rest, usym)
        out[int(e)] = out.get(int(e), 0) + Fraction(int(c.p), int(c.q))
    return Laurent(out)


class TestLaurent:
    @given(laurents, laurents)
    def test_mul_matches_sympy(self, a, b):
        assert a * b == from_sympy(to_sympy(a) * to_sympy(b))

    @given(laurents, laurents)
    def test_add_matches_sympy(self, a, b):
        assert a + b == from_sympy(to_sympy(a) + to_sympy(b))

    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a

    def test_no_zero_terms_stored(self):
        p = Laurent({0: 1, 2: 0, -1: Fraction(0, 3)})
        assert p.terms == {0: 1}
        assert (U - U).terms == {}

    def test_identity_is_constant_one(self):
        assert Laurent.const(1).terms == {0: Fraction(1)}

    @given(laurents, laurents)
    def test_exact_div_roundtrip(self, a, b):
        if not b:
            return
        assert (a * b).exact_div(b) == a

    def test_exact_div_rejects_non_multiple(self):
        with pytest.raises(ArithmeticError):
            (U + 1).exact_div(U + 2)

    @given(laurents, st.fractions(min_value=1, max_value=9, max_denominator=5))
    def test_evaluate_matches_sympy(self, a, u):
        want = to_sympy(a).subs(usym, sympy.Rational(u.numerator, u.denominator))
        assert a.evaluate(u) == Fraction(int(sympy.numer(want)), int(sympy.denom(want)))

    def test_rendering(self):
        p = Laurent({0: -1, -1: 2})
        assert str(p) == "-1 + 2*u^-1"
        assert parse_laurent(str(p)) == p

    @given(laurents)
    def test_parse_roundtrip(self, a):
        assert parse_laurent(str(a)) == a

    def test_no_floats(self):
        with pytest.raises(TypeError):
            as_fraction(0.5)


class TestTracePoly:
    def test_x0_is_one(self):
        assert TracePoly.x(0, 3) == TracePoly.const(3)
        assert TracePoly.x(3, 3) == TracePoly.const(3)
        assert TracePoly.x(4, 3) == TracePoly.x(1, 3)

    def test_rendering_example(self):
        p = TracePoly(2, {(0, (0,)): -1, (1, (2,)): 3}) + TracePoly.const(2, Laurent.monomial(-1, 2))
        text = str(p)
        assert text == "-1 + 2*u^-1 + 3*z*x1^2"
        assert parse_poly(text, 2) == p

    @given(trace_polys(3))
    def test_parse_roundtrip(self, p):
        assert parse_poly(str(p), 3) == p

    @given(trace_polys(2), trace_polys(2), trace_polys(2))
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_signature_mismatch(self):
        with pytest.raises(SignatureMismatch):
            TracePoly.z(2) + TracePoly.z(3)

    @given(trace_polys(2), trace_polys(2))
    def test_substitute_is_homomorphism(self, p, q):
        roots = QuadRoots(3, 4, 1)  # rational roots
        r = QuadRoots(3, Fraction(29, 8), 1)[0]  # irrational root
        for z in (roots[0], roots[1], r, Fraction(2, 7)):
            assert (p * q).substitute(2, {1: Fraction(1, 2)}, z) == \
                p.substitute(2, {1: Fraction(1, 2)}, z) * q.substitute(2, {1: Fraction(1, 2)}, z)
            assert (p + q).substitute(3, {1: 5}, z) == p.substitute(3, {1: 5}, z) + q.substitute(3, {1: 5}, z)

    def test_substitute_with_explicit_modulus(self):
        # z^2 + z + 1/3 over z, i.e. the modulus of 3z^2 + 3z + 1
        zed = QuadExt.generator((Fraction(1, 3), Fraction(1)))
        assert (TracePoly.z(1) * TracePoly.z(1)).substitute(2, None, zed) == QuadExt(Fraction(-1, 3), -1, zed.modulus)

    def test_domain_and_assignment_errors(self):
        p = TracePoly.x(1, 3)
        with pytest.raises(ParameterDomainError):
            p.substitute(1, {1: 1, 2: 1})
        with pytest.raises(IncompleteAssignment):
            p.substitute(2, {1: 1})
        with pytest.raises(IncompleteAssignment):
            TracePoly.z(1).substitute(2)

    def test_specialize_keeps_z(self):
        p = TracePoly.z(2) * TracePoly.x(1, 2) * U + TracePoly.const(2, 1)
        assert str(p.specialize(3, {1: Fraction(1, 2)})) == "1 + 3/2*z"


class TestQuadExt:
    @given(st.fractions(min_value=1, max_value=5, max_denominator=4), rationals, rationals)
    def test_roots_satisfy_quadratic(self, a, b, c):
        for r in QuadRoots(a, b, c):
            assert (r * r * a + r * b + c).is_zero()

    def test_irrational_roots_are_not_rational(self):
        qr = QuadRoots(1, 0, -2)
        assert qr.rational_roots is None
        assert not qr[0].is_rational()
        assert qr[0] != qr[1]
        assert (qr[0] + qr[1]) == QuadExt.from_rational(0, qr.monic)
        assert (qr[0] * qr[1]) == QuadExt.from_rational(-2, qr.monic)

    def test_rational_roots_sorted(self):
        assert QuadRoots(3, 4, 1).rational_roots == (Fraction(-1), Fraction(-1, 3))

    @given(rationals, rationals, rationals, rationals)
    def test_field_ops_against_sympy(self, a0, a1, b0, b1):
        modulus = (Fraction(-3), Fraction(0))
        x, y = QuadExt(a0, a1, modulus), QuadExt(b0, b1, modulus)
        s3 = sympy.sqrt(3)
        R = lambda f: sympy.Rational(f.numerator, f.denominator)  # noqa: E731
        want = sympy.expand((R(a0) + R(a1) * s3) * (R(b0) + R(b1) * s3))
        got = x * y
        assert sympy.simplify(R(got.c0) + R(got.c1) * s3 - want) == 0

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(Fraction(73, 64)) is None
        assert rational_sqrt(-1) is None
