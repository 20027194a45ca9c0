"""Arithmetic in the Yokonuma-Hecke algebra Y_{d,n}(u).

Elements are sums of basis words t1^r1 ... tn^rn g_w with Laurent
coefficients in u.  This walks through the generators, the quadratic
relation and the inverse of g_i.
"""

from yokonuma import yhecke as yh
from yokonuma.checks import presentation_suite
from yokonuma.scalars import ONE, U

d, n = 3, 3
g1, g2 = yh.gen_g(1, d, n), yh.gen_g(2, d, n)
t1 = yh.gen_t(1, 1, d, n)

# framing moves through g_i by permuting strands
print("g1 t1      =", yh.mul(g1, t1))

# the idempotent e_1 averages t1^m t2^-m
e1 = yh.idempotent_e(1, d, n)
print("e1         =", e1)
print("e1^2 == e1:", yh.mul(e1, e1) == e1)

# the quadratic relation g^2 = 1 + (u-1) e + (u-1) e g
sq = yh.mul(g1, g1)
print("g1^2       =", sq)
print("matches    :", sq == yh.unit(d, n) + e1.scale(U - ONE) + yh.mul(e1, g1).scale(U - ONE))

inv = yh.g_inverse(1, d, n)
print("g1^-1      =", inv)
print("g1 g1^-1 == 1:", yh.mul(g1, inv) == yh.unit(d, n))

# braid relation
print("braid      :", yh.product(g1, g2, g1) == yh.product(g2, g1, g2))

# the whole presentation, plus associativity on random triples
rep = presentation_suite(2, 3, triples=100, seed=0)
print("presentation checks:", rep["checked"])
print("all hold:", rep["ok"])

# JSON form round-trips exactly
x = yh.mul(yh.mul(t1, g1), g2)
assert yh.AlgebraElement.from_json(d, n, x.to_json()) == x
print("json:", x.to_json())
