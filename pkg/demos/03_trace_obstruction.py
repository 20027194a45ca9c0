"""Does the Markov trace on Y_{d,n} factor through the quotient?

The trace factors exactly when it vanishes on every a * r_i * b.  Taking a
trace of r_i itself forces a quadratic in z; the scan then evaluates
tr(w r_i) at both roots for every basis word w, in exact quadratic-field
arithmetic.
"""

from fractions import Fraction

from yokonuma import jtrace as jt
from yokonuma import yhecke as yh

print("z-quadratic, d=1:", jt.z_quadratic(1), "= 0")
print("z-quadratic, d=2:", jt.z_quadratic(2), "= 0")

# classical case: both roots work for every word
p1 = jt.TraceParams(1, 2, {})
print("d=1 u=2 roots:", jt.z_roots(p1).describe())
print("d=1 scan nonzero:", jt.factoring_scan(1, 3, p1).nonzero_count)

# framed case: generic parameters give nonzero obstructions
p2 = jt.TraceParams(2, 2, {1: Fraction(1, 2)})
roots = jt.z_roots(p2)
print("d=2 u=2 x1=1/2 roots:", roots.describe())
w = yh.basis_element(2, 3, (1, 1, 1), (1, 2, 3))
for k, r in enumerate(roots, start=1):
    print(f"  tr(t1 t2 t3 r_1) at root {k}:", jt.obstruction(w, 1, p2, r))
rep = jt.factoring_scan(2, 3, p2)
print(f"  nonzero entries {rep.nonzero_count} of {len(rep.entries)}; {len(rep.witnesses)} witness words")

# x1 = 1 makes every framing trivial for the trace, and the obstruction vanishes
p3 = jt.TraceParams(2, 2, {1: 1})
print("d=2 x1=1 scan nonzero:", jt.factoring_scan(2, 3, p3).nonzero_count)

# the radical expression for z solves a different quadratic
print(jt.radical_form_report(p1))
