"""Dimension of the Temperley-Lieb type quotient YTL_{d,n}(u).

Two independent routes are compared:

1. the closed formula d^n * Catalan(n), which counts the restricted family
   of canonical words;
2. the rank over Q(u) of the two-sided ideal spanned by a * r_i * b, with
   the rank taken at random rational values of u.

At d = 1 they agree.  At (d, n) = (2, 3) the ideal is larger than the
formula allows, and the quotient comes out 28-dimensional.
"""

import time

from yokonuma import ytl

for d, n in [(1, 2), (1, 3), (1, 4), (2, 2), (3, 2), (2, 3)]:
    t0 = time.perf_counter()
    rep = ytl.ytl_dimension(d, n, "both", samples=3, seed=0)
    status = "agree" if rep.agree else "DISAGREE"
    print(f"d={d} n={n}: formula {rep.dim_formula:3d}  rank {rep.dim_rank:3d}  "
          f"(ideal rank {rep.ideal_rank}, samples {rep.rank_detail['samples']})  {status}  "
          f"[{time.perf_counter() - t0:.1f}s]")

# the rewriting onto the restricted family sends the braid triple to minus
# its five shorter neighbours
from yokonuma import yhecke as yh  # noqa: E402

w = yh.eval_letters([("g", 1), ("g", 2), ("g", 1)], 1, 3)
print("g1 g2 g1 ->", ytl.reduce_to_sigma(w))

# at d=2 the rewriting cannot kill the whole ideal: 12 independent relations
# survive among the 40 restricted words
m = ytl.sigma_relations(2, 3)
from yokonuma.exactlinalg import rank_over_u  # noqa: E402

print("surviving relations among restricted words at (2,3):", rank_over_u(m).rank)
