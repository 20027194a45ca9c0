"""Exact rank over Q and over Q(u).

Ranks over the rational function field are obtained by specialising ``u`` at
random rationals and taking the largest rank seen; a fully symbolic
fraction-free elimination over the Laurent ring is available for small
matrices.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import Laurent, as_fraction


class SampleExhausted(RuntimeError):
    pass


class ExactMatrix:
    """Sparse matrix: ``rows`` is a list of ``{col: entry}`` dicts.

    Entries are :class:`Laurent` or :class:`Fraction`; zero entries are never
    stored.
    """

    def __init__(self, rows, ncols: int):
        self.ncols = ncols
        self.rows = []
        for row in rows:
            if isinstance(row, dict):
                clean = {c: v for c, v in row.items() if v}
            else:
                if len(row) != ncols:
                    raise ValueError("ragged matrix")
                clean = {c: v for c, v in enumerate(row) if v}
            if any(not 0 <= c < ncols for c in clean):
                raise ValueError("column index out of range")
            self.rows.append(clean)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self) -> "ExactMatrix":
        cols = [dict() for _ in range(self.ncols)]
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                cols[c][r] = v
        return ExactMatrix(cols, self.nrows)

    def dense(self):
        zero = 0
        return [[row.get(c, zero) for c in range(self.ncols)] for row in self.rows]

    def is_rational(self) -> bool:
        for row in self.rows:
            for v in row.values():
                if isinstance(v, Laurent) and not v.is_constant():
                    return False
        return True

    def evaluate(self, u) -> "ExactMatrix":
        u = as_fraction(u)
        out = []
        for row in self.rows:
            out.append({c: (v.evaluate(u) if isinstance(v, Laurent) else as_fraction(v)) for c, v in row.items()})
        return ExactMatrix(out, self.ncols)


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    """Scale each row to primitive integers; drop zero and duplicate rows."""
    seen = set()
    out = []
    for row in m.rows:
        if not row:
            continue
        vals = {c: as_fraction(v.constant_value() if isinstance(v, Laurent) else v) for c, v in row.items()}
        lcm = 1
        for v in vals.values():
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        ints = {c: int(v * lcm) for c, v in vals.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        first = ints[min(ints)]
        if first < 0:
            g = -g
        key = tuple(sorted((c, v // g) for c, v in ints.items()))
        if key in seen:
            continue
        seen.add(key)
        dense = [0] * m.ncols
        for c, v in key:
            dense[c] = v
        out.append(dense)
    return out


def rank_rational(m: ExactMatrix) -> int:
    """Fraction-free (Bareiss) elimination; pivot = smallest nonzero entry."""
    rows = _integer_rows(m)
    if not rows:
        return 0
    ncols = m.ncols
    rank = 0
    prev = 1
    active = rows
    for col in range(ncols):
        best = None
        for idx, row in enumerate(active):
            v = row[col]
            if v and (best is None or abs(v) < abs(active[best][col])):
                best = idx
        if best is None:
            continue
        pivot_row = active[best]
        piv = pivot_row[col]
        rest = []
        for idx, row in enumerate(active):
            if idx == best:
                continue
            a = row[col]
            if a:
                new = [(piv * row[c] - a * pivot_row[c]) // prev for c in range(ncols)]
            else:
                new = [(piv * row[c]) // prev for c in range(ncols)]
            if any(new):
                rest.append(new)
        rank += 1
        prev = piv
        active = rest
        if not active:
            break
    return rank


def rank_symbolic(m: ExactMatrix) -> int:
    """Bareiss elimination over the Laurent ring ``Q[u, u^-1]``.

    Exact but expensive; intended for small matrices.
    """
    rows = [[Laurent.coerce(row.get(c, 0)) for c in range(m.ncols)] for row in m.rows if row]
    rank = 0
    prev = Laurent.const(1)
    active = rows
    for col in range(m.ncols):
        best = None
        for idx, row in enumerate(active):
            v = row[col]
            if v and (best is None or len(v.terms) < len(active[best][col].terms)):
                best = idx
        if best is None:
            continue
        pivot_row = active[best]
        piv = pivot_row[col]
        rest = []
        for idx, row in enumerate(active):
            if idx == best:
                continue
            a = row[col]
            new = [(piv * row[c] - a * pivot_row[c]).exact_div(prev) for c in range(m.ncols)]
            if any(new):
                rest.append(new)
        rank += 1
        prev = piv
        active = rest
        if not active:
            break
    return rank


@dataclass
class RankReport:
    rank: int
    stable: bool
    seed: int
    sample_points: list = field(default_factory=list)
    sample_ranks: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "stable": self.stable,
            "seed": self.seed,
            "samples": [{"u": str(p), "rank": r} for p, r in zip(self.sample_points, self.sample_ranks)],
        }


FORBIDDEN = {Fraction(0), Fraction(1), Fraction(-1)}


def _draw_point(rng: random.Random, bound: int = 97) -> Fraction:
    while True:
        p = rng.randint(-bound, bound)
        q = rng.randint(1, bound)
        u = Fraction(p, q)
        if u not in FORBIDDEN:
            return u


def rank_over_u(m: ExactMatrix, samples: int = 3, seed: int = 0, max_retries: int = 50) -> RankReport:
    """Generic rank over ``Q(u)`` by specialisation at ``samples`` points.

    Each specialisation rank is a lower bound; the maximum is reported and
    flagged ``stable`` when at least two samples attain it.
    """
    if samples < 3:
        raise ValueError("need at least 3 samples")
    if m.nrows == 0 or m.ncols == 0:
        return RankReport(0, True, seed, [], [])
    rng = random.Random(seed)
    points: list[Fraction] = []
    evaluated = []
    retries = 0
    while len(points) < samples:
        u = _draw_point(rng)
        if u in points:
            retries += 1
        else:
            try:
                ev = m.evaluate(u)
            except ZeroDivisionError:
                retries += 1
                ev = None
            if ev is not None:
                points.append(u)
                evaluated.append(ev)
        if retries > max_retries:
            raise SampleExhausted("could not find admissible sample points")
    ranks = [rank_rational(ev) for ev in evaluated]
    top = max(ranks)
    return RankReport(top, ranks.count(top) >= 2, seed, points, ranks)
