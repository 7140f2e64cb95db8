"""Sparse exact rank computations.

Rows are dicts mapping column index to a nonzero coefficient.  Rational
rows are cleared to integers first; elimination is fraction-free (cross
multiplication followed by content reduction), with the pivot chosen
deterministically as the first row holding the smallest column index.
"""

from fractions import Fraction
from math import gcd


def _to_int_row(row):
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    for c, v in row.items():
        iv = int(v * den) if isinstance(v, Fraction) else v * den
        if iv:
            out[c] = iv
    return out


def _reduce(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank(rows):
    """Rank of the span of the given sparse rows."""
    work = [r for r in (_to_int_row(row) for row in rows) if r]
    rk = 0
    while work:
        best = None
        for i, r in enumerate(work):
            mc = min(r)
            if best is None or mc < best[0]:
                best = (mc, i)
        col, i = best
        pivot = work.pop(i)
        pv = pivot[col]
        rk += 1
        nxt = []
        for r in work:
            if col in r:
                rv = r[col]
                new = {}
                for c in set(r) | set(pivot):
                    v = pv * r.get(c, 0) - rv * pivot.get(c, 0)
                    if v:
                        new[c] = v
                if new:
                    nxt.append(_reduce(new))
            else:
                nxt.append(r)
        work = nxt
    return rk


def in_span(rows, vec):
    """Whether vec lies in the row span."""
    base = [r for r in rows]
    return rank(base + [vec]) == rank(base)


def spans_match_rank(rows, extra, target_rank):
    """rank(rows + extra) - rank(rows), compared against target_rank."""
    return rank(list(rows) + list(extra)) - rank(rows) == target_rank
