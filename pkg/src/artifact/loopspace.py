"""Characteristic-class algebra of the stable loop space.

Rationally, the cohomology of the infinite loop space on a spectrum is
the free graded-commutative algebra on the spectrum's positive-degree
cohomology: polynomial on even generators, exterior on odd ones.  The
generator counts come straight from the second-page ranks, so the
Poincare series of the whole characteristic-class algebra is

    prod_{n even} (1 - t^n)^{-g_n} * prod_{n odd} (1 + t^n)^{g_n}.

The column-0 survivors form the subalgebra of ordinary bundle classes;
mmm_subseries returns its rank series, which is independent of the
truncation order.
"""

from .grading import Series
from .pages import e2_ranks


def free_gca_series(gens, D):
    """Poincare series of a free graded-commutative algebra.

    gens maps generator degree (>= 1) to multiplicity.  A degree-0
    entry would sit in the unit and is rejected.
    """
    out = Series.one(D)
    for n in sorted(gens):
        g = gens[n]
        assert n >= 1 and g >= 0
        if g == 0 or n > D:
            continue
        factor = Series.geom(n, D) if n % 2 == 0 else Series.one_plus(n, D)
        for _ in range(g):
            out = out * factor
    return out


def loopspace_series(d, R, D, offset=0):
    """Rank series of the loop-space class algebra for the R-truncation.

    Generator degrees follow the spectrum convention; pass a nonzero
    offset to shift every generator degree by that amount (the usual
    delooping shift between the spectrum and the space level).
    """
    top = max(1, D - offset)
    report = e2_ranks(d, R, top)
    gens = {}
    for n in range(1, top + 1):
        g = report.total[n]
        if g:
            assert n + offset >= 1, "offset pushes a generator below degree 1"
            gens[n + offset] = gens.get(n + offset, 0) + g
    return free_gca_series(gens, D)


def mmm_subseries(d, D):
    """Rank series of the surviving column-0 subalgebra.

    Equals the series of a polynomial ring on classes of degree
    4, 8, ..., 4*floor(d/2) for every d, hence is independent of the
    truncation order.
    """
    return Series.ring([4 * (i + 1) for i in range(d // 2)], D)
