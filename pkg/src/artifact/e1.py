"""Explicit bases for the columns of the first page.

Column k in total degree n is the direct sum over level-k strata of
their flavored content pieces in matching internal degree.  A basis
element records the stratum, the piece, and one monomial: full pieces
take every monomial, symmetric pieces one representative per swap
orbit (standing for the integer orbit sum m + swap(m), or m itself
when fixed), skew pieces one representative per free orbit (standing
for m - swap(m)).  This normalization keeps every differential matrix
entry an integer.

Bases are deterministically ordered by stratum, then piece (Euler-free
first), then monomial.
"""

from .grading import (
    Series, enumerate_monomials, sym_reps, skew_reps,
    mono_degree, mono_key, mono_str, FULL, SYM, SKEW,
)
from .strata import enumerate_strata, column_content, content_series


class BasisElement:
    __slots__ = ("stratum", "piece", "mono")

    def __init__(self, stratum, piece, mono):
        self.stratum = stratum
        self.piece = piece
        self.mono = mono

    @property
    def degree(self):
        s = self.stratum
        d = s.thom_degree + mono_degree(self.mono)
        if self.piece.euler:
            d += s.euler_degree
        return d

    def key(self):
        return (self.stratum.key(), self.piece.euler, mono_key(self.mono))

    def _ident(self):
        return (self.stratum, self.piece.euler, self.mono)

    def __eq__(self, other):
        return isinstance(other, BasisElement) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        s = self.stratum
        if s.level == 0:
            head = ""
        elif s.level == 1:
            head = "U_{%d,%d,1}." % (s.a, s.b)
        else:
            tag = {None: "", 1: "+", -1: "-"}[s.sign]
            head = "U%s_{%d,%d,%d}." % (tag, s.a, s.b, s.level)
        mid = "e." if self.piece.euler else ""
        return head + mid + mono_str(self.mono)


class IndexedBasis:
    """Ordered basis of one (column, degree) spot with an index lookup."""

    __slots__ = ("d", "column", "degree", "elements", "index")

    def __init__(self, d, column, degree, elements):
        self.d = d
        self.column = column
        self.degree = degree
        self.elements = elements
        self.index = {el: i for i, el in enumerate(elements)}
        assert len(self.index) == len(elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def position(self, el):
        return self.index[el]

    def __repr__(self):
        return "IndexedBasis(d=%d, k=%d, n=%d, size=%d)" % (
            self.d, self.column, self.degree, len(self.elements))


def _piece_monomials(s, piece, md):
    if md < 0:
        return []
    if piece.flavor == FULL:
        return enumerate_monomials(s.vars, md)
    if piece.flavor == SYM:
        return sym_reps(s.vars, md)
    assert piece.flavor == SKEW
    return skew_reps(s.vars, md)


def build_basis(d, k, n):
    """The ordered basis of column k in total degree n."""
    elements = []
    for s in enumerate_strata(d, k):
        for piece in column_content(s):
            md = n - s.thom_degree - (s.euler_degree if piece.euler else 0)
            for m in _piece_monomials(s, piece, md):
                elements.append(BasisElement(s, piece, m))
    return IndexedBasis(d, k, n, elements)


def column_series(d, k, D):
    """Rank series of one whole column."""
    total = Series.zero(D)
    for s in enumerate_strata(d, k):
        total = total + content_series(s, D)
    return total
