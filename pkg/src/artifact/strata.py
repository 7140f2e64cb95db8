"""The Morin stratification, one stratum per local symbol.

For dimension difference d > 0 the singularity strata of corank one are
indexed as follows.  Level 1 (the fold) has symbol pairs (a, b) with
a + b = d + 1 and a <= b.  Level k >= 2 has a + b = d; even levels carry
one stratum per pair, odd levels >= 3 carry a pair of sign strata that
merge into one when a = b.  Level 0 is the regular stratum; its content
is the cohomology of BSO_d, carried here as the degenerate pair (d, 0)
so that the Euler-class bookkeeping below stays uniform.

The content of a stratum's contribution to the first page is a list of
flavored pieces, each an (optional Euler class) times a full, symmetric,
or skew polynomial space in the stratum's variables.  The flavor rules
are reproduced independently, degree by degree, by the sign-action
oracle in actions.py; the two routes are compared in the tests.
"""

from .grading import VariableSet, FlavoredSpace, FULL, SYM, SKEW, space_series

PLUS, MINUS = 1, -1


class Stratum:
    __slots__ = ("level", "a", "b", "sign")

    def __init__(self, level, a, b, sign=None):
        assert level >= 0
        assert sign in (None, PLUS, MINUS)
        if sign is not None:
            assert level >= 3 and level % 2 == 1 and a < b
        self.level = level
        self.a = a
        self.b = b
        self.sign = sign

    @property
    def d(self):
        if self.level == 0:
            return self.a
        if self.level == 1:
            return self.a + self.b - 1
        return self.a + self.b

    @property
    def vars(self):
        return VariableSet(self.a, self.b)

    @property
    def thom_degree(self):
        # codimension of the stratum, the degree of its Thom class
        if self.level == 0:
            return 0
        if self.level == 1:
            return self.a + self.b          # = d + 1
        return self.a + self.b + self.level  # = d + level

    @property
    def euler_degree(self):
        # e_{a,b} = e_a e_b, with e_0 = 1; for level 0 this is e_d
        return self.a + self.b

    def key(self):
        return (self.level, self.a, 0 if self.sign != MINUS else 1)

    def __eq__(self, other):
        return isinstance(other, Stratum) and \
            (self.level, self.a, self.b, self.sign) == \
            (other.level, other.a, other.b, other.sign)

    def __hash__(self):
        return hash((Stratum, self.level, self.a, self.b, self.sign))

    def __repr__(self):
        tag = {None: "", PLUS: "^+", MINUS: "^-"}[self.sign]
        if self.level == 0:
            return "A_0(d=%d)" % self.a
        return "A_%d%s(%d,%d)" % (self.level, tag, self.a, self.b)


def enumerate_strata(d, level):
    """All strata of one level, sorted by a, then sign (+ before -)."""
    assert d >= 1 and level >= 0
    if level == 0:
        return [Stratum(0, d, 0)]
    if level == 1:
        return [Stratum(1, a, d + 1 - a) for a in range((d + 1) // 2 + 1)]
    out = []
    for a in range(d // 2 + 1):
        b = d - a
        if level % 2 == 0 or a == b:
            out.append(Stratum(level, a, b))
        else:
            out.append(Stratum(level, a, b, PLUS))
            out.append(Stratum(level, a, b, MINUS))
    out.sort(key=Stratum.key)
    return out


def euler_available(s):
    """e_{a,b} exists rationally iff both a and b are even (e_0 = 1)."""
    return s.a % 2 == 0 and s.b % 2 == 0


class ContentPiece:
    """One flavored summand of a stratum's first-page content."""

    __slots__ = ("euler", "flavor")

    def __init__(self, euler, flavor):
        self.euler = euler
        self.flavor = flavor

    def space(self, s):
        return FlavoredSpace(s.vars, self.flavor)

    def __eq__(self, other):
        return isinstance(other, ContentPiece) and \
            (self.euler, self.flavor) == (other.euler, other.flavor)

    def __hash__(self):
        return hash((ContentPiece, self.euler, self.flavor))

    def __repr__(self):
        return "ContentPiece(%s%s)" % ("e." if self.euler else "", self.flavor)


def column_content(s):
    """Flavored pieces of one stratum, Euler-less pieces dropped.

    Level 0 and the generic strata carry P (+ e.P when the Euler class
    exists).  At a = b the swap action cuts each piece to one eigenspace:
    fold strata keep skew + e.sym, level 2r keeps sym (r even) or skew
    (r odd) on both pieces.  Odd levels >= 3 carry a single full piece,
    with an Euler factor exactly when r = (level-1)/2 is odd.
    """
    lv = s.level
    e_ok = euler_available(s)
    if lv == 0 or lv == 1 and s.a != s.b:
        pieces = [ContentPiece(False, FULL)]
        if e_ok:
            pieces.append(ContentPiece(True, FULL))
        return pieces
    if lv == 1:
        pieces = [ContentPiece(False, SKEW)]
        if e_ok:
            pieces.append(ContentPiece(True, SYM))
        return pieces
    r = lv // 2
    if lv % 2 == 0:
        if s.a != s.b:
            flavor = FULL
        else:
            flavor = SYM if r % 2 == 0 else SKEW
        pieces = [ContentPiece(False, flavor)]
        if e_ok:
            pieces.append(ContentPiece(True, flavor))
        return pieces
    # odd level 2r + 1
    if r % 2 == 0:
        return [ContentPiece(False, FULL)]
    return [ContentPiece(True, FULL)] if e_ok else []


def content_series(s, D):
    """Rank series of one stratum's content, Thom and Euler shifts included."""
    from .grading import Series
    total = Series.zero(D)
    for piece in column_content(s):
        shift = s.thom_degree + (s.euler_degree if piece.euler else 0)
        if shift > D:
            continue
        total = total + space_series(piece.space(s), D - shift).shift(shift)
    return total
