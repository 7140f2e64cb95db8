"""The differentials between consecutive columns.

All maps raise the total degree by one and are induced by attaching
maps between neighboring strata; every rule below is stated on the
basis elements of e1.py and produces an integer combination of target
basis elements.

Column 0 to fold (d0):  plain monomials die.  For d even the Euler
part maps by

    e . m  |->  sum_a (-1)^a U_{a, d+1-a, 1} . s_hom(m),

the Whitney splitting computed in each target's own variables.

Fold to level 2 (d1):  every Euler-carrying fold element dies.  The
Euler-free part of the stratum (a, b) maps by restriction of variables,

    a = 0:            U . m |-> U_{0, d, 2} . m|
    0 < a < top:      U . m |-> U_{a-1, b, 2} . m| + U_{a, b-1, 2} . m|
    top, d even:      U . m |-> U_{a-1, b, 2} . m| + U_{a, a, 2} . (m| - swap m|)
    top, d odd, skew: U . k |-> U_{a-1, b, 2} . k|

Level 2r to 2r + 1:  for r even the Euler-free piece maps with the
covering multiplicity 2 (onto both sign sheets when a < b, onto the
single full target when a = b); the Euler piece dies.  For r odd the
roles of the two pieces swap.

Level 2r + 1 to 2r + 2:  sign sheets map by +-U . m with the sign of
the sheet.  At a = b the single full source maps by m - swap m (r even)
or e.(m + swap m) (r odd), landing in the skew or symmetric target.
"""

from fractions import Fraction

from .grading import Polynomial, mono_swap, mono_key, swap, restrict, s_hom, FULL, SYM, SKEW
from .strata import Stratum, column_content, PLUS, MINUS
from .e1 import BasisElement, build_basis


def fold_sign(a):
    # the (-1)^a orientation comparison in d0
    return -1 if a % 2 else 1


# multiplicity picked up from the two-sheeted covering in the even-column rules
COVER_FACTOR = 2


def element_poly(el):
    """The polynomial a basis element stands for: m, m + swap m, or m - swap m."""
    vs = el.stratum.vars
    m = el.mono
    p = Polynomial.from_mono(vs, m)
    if el.piece.flavor == FULL:
        return p
    sm = mono_swap(m)
    if el.piece.flavor == SYM:
        return p if sm == m else p + Polynomial.from_mono(vs, sm)
    assert sm != m
    return p - Polynomial.from_mono(vs, sm)


def _piece_for(s, euler):
    for piece in column_content(s):
        if piece.euler == euler:
            return piece
    return None


def _expand(out, s, euler, poly, coef=1):
    """Accumulate coef * (U_s . e^euler . poly) as basis coordinates.

    Full pieces take the coefficients as they stand; symmetric and skew
    pieces read off the coefficient at each orbit representative, after
    checking that poly really lies in the claimed eigenspace.
    """
    if poly.is_zero() or coef == 0:
        return
    piece = _piece_for(s, euler)
    assert piece is not None, "image hits a stratum without matching content"
    if piece.flavor == FULL:
        items = poly.terms.items()
    else:
        sp = swap(poly)
        if piece.flavor == SYM:
            assert sp == poly, "image claimed symmetric is not"
            items = [(m, c) for m, c in poly.terms.items()
                     if mono_key(m) <= mono_key(mono_swap(m))]
        else:
            assert sp == -poly, "image claimed skew is not"
            items = [(m, c) for m, c in poly.terms.items()
                     if mono_key(m) < mono_key(mono_swap(m))]
    for m, c in items:
        el = BasisElement(s, piece, m)
        v = out.get(el, Fraction(0)) + Fraction(coef) * c
        if v:
            out[el] = v
        else:
            out.pop(el, None)


def d0(d, el):
    """Column 0 into the fold column."""
    s = el.stratum
    assert s.level == 0
    out = {}
    if not el.piece.euler:
        return out
    for a in range(d // 2 + 1):
        t = Stratum(1, a, d + 1 - a)
        _expand(out, t, False, s_hom((el.mono[0], ()), t.vars), fold_sign(a))
    return out


def d_fold(d, el):
    """Fold column into level 2."""
    s = el.stratum
    assert s.level == 1
    out = {}
    if el.piece.euler:
        return out
    a, b = s.a, s.b
    p = element_poly(el)
    a_top = (d + 1) // 2
    if a == a_top:
        if a == b:
            # d odd; the skew part restricts one step down
            t = Stratum(2, a - 1, b)
            _expand(out, t, False, restrict(p, t.vars))
        else:
            # d even top (a, a + 1)
            t1 = Stratum(2, a - 1, b)
            _expand(out, t1, False, restrict(p, t1.vars))
            t2 = Stratum(2, a, a)
            q = restrict(p, t2.vars)
            _expand(out, t2, False, q - swap(q))
    elif a == 0:
        t = Stratum(2, 0, d)
        _expand(out, t, False, restrict(p, t.vars))
    else:
        t1 = Stratum(2, a - 1, b)
        _expand(out, t1, False, restrict(p, t1.vars))
        t2 = Stratum(2, a, b - 1)
        _expand(out, t2, False, restrict(p, t2.vars))
    return out


def d_even_col(d, el):
    """Level 2r into level 2r + 1."""
    s = el.stratum
    lv = s.level
    assert lv >= 2 and lv % 2 == 0
    r = lv // 2
    out = {}
    if (r % 2 == 0) == el.piece.euler:
        return out
    p = element_poly(el)
    if s.a != s.b:
        for sign in (PLUS, MINUS):
            t = Stratum(lv + 1, s.a, s.b, sign)
            _expand(out, t, el.piece.euler, p, COVER_FACTOR)
    else:
        t = Stratum(lv + 1, s.a, s.b)
        _expand(out, t, el.piece.euler, p, COVER_FACTOR)
    return out


def d_odd_col(d, el):
    """Level 2r + 1 into level 2r + 2."""
    s = el.stratum
    lv = s.level
    assert lv >= 3 and lv % 2 == 1
    r = (lv - 1) // 2
    out = {}
    t = Stratum(lv + 1, s.a, s.b)
    p = element_poly(el)
    if s.a != s.b:
        sheet = 1 if s.sign == PLUS else -1
        _expand(out, t, el.piece.euler, p, sheet)
    elif r % 2 == 0:
        assert not el.piece.euler
        _expand(out, t, False, p - swap(p))
    else:
        assert el.piece.euler
        _expand(out, t, True, p + swap(p))
    return out


def differential(d, el):
    """Dispatch on the source column."""
    lv = el.stratum.level
    if lv == 0:
        return d0(d, el)
    if lv == 1:
        return d_fold(d, el)
    if lv % 2 == 0:
        return d_even_col(d, el)
    return d_odd_col(d, el)


class LinearMap:
    """One differential as an integer matrix in the indexed bases.

    cols[j] maps target row index to the integer entry, one dict per
    source basis element.
    """

    __slots__ = ("source", "target", "cols")

    def __init__(self, source, target, cols):
        self.source = source
        self.target = target
        self.cols = cols

    def rank(self):
        from .linalg import rank
        return rank(self.cols)

    def is_zero(self):
        return all(not c for c in self.cols)

    def compose(self, other):
        """self after other; other's target basis must be self's source."""
        assert other.target.column == self.source.column
        assert other.target.degree == self.source.degree
        cols = []
        for col in other.cols:
            acc = {}
            for i, v in col.items():
                for t, w in self.cols[i].items():
                    nv = acc.get(t, 0) + v * w
                    if nv:
                        acc[t] = nv
                    else:
                        del acc[t]
            cols.append(acc)
        return LinearMap(other.source, self.target, cols)

    def dense(self):
        rows = len(self.target.elements)
        mat = [[0] * len(self.cols) for _ in range(rows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                mat[i][j] = v
        return mat

    def __repr__(self):
        return "LinearMap(%d x %d, k=%d -> %d, n=%d -> %d)" % (
            len(self.target.elements), len(self.cols),
            self.source.column, self.target.column,
            self.source.degree, self.target.degree)


def assemble_matrix(d, k, n):
    """Matrix of the differential out of column k, total degree n."""
    src = build_basis(d, k, n)
    tgt = build_basis(d, k + 1, n + 1)
    cols = []
    for el in src:
        comb = differential(d, el)
        col = {}
        for tel, c in comb.items():
            assert c.denominator == 1, "non-integer differential entry"
            col[tgt.position(tel)] = int(c)
        cols.append(col)
    return LinearMap(src, tgt, cols)
