"""Bigraded polynomial bookkeeping for stratum cohomology.

A stratum with symbol pair (a, b) carries the polynomial ring

    P(a, b) = Q[p_1 .. p_{floor(a/2)}, p'_1 .. p'_{floor(b/2)}],

the rational cohomology of BSO_a x BSO_b away from Euler classes, with
deg p_i = deg p'_i = 4i.  When the two variable ranges agree the swap
involution exchanges primed and unprimed variables and splits P(a, b)
into symmetric and skew summands.  Rank counting happens in truncated
integer power series in one variable t.

All arithmetic is exact: coefficients are fractions.Fraction, series
coefficients are int.
"""

from fractions import Fraction


class VariableSet:
    """Variable ranges of P(a, b): floor(a/2) unprimed, floor(b/2) primed."""

    __slots__ = ("a", "b", "na", "nb")

    def __init__(self, a, b):
        assert a >= 0 and b >= 0
        self.a = a
        self.b = b
        self.na = a // 2
        self.nb = b // 2

    def __eq__(self, other):
        return isinstance(other, VariableSet) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((VariableSet, self.a, self.b))

    def __repr__(self):
        return "VariableSet(%d, %d)" % (self.a, self.b)

    def square(self):
        return self.na == self.nb


# A monomial is a pair (es, fs) of exponent tuples, len(es) == na and
# len(fs) == nb of the owning VariableSet.  es[i] is the exponent of
# p_{i+1}, fs[j] of p'_{j+1}.

def mono_one(vs):
    return ((0,) * vs.na, (0,) * vs.nb)


def mono_degree(m):
    es, fs = m
    return 4 * sum((i + 1) * e for i, e in enumerate(es)) + \
           4 * sum((j + 1) * f for j, f in enumerate(fs))


def mono_mul(m1, m2):
    (e1, f1), (e2, f2) = m1, m2
    assert len(e1) == len(e2) and len(f1) == len(f2)
    return (tuple(x + y for x, y in zip(e1, e2)),
            tuple(x + y for x, y in zip(f1, f2)))


def mono_swap(m):
    es, fs = m
    assert len(es) == len(fs), "swap needs a square variable set"
    return (fs, es)


def mono_key(m):
    """Graded order, then comparison of (primed, unprimed) exponent tuples.

    Puts p_1 before p'_1, and orders the degree 8 block of P(2, 2) as
    p_1^2, p_1 p'_1, p'_1^2.
    """
    es, fs = m
    return (mono_degree(m), fs, es)


def _exponent_tuples(weights, total):
    # all exponent tuples e with sum(w_i * e_i) == total
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    rest = weights[1:]
    for e in range(total // w + 1):
        for tail in _exponent_tuples(rest, total - w * e):
            yield (e,) + tail


def enumerate_monomials(vs, degree):
    """All monomials of P(a, b) of the given degree, in mono_key order."""
    if degree < 0 or degree % 4 != 0:
        return []
    out = []
    wu = [4 * (i + 1) for i in range(vs.na)]
    wp = [4 * (j + 1) for j in range(vs.nb)]
    for dp in range(0, degree + 1, 4):
        for fs in _exponent_tuples(wp, dp):
            for es in _exponent_tuples(wu, degree - dp):
                out.append((es, fs))
    out.sort(key=mono_key)
    return out


def mono_str(m, primes=True):
    es, fs = m
    parts = []
    for i, e in enumerate(es):
        if e == 1:
            parts.append("p_%d" % (i + 1))
        elif e > 1:
            parts.append("p_%d^%d" % (i + 1, e))
    for j, f in enumerate(fs):
        name = "p'_%d" % (j + 1) if primes else "p_%d" % (j + 1)
        if f == 1:
            parts.append(name)
        elif f > 1:
            parts.append(name + "^%d" % f)
    return " ".join(parts) if parts else "1"


class Polynomial:
    """Exact polynomial in a fixed VariableSet, sparse over Fraction."""

    __slots__ = ("vars", "terms")

    def __init__(self, vs, terms=None):
        self.vars = vs
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def from_mono(cls, vs, m, coef=1):
        return cls(vs, {m: Fraction(coef)})

    @classmethod
    def zero(cls, vs):
        return cls(vs)

    @classmethod
    def one(cls, vs):
        return cls(vs, {mono_one(vs): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.vars == other.vars \
            and self.terms == other.terms

    def __add__(self, other):
        assert self.vars == other.vars
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial(self.vars, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.vars, {m: -c for m, c in self.terms.items()})

    def scale(self, k):
        k = Fraction(k)
        return Polynomial(self.vars, {m: k * c for m, c in self.terms.items()})

    def __mul__(self, other):
        assert self.vars == other.vars
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.vars, terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda mc: mono_key(mc[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if m == mono_one(self.vars):
                body = str(mag)
            elif mag == 1:
                body = mono_str(m)
            else:
                body = "%s %s" % (mag, mono_str(m))
            if not out:
                out = body if sign == "+" else "-" + body
            else:
                out += " %s %s" % (sign, body)
        return out


def swap(p):
    """The involution exchanging p_i and p'_i.  Square variable sets only."""
    assert p.vars.square(), "swap needs floor(a/2) == floor(b/2)"
    return Polynomial(p.vars, {mono_swap(m): c for m, c in p.terms.items()})


def sym_skew_split(p):
    """Split p into (symmetric, skew) parts under swap; p = s + k."""
    sp = swap(p)
    half = Fraction(1, 2)
    return (p + sp).scale(half), (p - sp).scale(half)


def restrict(p, to):
    """Carry p over to another variable set.

    Monomials that use a variable missing from the target map to 0; the
    rest are carried over unchanged.  Either range may shrink or grow.
    """
    terms = {}
    for (es, fs), c in p.terms.items():
        if any(es[to.na:]) or any(fs[to.nb:]):
            continue
        es2 = tuple(es[: to.na]) + (0,) * (to.na - len(es))
        fs2 = tuple(fs[: to.nb]) + (0,) * (to.nb - len(fs))
        m = (es2, fs2)
        terms[m] = terms.get(m, Fraction(0)) + c
    return Polynomial(to, terms)


def s_hom(m, target):
    """Whitney splitting of a single-set monomial into P(a, b).

    The source monomial lives in Q[p_1 .. p_n] (a VariableSet with no
    primed part).  Each p_i goes to sum_{j=0}^{i} p_j p'_{i-j} with
    p_0 = p'_0 = 1 and any out-of-range factor set to 0; the images
    multiply out in the target ring.
    """
    es, fs = m
    assert not any(fs), "s_hom sources carry no primed variables"
    out = Polynomial.one(target)
    for i0, e in enumerate(es):
        if not e:
            continue
        i = i0 + 1
        factor = Polynomial.zero(target)
        for j in range(i + 1):
            k = i - j
            if j > target.na or k > target.nb:
                continue
            eu = tuple(1 if t == j - 1 else 0 for t in range(target.na))
            fu = tuple(1 if t == k - 1 else 0 for t in range(target.nb))
            factor = factor + Polynomial.from_mono(target, (eu, fu))
        for _ in range(e):
            out = out * factor
    return out


class Series:
    """Integer power series in t truncated at degree D."""

    __slots__ = ("c", "D")

    def __init__(self, coeffs, D=None):
        coeffs = list(coeffs)
        if D is None:
            D = len(coeffs) - 1
        assert D >= 0
        coeffs = coeffs[: D + 1] + [0] * (D + 1 - len(coeffs))
        self.c = coeffs
        self.D = D

    @classmethod
    def zero(cls, D):
        return cls([0], D)

    @classmethod
    def one(cls, D):
        return cls([1], D)

    @classmethod
    def delta(cls, n, D):
        c = [0] * (D + 1)
        if 0 <= n <= D:
            c[n] = 1
        return cls(c, D)

    @classmethod
    def geom(cls, n, D):
        """1 / (1 - t^n)."""
        assert n >= 1
        c = [0] * (D + 1)
        for k in range(0, D + 1, n):
            c[k] = 1
        return cls(c, D)

    @classmethod
    def one_plus(cls, n, D):
        """1 + t^n."""
        assert n >= 1
        return cls.one(D) + cls.delta(n, D)

    @classmethod
    def ring(cls, degrees, D):
        """Series of a free commutative ring on generators of even degrees."""
        out = cls.one(D)
        for g in degrees:
            out = out * cls.geom(g, D)
        return out

    def shift(self, k):
        """Multiply by t^k; the truncation bound moves up with the shift."""
        assert k >= 0
        return Series([0] * k + self.c, self.D + k)

    def tshift(self, k):
        """Multiply by t^k, keeping the truncation bound."""
        assert k >= 0
        return Series(([0] * k + self.c)[: self.D + 1], self.D)

    def __add__(self, other):
        assert self.D == other.D
        return Series([x + y for x, y in zip(self.c, other.c)], self.D)

    def __sub__(self, other):
        assert self.D == other.D
        return Series([x - y for x, y in zip(self.c, other.c)], self.D)

    def __mul__(self, other):
        assert self.D == other.D
        c = [0] * (self.D + 1)
        for i, x in enumerate(self.c):
            if not x:
                continue
            for j in range(0, self.D + 1 - i):
                y = other.c[j]
                if y:
                    c[i + j] += x * y
        return Series(c, self.D)

    def __eq__(self, other):
        return isinstance(other, Series) and self.D == other.D and self.c == other.c

    def __getitem__(self, n):
        return self.c[n]

    def first_mismatch(self, other):
        """Smallest degree where the two series differ, or None."""
        assert self.D == other.D
        for n in range(self.D + 1):
            if self.c[n] != other.c[n]:
                return n
        return None

    def __repr__(self):
        return "Series(%s)" % (",".join(str(x) for x in self.c))


FULL, SYM, SKEW = "full", "sym", "skew"


class FlavoredSpace:
    """A graded piece of stratum content: P(a, b), or its swap eigenspace."""

    __slots__ = ("vars", "flavor")

    def __init__(self, vs, flavor):
        assert flavor in (FULL, SYM, SKEW)
        if flavor in (SYM, SKEW):
            assert vs.square()
        self.vars = vs
        self.flavor = flavor

    @classmethod
    def single(cls, d):
        """Q[p_1 .. p_{floor(d/2)}], the Pontryagin ring of BSO_d."""
        return cls(VariableSet(d, 0), FULL)

    def __eq__(self, other):
        return isinstance(other, FlavoredSpace) and self.vars == other.vars \
            and self.flavor == other.flavor

    def __hash__(self):
        return hash((FlavoredSpace, self.vars, self.flavor))

    def __repr__(self):
        return "FlavoredSpace(%r, %s)" % (self.vars, self.flavor)


def space_series(space, D):
    """Rank generating series of a flavored space, truncated at D."""
    vs = space.vars
    degrees = [4 * (i + 1) for i in range(vs.na)] + [4 * (j + 1) for j in range(vs.nb)]
    full = Series.ring(degrees, D)
    if space.flavor == FULL:
        return full
    # swap-fixed monomials have es == fs, so they form a free ring on
    # the doubled degrees 8, 16, ...
    fixed = Series.ring([8 * (i + 1) for i in range(vs.na)], D)
    if space.flavor == SYM:
        pair = full + fixed
    else:
        pair = full - fixed
    assert all(x % 2 == 0 for x in pair.c)
    return Series([x // 2 for x in pair.c], D)


def sym_reps(vs, degree):
    """Orbit representatives spanning the symmetric part in one degree."""
    return [m for m in enumerate_monomials(vs, degree)
            if mono_key(m) <= mono_key(mono_swap(m))]


def skew_reps(vs, degree):
    """Orbit representatives spanning the skew part in one degree."""
    return [m for m in enumerate_monomials(vs, degree)
            if mono_key(m) < mono_key(mono_swap(m))]
