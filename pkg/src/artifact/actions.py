"""Sign-action oracle for stratum content.

Each stratum's contribution to the first page is the invariant part of
the ambient Thom-class module

    U_a . U_b . (U_k) . e_a^{eps_a} e_b^{eps_b} . P(a, b)

under the residual symmetry group of the local symbol (U_k is the extra
Thom factor present at levels >= 2, e_a exists only for even a >= 2).
The group has order at most 4 and acts by signed symbol substitutions;
applying a substitution to the ordered product above picks up Koszul
signs when two odd-degree symbols trade places.

This module builds those groups from the generator tables and counts
invariants by signed orbit enumeration, degree by degree.  It is the
independent route to the content rules hard-coded in strata.py, and the
crosscheck between the two is part of the acceptance suite.
"""

from .grading import Series, enumerate_monomials, mono_swap
from .strata import enumerate_strata, content_series


class ActionGen:
    """A signed symbol substitution.

    With exchange set, U_a maps to su_a * U_b and U_b to su_b * U_a
    (likewise e_a, e_b with se_a, se_b) and the polynomial variables
    trade primes; otherwise every symbol maps to its own signed copy.
    su_k is the sign on the extra Thom factor of levels >= 2.
    """

    __slots__ = ("exchange", "su_a", "su_b", "su_k", "se_a", "se_b")

    def __init__(self, exchange, su_a, su_b, su_k, se_a, se_b):
        self.exchange = exchange
        self.su_a = su_a
        self.su_b = su_b
        self.su_k = su_k
        self.se_a = se_a
        self.se_b = se_b

    def encode(self):
        return (self.exchange, self.su_a, self.su_b, self.su_k, self.se_a, self.se_b)

    def __eq__(self, other):
        return isinstance(other, ActionGen) and self.encode() == other.encode()

    def __hash__(self):
        return hash(self.encode())

    def __repr__(self):
        return "ActionGen%r" % (self.encode(),)


IDENTITY = ActionGen(False, 1, 1, 1, 1, 1)


def compose(g, h):
    """g after h, as substitutions."""
    return ActionGen(
        g.exchange != h.exchange,
        h.su_a * (g.su_b if h.exchange else g.su_a),
        h.su_b * (g.su_a if h.exchange else g.su_b),
        h.su_k * g.su_k,
        h.se_a * (g.se_b if h.exchange else g.se_a),
        h.se_b * (g.se_a if h.exchange else g.se_b),
    )


def group_closure(gens):
    items = {IDENTITY}
    items.update(gens)
    changed = True
    while changed:
        changed = False
        for g in list(items):
            for h in list(items):
                gh = compose(g, h)
                if gh not in items:
                    items.add(gh)
                    changed = True
    assert len(items) <= 4
    return sorted(items, key=ActionGen.encode)


def symmetry_action(s):
    """Generators of the residual symmetry group of one stratum."""
    assert s.level >= 1
    beta = ActionGen(False, -1, -1, 1, -1, -1)
    lv = s.level
    if lv == 1:
        if s.a == 0:
            return []
        if s.a != s.b:
            return [beta]
        if s.a % 2 == 0:
            alpha = ActionGen(True, -1, 1, 1, -1, 1)
        else:
            alpha = ActionGen(True, 1, 1, 1, 1, 1)
        return [alpha, beta]
    r = lv // 2
    if lv % 2 == 0:
        if s.a == 0:
            return []
        if s.a != s.b:
            return [beta]
        sk = -1 if r % 2 else 1
        if s.a % 2 == 0:
            alpha = ActionGen(True, 1, 1, sk, 1, 1)
        else:
            # the twist reverses one orientation, so the Euler sign
            # must track the Thom sign or the closure leaks past Z/4
            alpha = ActionGen(True, 1, -1, sk, 1, -1)
        return [alpha, beta]
    # odd level 2r + 1
    sk = -1 if (r + 1) % 2 else 1
    if s.a == 0:
        return [ActionGen(False, 1, -1, sk, 1, -1)]
    alpha = ActionGen(False, -1, 1, sk, -1, 1)
    return [alpha, beta]


def apply_gen(g, s, x):
    """Apply a substitution to an ambient basis element (ea, eb, mono).

    Returns (sign, element).  The Koszul sign (-1)^(a*b) enters once for
    the U_a U_b transposition and once more for e_a e_b when both Euler
    factors are present.
    """
    ea, eb, m = x
    sign = g.su_a * g.su_b
    if s.level >= 2:
        sign *= g.su_k
    if ea:
        sign *= g.se_a
    if eb:
        sign *= g.se_b
    if not g.exchange:
        return sign, x
    assert s.a == s.b
    koszul = -1 if (s.a * s.b) % 2 else 1
    sign *= koszul
    if ea and eb:
        sign *= koszul
    return sign, (eb, ea, mono_swap(m))


def ambient_elements(s, n):
    """Ambient basis elements of total degree n over one stratum."""
    out = []
    ea_range = (0, 1) if (s.a % 2 == 0 and s.a >= 2) else (0,)
    eb_range = (0, 1) if (s.b % 2 == 0 and s.b >= 2) else (0,)
    for ea in ea_range:
        for eb in eb_range:
            md = n - s.thom_degree - ea * s.a - eb * s.b
            if md < 0:
                continue
            for m in enumerate_monomials(s.vars, md):
                out.append((ea, eb, m))
    return out


def invariant_series(s, D):
    """Invariant ranks by signed orbit counting.

    An orbit contributes 1 unless some group element fixes one of its
    elements with sign -1, in which case the signed orbit sum vanishes.
    """
    G = group_closure(symmetry_action(s))
    c = [0] * (D + 1)
    for n in range(s.thom_degree, D + 1):
        seen = set()
        for x in ambient_elements(s, n):
            if x in seen:
                continue
            orbit = set()
            dead = False
            for g in G:
                sign, y = apply_gen(g, s, x)
                orbit.add(y)
                if y == x and sign < 0:
                    dead = True
            seen.update(orbit)
            if not dead:
                c[n] += 1
    return Series(c, D)


class CrosscheckReport:
    """Per-stratum comparison of oracle invariants against table content."""

    __slots__ = ("d", "level", "entries")

    def __init__(self, d, level, entries):
        self.d = d
        self.level = level
        self.entries = entries

    @property
    def ok(self):
        return all(mis is None for _, mis in self.entries)

    def lines(self):
        out = []
        for s, mis in self.entries:
            if mis is None:
                out.append("ok   %r" % s)
            else:
                out.append("FAIL %r first mismatch at degree %d" % (s, mis))
        return out

    def __repr__(self):
        return "\n".join(self.lines())


def oracle_crosscheck(d, level, D):
    """Compare invariant_series with the hard-coded content, stratum by stratum."""
    entries = []
    for s in enumerate_strata(d, level):
        inv = invariant_series(s, D)
        tab = content_series(s, D)
        entries.append((s, inv.first_mismatch(tab)))
    return CrosscheckReport(d, level, entries)
