"""Plucker coordinates of Gr(3,6), the signed S6 action, Plucker relations,
and rewriting of binomials modulo the Plucker ideal.

The 20 sorted triples of {1..6} are ordered lexicographically; every vector
in R^20 uses this ordering.  A subspace is always presented as the row span
of a 3x6 matrix; p_ijk is the minor on columns (i,j,k).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ratfield import RatFn

TRIPLES = tuple(itertools.combinations(range(1, 7), 3))
TRIPLE_INDEX = {t: i for i, t in enumerate(TRIPLES)}
N_COORDS = 20


def sort_triple(i, j, k):
    """(sorted triple, permutation sign), or (None, 0) on a repeated index."""
    if i == j or j == k or i == k:
        return None, 0
    sign = 1
    a, b, c = i, j, k
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return (a, b, c), sign


class SignedPermutation:
    """A permutation of {1..6} with its induced signed action on triples."""

    __slots__ = ("sigma", "triple_map")

    def __init__(self, sigma):
        self.sigma = tuple(sigma)
        tm = []
        for (i, j, k) in TRIPLES:
            t, s = sort_triple(sigma[i - 1], sigma[j - 1], sigma[k - 1])
            tm.append((TRIPLE_INDEX[t], s))
        self.triple_map = tuple(tm)

    def __repr__(self):
        return "SignedPermutation(%r)" % (self.sigma,)

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.sigma == other.sigma

    def __hash__(self):
        return hash(self.sigma)

    def __call__(self, i: int) -> int:
        return self.sigma[i - 1]

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other: (self*other)(i) = self(other(i))."""
        return SignedPermutation(tuple(self.sigma[other.sigma[i] - 1] for i in range(6)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * 6
        for i, v in enumerate(self.sigma):
            inv[v - 1] = i + 1
        return SignedPermutation(tuple(inv))

    # -- actions -------------------------------------------------------------

    def act_valuations(self, w):
        """Permute a vector indexed by triples (signs dropped)."""
        out = [0] * N_COORDS
        for i in range(N_COORDS):
            j, _ = self.triple_map[i]
            out[j] = w[i]
        return tuple(out)

    def act_coords(self, coords):
        """Permute Q(t) coordinates with signs."""
        out = [None] * N_COORDS
        for i in range(N_COORDS):
            j, s = self.triple_map[i]
            out[j] = coords[i] if s == 1 else -coords[i]
        return tuple(out)

    def act_monomial(self, exps):
        """Image of a monomial in the 20 symbols: (new exponents, sign)."""
        out = [0] * N_COORDS
        sign = 1
        for i, e in enumerate(exps):
            if e:
                j, s = self.triple_map[i]
                out[j] += e
                if s < 0 and e % 2:
                    sign = -sign
        return tuple(out), sign


IDENTITY = SignedPermutation((1, 2, 3, 4, 5, 6))


def all_permutations():
    """The 720 signed permutations, lexicographic in sigma."""
    return [SignedPermutation(p) for p in itertools.permutations(range(1, 7))]


def transposition(i, j):
    s = list(range(1, 7))
    s[i - 1], s[j - 1] = j, i
    return SignedPermutation(tuple(s))


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

class PluckerPoint:
    """The 20 Plucker coordinates of a 3-dim subspace of Q(t)^6."""

    __slots__ = ("coords", "vals")

    def __init__(self, coords):
        coords = tuple(coords)
        if len(coords) != N_COORDS:
            raise ValueError("expected 20 coordinates")
        if all(c.is_zero() for c in coords):
            raise ValueError("all Plucker coordinates vanish")
        self.coords = coords
        self.vals = tuple(None if c.is_zero() else c.valuation() for c in coords)

    def coord(self, triple) -> RatFn:
        return self.coords[TRIPLE_INDEX[tuple(triple)]]

    def val(self, triple):
        return self.vals[TRIPLE_INDEX[tuple(triple)]]


def det3_ratfn(rows):
    a, b, c = rows
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def plucker_from_matrix(m) -> PluckerPoint:
    """Plucker coordinates of the row span of a 3x6 matrix over Q(t).

    Rejects matrices of rank < 3.
    """
    if len(m) != 3 or any(len(r) != 6 for r in m):
        raise ValueError("expected a 3x6 matrix")
    rows = [[x if isinstance(x, RatFn) else RatFn(x, 1) for x in r] for r in m]
    coords = []
    for (i, j, k) in TRIPLES:
        cols = (i - 1, j - 1, k - 1)
        coords.append(det3_ratfn([[rows[r][c] for c in cols] for r in range(3)]))
    if all(c.is_zero() for c in coords):
        raise ValueError("matrix has rank < 3")
    return PluckerPoint(coords)


# ---------------------------------------------------------------------------
# relations
# ---------------------------------------------------------------------------

def plucker_relations():
    """Quadratic Grassmann-Plucker relations for Gr(3,6).

    Each relation is a dict {(i<=j triple-index pair): integer coefficient};
    the set contains all three-term and four-term exchange relations, each
    normalized so its lexicographically least monomial has coefficient +1.
    """
    seen = {}
    for alpha in itertools.combinations(range(1, 7), 2):
        for beta in itertools.combinations(range(1, 7), 4):
            rel = {}
            for pos, x in enumerate(beta):
                t1, s1 = sort_triple(alpha[0], alpha[1], x)
                if t1 is None:
                    continue
                rest = tuple(y for y in beta if y != x)
                t2, s2 = sort_triple(*rest)
                sign = (-1) ** pos * s1 * s2
                key = tuple(sorted((TRIPLE_INDEX[t1], TRIPLE_INDEX[t2])))
                rel[key] = rel.get(key, 0) + sign
            rel = {k: v for k, v in rel.items() if v}
            if not rel:
                continue
            lead = min(rel)
            if rel[lead] < 0:
                rel = {k: -v for k, v in rel.items()}
            frozen = tuple(sorted(rel.items()))
            seen[frozen] = rel
    return [dict(f) for f in sorted(seen)]


def three_term_relations():
    return [r for r in plucker_relations() if len(r) == 3]


# ---------------------------------------------------------------------------
# binomials in the 20 Plucker symbols
# ---------------------------------------------------------------------------

class PluckerBinomial:
    """c1 * p^m1 + c2 * p^m2 with nonzero rational c's and distinct monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        terms = tuple(sorted(((tuple(e), Fraction(c)) for e, c in terms)))
        if len(terms) != 2 or any(c == 0 for _, c in terms) or terms[0][0] == terms[1][0]:
            raise ValueError("a binomial needs two nonzero terms on distinct monomials")
        self.terms = terms

    def __eq__(self, other):
        return isinstance(other, PluckerBinomial) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "PluckerBinomial(%s)" % format_poly(dict(self.terms))

    def exponents(self):
        return (self.terms[0][0], self.terms[1][0])

    def sign_normalized_key(self):
        (e1, c1), (e2, c2) = self.terms
        if c1 < 0:
            c1, c2 = -c1, -c2
        return (e1, c1, e2, c2)

    def evaluate(self, point: PluckerPoint) -> RatFn:
        return evaluate_poly(dict(self.terms), point)


def monomial_from_triples(triples):
    e = [0] * N_COORDS
    for t in triples:
        e[TRIPLE_INDEX[tuple(t)]] += 1
    return tuple(e)


def evaluate_monomial(exps, point: PluckerPoint) -> RatFn:
    out = RatFn(1, 1)
    for i, e in enumerate(exps):
        for _ in range(e):
            out = out * point.coords[i]
    return out


def evaluate_poly(terms, point: PluckerPoint) -> RatFn:
    out = RatFn(0, 1)
    for exps, c in terms.items():
        out = out + evaluate_monomial(exps, point) * c
    return out


def act(sigma: SignedPermutation, x):
    """Apply a signed permutation to a point, valuation vector, binomial,
    or (exponents, coefficient) monomial pair."""
    if isinstance(x, PluckerPoint):
        return PluckerPoint(sigma.act_coords(x.coords))
    if isinstance(x, PluckerBinomial):
        terms = []
        for e, c in x.terms:
            e2, s = sigma.act_monomial(e)
            terms.append((e2, c * s))
        return PluckerBinomial(terms)
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], tuple):
        e2, s = sigma.act_monomial(x[0])
        return (e2, x[1] * s)
    if isinstance(x, (tuple, list)) and len(x) == N_COORDS:
        return sigma.act_valuations(x)
    raise TypeError("cannot act on %r" % (x,))


# ---------------------------------------------------------------------------
# rewriting modulo three-term relations
# ---------------------------------------------------------------------------

def _relation_rewrites():
    """For each three-term relation and each of its monomials, the two
    replacement terms: (pair, [(coeff, pair), (coeff, pair)])."""
    rewrites = []
    for rel in three_term_relations():
        items = list(rel.items())
        for i in range(3):
            pair_i, c_i = items[i]
            repl = []
            for j in range(3):
                if j != i:
                    pair_j, c_j = items[j]
                    repl.append((Fraction(-c_j, c_i), pair_j))
            rewrites.append((pair_i, repl))
    return rewrites


_REWRITES = None


def _get_rewrites():
    global _REWRITES
    if _REWRITES is None:
        _REWRITES = _relation_rewrites()
    return _REWRITES


def _rewrite_term(exps, coeff):
    """All single-step rewrites of coeff * p^exps by a three-term relation.

    Each result is a pair of (exps, coeff) terms summing to an equivalent
    expression modulo the Plucker ideal.
    """
    out = []
    for pair, repl in _get_rewrites():
        a, b = pair
        if a == b:
            if exps[a] < 2:
                continue
        elif exps[a] < 1 or exps[b] < 1:
            continue
        base = list(exps)
        base[a] -= 1
        base[b] -= 1
        new_terms = []
        for c, (x, y) in repl:
            e = list(base)
            e[x] += 1
            e[y] += 1
            new_terms.append((tuple(e), coeff * c))
        out.append(new_terms)
    return out


def _combine(terms):
    acc = {}
    for e, c in terms:
        acc[e] = acc.get(e, Fraction(0)) + c
    return {e: c for e, c in acc.items() if c}


def equivalent_polynomials(b: PluckerBinomial, depth: int, max_terms: int = 2,
                           internal_terms: int = 3):
    """Polynomials equivalent to b modulo the Plucker ideal, found by
    breadth-first rewriting with at most `depth` steps.  Intermediate
    states may carry up to `internal_terms` terms (a rewrite must usually
    pass through a trinomial before a cancellation or sign-merge brings it
    back down); only results with at most `max_terms` terms are returned.
    Always contains b itself.

    Returns a list of dicts {exponents: coefficient}.
    """
    start = dict(b.terms)
    seen = {_poly_key(start)}
    frontier = [start]
    found = [start]
    for _ in range(depth):
        new_frontier = []
        for poly in frontier:
            for e, c in list(poly.items()):
                rest = [(e2, c2) for e2, c2 in poly.items() if e2 != e]
                for repl in _rewrite_term(e, c):
                    cand = _combine(rest + repl)
                    if not cand or len(cand) > internal_terms:
                        continue
                    key = _poly_key(cand)
                    if key in seen:
                        continue
                    seen.add(key)
                    new_frontier.append(cand)
                    if len(cand) <= max_terms:
                        found.append(cand)
        frontier = new_frontier
    return found


def _poly_key(poly):
    items = tuple(sorted(poly.items()))
    if items and items[0][1] < 0:
        items = tuple((e, -c) for e, c in items)
    return items


def equivalent_binomials(b: PluckerBinomial, depth: int):
    """Plucker-equivalent binomials of b, up to `depth` rewriting steps."""
    out = []
    for poly in equivalent_polynomials(b, depth, max_terms=2):
        if len(poly) == 2:
            out.append(PluckerBinomial(list(poly.items())))
    return out


def format_monomial(exps) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e:
            name = "p%d%d%d" % TRIPLES[i]
            parts.append(name if e == 1 else "%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


def format_poly(terms) -> str:
    parts = []
    for e, c in sorted(terms.items()):
        mono = format_monomial(e)
        if c == 1:
            parts.append("+ " + mono)
        elif c == -1:
            parts.append("- " + mono)
        else:
            parts.append(("- " if c < 0 else "+ ") + "%s*%s" % (abs(c), mono))
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]
