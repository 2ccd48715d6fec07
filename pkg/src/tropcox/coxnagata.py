"""The 27 distinguished generators of the Cox-Nagata ring of a cubic del
Pezzo surface, their initial forms at a subspace, and monericity tests.

Generators live in Q[p_123..p_456][x_1..x_6, y_1..y_6]: E_i = x_i, the 15
line generators F_ij, and the 6 conic generators G_i.  The group null(A)
of a 3x6 points matrix A acts by (z, w) -> (z, w + lam*z); the templates
here are invariant when evaluated at the Plucker coordinates of the row
span of A (see tests for the randomized oracle pinning down all signs).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import plucker
from .plucker import (N_COORDS, TRIPLES, TRIPLE_INDEX, IDENTITY,
                      SignedPermutation, PluckerPoint, PluckerBinomial,
                      monomial_from_triples)
from .ratfield import RatFn

GENERATOR_IDS = tuple(
    ["E%d" % i for i in range(1, 7)]
    + ["F%d%d" % (i, j) for i, j in itertools.combinations(range(1, 7), 2)]
    + ["G%d" % i for i in range(1, 7)]
)
GENERATOR_INDEX = {g: i for i, g in enumerate(GENERATOR_IDS)}


def xy_monomial(xs=(), ys=()):
    """Exponent 12-tuple over x_1..x_6, y_1..y_6."""
    e = [0] * 12
    for i in xs:
        e[i - 1] += 1
    for i in ys:
        e[5 + i] += 1
    return tuple(e)


def xy_degree(exps):
    """Z^7 degree: deg x_i = e_i, deg y_i = e_i + e_7."""
    d = [0] * 7
    for i in range(6):
        d[i] += exps[i] + exps[6 + i]
        d[6] += exps[6 + i]
    return tuple(d)


def format_xy(exps) -> str:
    parts = []
    for i in range(6):
        if exps[i]:
            parts.append("x%d" % (i + 1) if exps[i] == 1 else "x%d^%d" % (i + 1, exps[i]))
    for i in range(6):
        if exps[6 + i]:
            parts.append("y%d" % (i + 1) if exps[6 + i] == 1 else "y%d^%d" % (i + 1, exps[6 + i]))
    return "*".join(parts) if parts else "1"


class GeneratorTemplate:
    """One generator: a list of (coefficient polynomial, xy monomial) terms.

    Coefficient polynomials are dicts {20-exponent tuple: Fraction}.
    """

    __slots__ = ("gid", "terms", "degree")

    def __init__(self, gid, terms):
        self.gid = gid
        self.terms = tuple((dict(coeff), tuple(xy)) for coeff, xy in terms)
        degs = {xy_degree(xy) for _, xy in self.terms}
        if len(degs) != 1:
            raise ValueError("template %s is not Z^7-homogeneous" % gid)
        self.degree = degs.pop()

    def binomial_coefficients(self):
        """(term index, PluckerBinomial) for each two-monomial coefficient."""
        out = []
        for idx, (coeff, _) in enumerate(self.terms):
            if len(coeff) == 2:
                out.append((idx, PluckerBinomial(list(coeff.items()))))
        return out

    def evaluate(self, point: PluckerPoint, z, w) -> RatFn:
        """Value at Plucker coordinates `point` and rational points z, w."""
        total = RatFn(0, 1)
        for coeff, xy in self.terms:
            c = plucker.evaluate_poly(coeff, point)
            if c.is_zero():
                continue
            mono = RatFn(1, 1)
            for i in range(6):
                for _ in range(xy[i]):
                    mono = mono * z[i]
                for _ in range(xy[6 + i]):
                    mono = mono * w[i]
            total = total + c * mono
        return total

    def evaluate_rational(self, pcoords, z, w) -> Fraction:
        """Value over Q: `pcoords` is a length-20 list of Fractions."""
        total = Fraction(0)
        for coeff, xy in self.terms:
            c = Fraction(0)
            for exps, a in coeff.items():
                prod = a
                for i, e in enumerate(exps):
                    for _ in range(e):
                        prod *= pcoords[i]
                c += prod
            if not c:
                continue
            mono = Fraction(1)
            for i in range(6):
                for _ in range(xy[i]):
                    mono *= z[i]
                for _ in range(xy[6 + i]):
                    mono *= w[i]
            total += c * mono
        return total


def _apply_to_template(sigma: SignedPermutation, template: GeneratorTemplate, gid):
    terms = []
    for coeff, xy in template.terms:
        new_coeff = {}
        for exps, c in coeff.items():
            e2, s = sigma.act_monomial(exps)
            new_coeff[e2] = new_coeff.get(e2, Fraction(0)) + c * s
        new_xy = [0] * 12
        for i in range(6):
            new_xy[sigma(i + 1) - 1] += xy[i]
            new_xy[6 + sigma(i + 1) - 1] += xy[6 + i]
        new_coeff = {e: c for e, c in new_coeff.items() if c}
        if new_coeff:
            terms.append((new_coeff, tuple(new_xy)))
    return GeneratorTemplate(gid, terms)


def _monomial_lex_key(exps):
    """Sorted factor sequence of a Plucker monomial, e.g. p134*p156 -> (4, 9)."""
    return tuple(i for i, e in enumerate(exps) for _ in range(e))


def _normalize_sign(template: GeneratorTemplate) -> GeneratorTemplate:
    """Scale by -1 if needed so the lex-least xy monomial's coefficient has
    its lex-least Plucker monomial (by factor sequence) with coefficient +1."""
    lead = min(template.terms, key=lambda t: t[1])
    coeff = lead[0]
    c = coeff[min(coeff, key=_monomial_lex_key)]
    if c < 0:
        terms = [({e: -v for e, v in cf.items()}, xy) for cf, xy in template.terms]
        return GeneratorTemplate(template.gid, terms)
    return template


# -- printed master templates ------------------------------------------------

def _f12_template():
    terms = []
    for k in (3, 4, 5, 6):
        xs = [i for i in (3, 4, 5, 6) if i != k]
        coeff = {monomial_from_triples([(1, 2, k)]): Fraction(1)}
        terms.append((coeff, xy_monomial(xs=xs, ys=[k])))
    return GeneratorTemplate("F12", terms)


_G1_RAW = [
    # ((sign, 4 triples), ...), y indices, x indices (with multiplicity)
    (((1, ((2, 3, 4), (2, 3, 5), (2, 3, 6), (4, 5, 6))),), (2, 3), (4, 5, 6, 1, 1)),
    (((1, ((2, 3, 4), (2, 4, 6), (2, 4, 5), (3, 5, 6))),), (2, 4), (3, 5, 6, 1, 1)),
    (((1, ((2, 3, 5), (2, 4, 5), (2, 5, 6), (3, 4, 6))),), (2, 5), (3, 4, 6, 1, 1)),
    (((1, ((2, 3, 6), (2, 4, 6), (2, 5, 6), (3, 4, 5))),), (2, 6), (3, 4, 5, 1, 1)),
    (((1, ((2, 3, 4), (3, 4, 5), (3, 4, 6), (2, 5, 6))),), (3, 4), (2, 5, 6, 1, 1)),
    (((1, ((2, 3, 5), (3, 4, 5), (3, 5, 6), (2, 4, 6))),), (3, 5), (2, 4, 6, 1, 1)),
    (((1, ((2, 3, 6), (3, 4, 6), (3, 5, 6), (2, 4, 5))),), (3, 6), (2, 4, 5, 1, 1)),
    (((1, ((2, 4, 5), (3, 4, 5), (4, 5, 6), (2, 3, 6))),), (4, 5), (2, 3, 6, 1, 1)),
    (((1, ((2, 4, 6), (3, 4, 6), (4, 5, 6), (2, 3, 5))),), (4, 6), (2, 3, 5, 1, 1)),
    (((1, ((2, 5, 6), (3, 5, 6), (4, 5, 6), (2, 3, 4))),), (5, 6), (2, 3, 4, 1, 1)),
    (((1, ((2, 3, 5), (3, 4, 6), (1, 2, 4), (2, 5, 6))),
      (-1, ((2, 3, 4), (3, 5, 6), (1, 2, 5), (2, 4, 6)))), (2, 1), (3, 4, 5, 6, 1)),
    (((1, ((2, 3, 5), (2, 4, 6), (1, 3, 4), (3, 5, 6))),
      (-1, ((2, 3, 4), (2, 5, 6), (1, 3, 5), (3, 4, 6)))), (3, 1), (2, 4, 5, 6, 1)),
    (((1, ((2, 4, 5), (2, 3, 6), (1, 3, 4), (4, 5, 6))),
      (1, ((2, 3, 4), (2, 5, 6), (1, 4, 5), (3, 4, 6)))), (4, 1), (2, 3, 5, 6, 1)),
    (((1, ((2, 3, 5), (2, 4, 6), (1, 4, 5), (3, 5, 6))),
      (-1, ((2, 4, 5), (2, 3, 6), (1, 3, 5), (4, 5, 6)))), (5, 1), (2, 3, 4, 6, 1)),
    (((1, ((2, 3, 6), (2, 4, 5), (1, 4, 6), (3, 5, 6))),
      (-1, ((2, 4, 6), (2, 3, 5), (1, 3, 6), (4, 5, 6)))), (6, 1), (2, 3, 4, 5, 1)),
    (((1, ((2, 3, 5), (2, 4, 6), (1, 3, 4), (1, 5, 6))),
      (-1, ((2, 3, 4), (2, 5, 6), (1, 3, 5), (1, 4, 6)))), (1, 1), (2, 3, 4, 5, 6)),
]


def _g1_template():
    terms = []
    for coeff_spec, ys, xs in _G1_RAW:
        coeff = {}
        for sign, triples in coeff_spec:
            e = monomial_from_triples(triples)
            coeff[e] = coeff.get(e, Fraction(0)) + sign
        terms.append((coeff, xy_monomial(xs=xs, ys=ys)))
    return GeneratorTemplate("G1", terms)


def _perm_sending_pair(i, j):
    """Deterministic permutation with 1 -> i, 2 -> j, rest in increasing order."""
    rest_src = [k for k in range(1, 7) if k not in (1, 2)]
    rest_dst = [k for k in range(1, 7) if k not in (i, j)]
    sigma = [0] * 6
    sigma[0], sigma[1] = i, j
    for s, d in zip(rest_src, rest_dst):
        sigma[s - 1] = d
    return SignedPermutation(tuple(sigma))


_GENERATORS = None


def build_generators():
    """All 27 generator templates, in the fixed order GENERATOR_IDS."""
    global _GENERATORS
    if _GENERATORS is not None:
        return _GENERATORS
    out = []
    one = {(0,) * N_COORDS: Fraction(1)}
    for i in range(1, 7):
        out.append(GeneratorTemplate("E%d" % i, [(one, xy_monomial(xs=[i]))]))
    f12 = _f12_template()
    for i, j in itertools.combinations(range(1, 7), 2):
        t = _apply_to_template(_perm_sending_pair(i, j), f12, "F%d%d" % (i, j))
        out.append(_normalize_sign(t))
    g1 = _g1_template()
    for i in range(1, 7):
        sigma = IDENTITY if i == 1 else plucker.transposition(1, i)
        t = _apply_to_template(sigma, g1, "G%d" % i)
        out.append(_normalize_sign(t))
    n_binomial = sum(len(t.binomial_coefficients()) for t in out)
    assert n_binomial == 36, "expected 36 binomial coefficients, found %d" % n_binomial
    _GENERATORS = tuple(out)
    return _GENERATORS


def get_generator(gid: str) -> GeneratorTemplate:
    return build_generators()[GENERATOR_INDEX[gid]]


def generator_degree(g: GeneratorTemplate):
    return g.degree


# ---------------------------------------------------------------------------
# initial forms and monericity
# ---------------------------------------------------------------------------

class InitialForm:
    """Weight (min valuation over coefficients) and the terms attaining it."""

    __slots__ = ("weight", "support")

    def __init__(self, weight, support):
        self.weight = weight
        self.support = tuple(support)  # (xy exponents, leading Rational)

    def is_monomial(self):
        return len(self.support) == 1

    def __repr__(self):
        body = " + ".join("%s*%s" % (c, format_xy(xy)) for xy, c in self.support)
        return "InitialForm(weight=%d, %s)" % (self.weight, body)


def evaluate_initial(g: GeneratorTemplate, point: PluckerPoint) -> InitialForm:
    """Initial form of g evaluated at a subspace with Plucker coordinates
    `point`: drop vanishing coefficients, take the terms of least valuation."""
    vals = []
    for coeff, xy in g.terms:
        c = plucker.evaluate_poly(coeff, point)
        if c.is_zero():
            continue
        vals.append((c.valuation(), c, xy))
    if not vals:
        raise ValueError("all coefficients of %s vanish: degenerate subspace" % g.gid)
    w = min(v for v, _, _ in vals)
    support = [(xy, c.leading_coefficient()) for v, c, xy in vals if v == w]
    return InitialForm(w, support)


class MonericClass:
    """A 27-tuple of initial xy monomials, one per generator id."""

    __slots__ = ("monomials",)

    def __init__(self, monomials):
        monomials = tuple(tuple(m) for m in monomials)
        if len(monomials) != 27:
            raise ValueError("expected 27 monomials")
        self.monomials = monomials

    def __eq__(self, other):
        return isinstance(other, MonericClass) and self.monomials == other.monomials

    def __hash__(self):
        return hash(self.monomials)

    def permuted(self, sigma: SignedPermutation) -> "MonericClass":
        return MonericClass(permute_class_tuple(self.monomials, sigma))

    def orbit_key(self, group=None):
        """Canonical key under a group of SignedPermutations (default: all 720)."""
        if group is None:
            group = plucker.all_permutations()
        return min(permute_class_tuple(self.monomials, s) for s in group)

    def lines(self):
        return ["%s -> %s" % (gid, format_xy(m))
                for gid, m in zip(GENERATOR_IDS, self.monomials)]


def permute_class_tuple(monomials, sigma: SignedPermutation):
    """Permute a 27-tuple of xy monomials by sigma (generators and variables)."""
    out = [None] * 27
    for pos, gid in enumerate(GENERATOR_IDS):
        xy = monomials[pos]
        new_xy = [0] * 12
        for i in range(6):
            new_xy[sigma(i + 1) - 1] += xy[i]
            new_xy[6 + sigma(i + 1) - 1] += xy[6 + i]
        if gid[0] == "E":
            new_gid = "E%d" % sigma(int(gid[1]))
        elif gid[0] == "F":
            a, b = sorted((sigma(int(gid[1])), sigma(int(gid[2]))))
            new_gid = "F%d%d" % (a, b)
        else:
            new_gid = "G%d" % sigma(int(gid[1]))
        out[GENERATOR_INDEX[new_gid]] = tuple(new_xy)
    return tuple(out)


class MonericityResult:
    __slots__ = ("moneric", "monomial_class", "weights", "failures")

    def __init__(self, moneric, monomial_class, weights, failures):
        self.moneric = moneric
        self.monomial_class = monomial_class
        self.weights = weights
        self.failures = failures

    def __bool__(self):
        return self.moneric


def monericity(point: PluckerPoint) -> MonericityResult:
    """Check whether the generator set is moneric at the subspace.

    Returns the 27 initial monomials and weights on success; otherwise the
    failing generators and their multi-term initial supports.
    """
    monomials = []
    weights = []
    failures = {}
    for g in build_generators():
        form = evaluate_initial(g, point)
        weights.append(form.weight)
        if form.is_monomial():
            monomials.append(form.support[0][0])
        else:
            monomials.append(None)
            failures[g.gid] = form
    if failures:
        return MonericityResult(False, None, tuple(weights), failures)
    return MonericityResult(True, MonericClass(monomials), tuple(weights), {})


def class_report(cls: MonericClass, weights=None) -> dict:
    """Machine-readable form of a moneric class."""
    out = {
        "monomials": {gid: format_xy(m) for gid, m in zip(GENERATOR_IDS, cls.monomials)},
        "exponents": {gid: list(m) for gid, m in zip(GENERATOR_IDS, cls.monomials)},
    }
    if weights is not None:
        out["weights"] = list(weights)
    return out
