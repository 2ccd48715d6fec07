import itertools
import random
from fractions import Fraction

import pytest

from tropcox.ratfield import RatFn
from tropcox import plucker
from tropcox.plucker import (TRIPLES, TRIPLE_INDEX, PluckerBinomial,
                             SignedPermutation, plucker_from_matrix,
                             plucker_relations, three_term_relations,
                             equivalent_binomials, act, monomial_from_triples,
                             all_permutations, transposition, evaluate_poly)


def random_rank3_matrix(rng, lo=-9, hi=9):
    while True:
        m = [[RatFn(rng.randint(lo, hi), 1) for _ in range(6)] for _ in range(3)]
        try:
            return m, plucker_from_matrix(m)
        except ValueError:
            continue


def test_identity_minor():
    m = [[RatFn(1 if i == j else 0, 1) for j in range(6)] for i in range(3)]
    p = plucker_from_matrix(m)
    assert p.coord((1, 2, 3)) == RatFn(1, 1)
    assert all(p.coords[i].is_zero() for i in range(1, 20))


def test_ones_block_minor():
    m = [[RatFn(1 if i == j else 0, 1) for j in range(3)] + [RatFn(1, 1)] * 3
         for i in range(3)]
    p = plucker_from_matrix(m)
    assert p.coord((1, 2, 4)) == RatFn(1, 1)


def test_rank_deficient_rejected():
    m = [[RatFn(1, 1)] * 6, [RatFn(1, 1)] * 6, [RatFn(2, 1)] * 6]
    with pytest.raises(ValueError):
        plucker_from_matrix(m)


def test_relation_count():
    rels = plucker_relations()
    three = [r for r in rels if len(r) == 3]
    # brute-force count: (common index c, 4-subset of the rest) pairs
    brute = sum(1 for c in range(1, 7)
                for _ in itertools.combinations([x for x in range(1, 7) if x != c], 4))
    assert len(three) == 30 and brute == 30
    assert all(len(r) in (3, 4) for r in rels)


def test_relations_vanish_on_random_matrices():
    rng = random.Random(11)
    rels = plucker_relations()
    for _ in range(100):
        _, p = random_rank3_matrix(rng, -5, 5)
        for rel in rels:
            total = RatFn(0, 1)
            for (i, j), c in rel.items():
                total = total + p.coords[i] * p.coords[j] * c
            assert total.is_zero()


def test_relations_stable_under_s6():
    rels = plucker_relations()

    def key(rel):
        items = tuple(sorted(rel.items()))
        if items[0][1] < 0:
            items = tuple((m, -c) for m, c in items)
        return items

    keys = {key(r) for r in rels}
    for sigma in all_permutations():
        for rel in rels:
            moved = {}
            for (i, j), c in rel.items():
                e = [0] * 20
                e[i] += 1
                e[j] += 1
                e2, s = sigma.act_monomial(tuple(e))
                pair = tuple(sorted(k for k, v in enumerate(e2) for _ in range(v)))
                moved[pair] = moved.get(pair, 0) + c * s
            assert key(moved) in keys


def test_action_antisymmetry():
    sigma = transposition(1, 2)
    e = monomial_from_triples([(1, 2, 3)])
    e2, s = sigma.act_monomial(e)
    assert e2 == e and s == -1


def test_action_identity():
    ident = SignedPermutation((1, 2, 3, 4, 5, 6))
    w = tuple(range(20))
    assert act(ident, w) == w


def test_action_is_group_action():
    rng = random.Random(5)
    perms = all_permutations()
    for _ in range(50):
        s, t = rng.choice(perms), rng.choice(perms)
        w = tuple(rng.randint(-10, 10) for _ in range(20))
        assert act(s, act(t, w)) == act(s.compose(t), w)


def test_action_compatible_with_column_permutation():
    rng = random.Random(21)
    for _ in range(10):
        m, p = random_rank3_matrix(rng)
        sigma = rng.choice(all_permutations())
        mp = [[m[r][sigma(c + 1) - 1] for c in range(6)] for r in range(3)]
        q = plucker_from_matrix(mp)
        # column permutation changes each coordinate by the triple sign of sigma^-1
        inv = sigma.inverse()
        moved = act(inv, p)
        assert all(q.coords[i] == moved.coords[i] or q.coords[i] == -moved.coords[i]
                   for i in range(20))
        for i in range(20):
            j, s = inv.triple_map[i]
            assert q.coords[j] == (p.coords[i] if s == 1 else -p.coords[i])


def test_row_operations_scale_coordinates():
    rng = random.Random(31)
    m, p = random_rank3_matrix(rng)
    m2 = [list(r) for r in m]
    m2[0] = [a + RatFn(3, 1) * b for a, b in zip(m2[0], m2[1])]  # shear: det unchanged
    m2[1] = [RatFn(5, 1) * x for x in m2[1]]                     # scale row: dets x5
    q = plucker_from_matrix(m2)
    for i in range(20):
        assert q.coords[i] == RatFn(5, 1) * p.coords[i]


G6_COEFF = PluckerBinomial([
    (monomial_from_triples([(1, 2, 4), (1, 3, 6), (1, 4, 5), (2, 3, 5)]), Fraction(1)),
    (monomial_from_triples([(1, 2, 3), (1, 3, 5), (1, 4, 6), (2, 4, 5)]), Fraction(-1)),
])


def test_equivalent_binomials_depth0():
    assert equivalent_binomials(G6_COEFF, 0) == [G6_COEFF]


def test_equivalent_binomials_evaluate_equally():
    rng = random.Random(41)
    equivs = equivalent_binomials(G6_COEFF, 2)
    assert len(equivs) > 1
    assert any(b not in (G6_COEFF,) and
               b.terms != tuple((e, -c) for e, c in G6_COEFF.terms)
               for b in equivs[1:])
    for _ in range(5):
        _, p = random_rank3_matrix(rng, -4, 4)
        ref = G6_COEFF.evaluate(p)
        for b in equivs:
            assert b.evaluate(p) == ref


def test_equivalent_binomials_membership_oracle():
    # b - b' must reduce to zero against monomial multiples of the relations
    equivs = equivalent_binomials(G6_COEFF, 2)
    rels = plucker_relations()
    # sparse row space of {monomial * relation} in the degree-4 graded piece
    pivots = {}

    def reduce(vec):
        vec = dict(vec)
        while vec:
            lead = min(vec)
            if lead not in pivots:
                return vec, lead
            c = vec[lead]
            row = pivots[lead]
            f = Fraction(c, row[lead])
            for k, v in row.items():
                nv = vec.get(k, Fraction(0)) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec, None

    def insert(vec):
        red, lead = reduce(vec)
        if lead is not None:
            pivots[lead] = red

    deg2 = list(itertools.combinations_with_replacement(range(20), 2))
    for rel in rels:
        for extra in deg2:
            row = {}
            for (i, j), c in rel.items():
                mono = tuple(sorted((i, j) + extra))
                row[mono] = row.get(mono, Fraction(0)) + c
            row = {k: v for k, v in row.items() if v}
            if row:
                insert(row)

    def monokey(exps):
        return tuple(sorted(i for i, e in enumerate(exps) for _ in range(e)))

    for b in equivs:
        diff = {}
        for (e, c), sign in zip(G6_COEFF.terms, (1, 1)):
            k = monokey(e)
            diff[k] = diff.get(k, Fraction(0)) + c
        for e, c in b.terms:
            k = monokey(e)
            diff[k] = diff.get(k, Fraction(0)) - c
        diff = {k: v for k, v in diff.items() if v}
        red, lead = reduce(diff)
        assert not red, "difference not in the Plucker ideal"
