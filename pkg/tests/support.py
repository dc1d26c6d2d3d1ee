"""Shared generators and independent oracles for the test suite."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd
from random import Random

import seifert as sf

EPSILONS = list(sf.Epsilon)


def cf_coefficients(p: int, q: int) -> list[int]:
    """Continued fraction of p/q by floor-and-reciprocal on exact
    rationals; independent of the library's Euclidean loop."""
    x = Fraction(p, q)
    coeffs = []
    while True:
        a = x.numerator // x.denominator
        coeffs.append(a)
        rest = x - a
        if rest == 0:
            return coeffs
        x = 1 / rest


def random_pair(rng: Random, p_max: int = 12) -> tuple[int, int]:
    p = rng.randrange(1, p_max + 1)
    q0 = rng.choice([q for q in range(1, p + 1) if gcd(p, q) == 1])
    return (p, q0 + p * rng.randrange(-3, 4))


def random_valid(rng: Random) -> sf.SeifertParams:
    """A random valid raw parameter set (unreduced b and q ranges)."""
    eps = rng.choice(EPSILONS)
    g = eps.min_genus + rng.randrange(4)
    if eps in (sf.Epsilon.O, sf.Epsilon.N):
        k = rng.randrange(3)
        m_minus = rng.choice(
            [v for v in range(4) if (v + k) % 2 == 0 and v + k > 0])
        t = k + rng.randrange(3)
    else:
        k, m_minus = 0, 0
        t = rng.randrange(3)
    hplus = tuple(rng.randrange(3) for _ in range(rng.randrange(3)))
    kminus = tuple(rng.randrange(3) for _ in range(m_minus))
    pairs = tuple(random_pair(rng) for _ in range(rng.randrange(4)))
    b = rng.randrange(-5, 6)
    params = sf.SeifertParams(b, eps, g, t, k, hplus, kminus, pairs)
    assert not sf.validate(params)
    return params


def random_move_word(rng: Random, params: sf.SeifertParams,
                     length: int) -> sf.SeifertParams:
    """Apply a random word of equivalence moves."""
    cur = params
    for _ in range(length):
        options = ["insert"]
        if cur.pairs:
            options.append("twist")
        if cur.epsilon in sf.ORIENTABLE_AWAY_FROM_SE:
            options.append("mirror")
        elif cur.pairs:
            options.append("reflect")
        if any(p == 1 for p, _ in cur.pairs):
            options.append("absorb")
        op = rng.choice(options)
        if op == "insert":
            cur = sf.insert_unit_pair(cur, rng.randrange(-3, 4))
        elif op == "twist":
            cur = sf.twist(cur, rng.randrange(1, cur.r + 1),
                           rng.randrange(-5, 6))
        elif op == "mirror":
            cur = sf.mirror(cur)
        elif op == "reflect":
            cur = sf.reflect_pair(cur, rng.randrange(1, cur.r + 1))
        else:
            cur = sf.absorb_unit_pairs(cur)
    return cur


def normal_form_violations(P: sf.SeifertParams) -> list[str]:
    """Check every canonical-form invariant directly (not through the
    normalizer): admissibility, sorting, pair ranges, b ranges and the
    leading-pair conditions."""
    v = list(sf.validate(P))
    if list(P.hplus) != sorted(P.hplus):
        v.append("hplus not sorted")
    if list(P.kminus) != sorted(P.kminus):
        v.append("kminus not sorted")
    if list(P.pairs) != sorted(P.pairs):
        v.append("pairs not sorted")
    mirror_only = P.epsilon in sf.ORIENTABLE_AWAY_FROM_SE
    for p, q in P.pairs:
        if p < 2:
            v.append(f"pair ({p},{q}): p < 2")
        elif mirror_only:
            if not 0 < q < p:
                v.append(f"pair ({p},{q}): q outside (0,p)")
        elif not 0 < 2 * q <= p:
            v.append(f"pair ({p},{q}): q outside (0,p/2]")
    if P.t + P.m_plus + P.m_minus > 0:
        if P.b != 0:
            v.append("b != 0 with boundary or reflector data")
    elif not mirror_only:
        if P.b not in (0, 1):
            v.append("b outside {0,1}")
        elif P.b == 1 and any(p == 2 for p, _ in P.pairs):
            v.append("b = 1 with a p = 2 pair")
    if mirror_only:
        lead = next((pq for pq in P.pairs if pq[0] > 2), None)
        if sf.is_closed(P) and sf.is_orientable(P):
            if 2 * P.b < -P.r:
                v.append("b < -r/2")
            elif (2 * P.b == -P.r and lead is not None
                    and 2 * lead[1] > lead[0]):
                v.append("q_l > p_l/2 at b = -r/2")
        elif lead is not None and 2 * lead[1] > lead[0]:
            v.append("q_l > p_l/2")
    return v


def census_brute_force(c_max: int) -> dict:
    """Raw-grid sweep: enumerate generous raw parameter grids, normalize,
    deduplicate, and keep the closed non-orientable forms whose bound
    fits.  Only feasible for small budgets."""
    p_cap = 2 ** (c_max + 2)
    pool = [(p, q) for p in range(2, p_cap + 1)
            for q in range(1, p) if gcd(p, q) == 1]
    # Each exceptional fibre costs at least 3 in every closed formula.
    r_max = max(1, c_max // 3)
    pair_sets = [ms for size in range(r_max + 1)
                 for ms in combinations_with_replacement(pool, size)]

    seen: dict = {}
    for eps in EPSILONS:
        for g in range(0, c_max + 3):
            # t up to c_max + 1: the reflector-circle fibration over the
            # disk has bound 0 with t = 1 regardless of c_max.
            for t in range(0, c_max + 2):
                for k in range(0, t + 1):
                    shape = sf.SeifertParams(0, eps, g, t, k)
                    if sf.validate(shape) or sf.is_orientable(shape):
                        continue
                    for b in range(-2, 3):
                        for pairs in pair_sets:
                            cand = sf.SeifertParams(b, eps, g, t, k,
                                                    (), (), pairs)
                            P = sf.normalize(cand)
                            if P in seen:
                                continue
                            seen[P] = sf.upper_bound(P)
    return {P: bd for P, bd in seen.items() if bd.value <= c_max}


PAPER_PARAM_STRINGS = [
    # worked example with every kind of exceptional set
    "{0;(o,4,(1,1));(1|0);((3,1),(5,2))}",
    # solid torus, with and without an exceptional fibre
    "{0;(o1,0,(0,0));(0|);((5,2))}",
    "{0;(o1,0,(0,0));(0|);}",
    # solid Klein bottle
    "{0;(o1,0,(0,0));(1|);}",
    # the two fibrations of N x S1
    "{0;(n1,1,(0,0));(0|);}",
    "{0;(o1,0,(1,0));(0|);}",
    # the two fibrations of N x~ S1
    "{0;(o1,0,(0,0));(1|);((2,1))}",
    "{0;(o,0,(1,1));(|0);}",
    # the two fibrations of K x I
    "{0;(o1,0,(0,0));(2|);}",
    "{0;(o,0,(0,0));(|0,0);}",
    # the two fibrations of K x~ I
    "{0;(n2,1,(0,0));(0|);}",
    "{0;(o1,0,(0,0));(0|);((2,1),(2,1))}",
    # T x I
    "{0;(o1,0,(0,0));(0,0|);}",
    # closed fibrations over the projective plane
    "{0;(n1,1,(0,0));(|);}",
    "{1;(n1,1,(0,0));(|);}",
]
