from random import Random

import pytest

import seifert as sf
from support import normal_form_violations, random_move_word, random_valid


def P(text):
    return sf.parse_params(text)


class TestTwist:
    def test_moves_one_twist_onto_pair(self):
        moved = sf.twist(P("{0;(o1,0,(0,0));(|);((5,7))}"), 1, 1)
        assert moved == P("{1;(o1,0,(0,0));(|);((5,2))}")
        assert sf.equivalent(moved, P("{0;(o1,0,(0,0));(|);((5,7))}"))

    def test_zero_is_identity(self):
        params = P("{2;(n1,1,(0,0));(|);((3,1))}")
        assert sf.twist(params, 1, 0) == params

    def test_inverse_composition(self):
        params = P("{1;(o1,0,(0,0));(|);((2,1))}")
        assert sf.twist(params, 1, -1) == P("{0;(o1,0,(0,0));(|);((2,3))}")
        assert sf.twist(sf.twist(params, 1, -1), 1, 1) == params

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            sf.twist(P("{0;(o1,0,(0,0));(|);((5,7))}"), 2, 1)
        with pytest.raises(IndexError):
            sf.twist(P("{0;(o1,0,(0,0));(|);}"), 1, 1)


class TestReflectPair:
    def test_burton_shift(self):
        moved = sf.reflect_pair(P("{1;(n1,2,(0,0));(|);((5,2))}"), 1)
        assert moved == P("{2;(n1,2,(0,0));(|);((5,3))}")

    def test_twice_shifts_b_by_two(self):
        params = P("{0;(o2,1,(0,0));(|);((5,2),(7,3))}")
        again = sf.reflect_pair(sf.reflect_pair(params, 2), 2)
        assert again == P("{2;(o2,1,(0,0));(|);((5,2),(7,3))}")

    def test_two_one_pair_is_fixed(self):
        moved = sf.reflect_pair(P("{0;(o2,1,(0,0));(|);((2,1))}"), 1)
        assert moved == P("{1;(o2,1,(0,0));(|);((2,1))}")
        assert sf.equivalent(moved, P("{0;(o2,1,(0,0));(|);((2,1))}"))

    def test_rejected_without_fibre_reversing_curve(self):
        with pytest.raises(ValueError):
            sf.reflect_pair(P("{0;(o1,0,(0,0));(|);((5,2))}"), 1)
        with pytest.raises(ValueError):
            sf.reflect_pair(P("{0;(n2,1,(0,0));(|);((5,2))}"), 1)


class TestMirror:
    def test_closed_orientable_formula(self):
        mirrored = sf.mirror(P("{-1;(o1,0,(0,0));(|);((2,1),(3,1),(3,1))}"))
        assert mirrored == P("{-2;(o1,0,(0,0));(|);((2,1),(3,2),(3,2))}")

    def test_involution(self):
        for text in ("{-1;(o1,0,(0,0));(|);((2,1),(3,1),(3,1))}",
                     "{0;(n2,1,(1,0));(|);((4,1))}",
                     "{3;(o1,0,(0,0));(|);((1,2),(5,2))}"):
            params = P(text)
            assert sf.mirror(sf.mirror(params)) == params

    def test_empty_closed_orientable(self):
        assert sf.mirror(P("{0;(o1,0,(0,0));(|);}")) == P("{0;(o1,0,(0,0));(|);}")

    def test_nonorientable_branch_flips_q_only(self):
        mirrored = sf.mirror(P("{0;(n2,1,(1,0));(|);((4,1))}"))
        assert mirrored == P("{0;(n2,1,(1,0));(|);((4,3))}")
        assert sf.equivalent(mirrored, P("{0;(n2,1,(1,0));(|);((4,1))}"))

    def test_rejected_for_other_epsilon(self):
        with pytest.raises(ValueError):
            sf.mirror(P("{0;(n1,1,(0,0));(|);}"))


class TestUnitPairs:
    def test_absorb(self):
        params = P("{3;(o1,0,(0,0));(|);((1,5),(2,1),(1,-2))}")
        assert sf.absorb_unit_pairs(params) == P("{6;(o1,0,(0,0));(|);((2,1))}")

    def test_insert_then_absorb_is_identity(self):
        params = P("{3;(n3,2,(0,0));(|);((5,2))}")
        assert sf.absorb_unit_pairs(sf.insert_unit_pair(params, 4)) == params


class TestNormalize:
    def test_twist_reduction(self):
        assert sf.normalize(P("{0;(o1,0,(0,0));(|);((5,7))}")) == \
            P("{1;(o1,0,(0,0));(|);((5,2))}")

    def test_idempotent_on_examples(self):
        for text in ("{1;(o1,0,(0,0));(|);((5,2))}",
                     "{0;(o,4,(1,1));(1|0);((3,1),(5,2))}",
                     "{1;(n1,1,(0,0));(|);}"):
            once = sf.normalize(P(text))
            assert sf.normalize(once) == once

    def test_mirror_applied_when_b_too_negative(self):
        assert sf.normalize(P("{-3;(o1,0,(0,0));(|);((2,1),(3,1))}")) == \
            P("{1;(o1,0,(0,0));(|);((2,1),(3,2))}")

    def test_b_mod_two(self):
        assert sf.normalize(P("{2;(n1,1,(0,0));(|);}")) == P("{0;(n1,1,(0,0));(|);}")
        assert sf.normalize(P("{5;(n3,2,(0,0));(|);((3,1))}")) == \
            P("{1;(n3,2,(0,0));(|);((3,1))}")

    def test_b_dies_against_a_two_pair(self):
        assert sf.normalize(P("{1;(o2,1,(0,0));(|);((2,1))}")) == \
            P("{0;(o2,1,(0,0));(|);((2,1))}")

    def test_b_absorbed_with_boundary(self):
        assert sf.normalize(P("{4;(o1,0,(0,0));(0|);((5,3))}")) == \
            P("{0;(o1,0,(0,0));(0|);((5,2))}")

    def test_sorts_boundary_lists_and_pairs(self):
        raw = sf.SeifertParams(0, sf.Epsilon.O, 1, 1, 1, (2, 0), (1,),
                               ((5, 2), (2, 1)))
        normalized = sf.normalize(raw)
        assert normalized.hplus == (0, 2)
        assert normalized.kminus == (1,)
        assert normalized.pairs == ((2, 1), (5, 2))

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            sf.normalize(sf.SeifertParams(0, sf.Epsilon.N4, 1, 0, 0))

    def test_leading_pair_rule_bordered(self):
        assert sf.normalize(P("{0;(o1,0,(0,0));(0|);((5,3))}")) == \
            P("{0;(o1,0,(0,0));(0|);((5,2))}")

    def test_mirror_tie_at_minimal_b(self):
        # b = -r/2 leaves the choice to the pair list; both mirror images
        # must reduce to the same representative
        a = P("{-1;(o1,0,(0,0));(|);((5,1),(5,3))}")
        b = sf.mirror(a)
        assert sf.normalize(a) == sf.normalize(b)

    def test_soundness_and_move_invariance_sample(self):
        rng = Random(99)
        for _ in range(300):
            seed = sf.normalize(random_valid(rng))
            assert normal_form_violations(seed) == []
            moved = random_move_word(rng, seed, rng.randrange(1, 12))
            assert sf.normalize(moved) == seed


class TestEquivalent:
    def test_distinct_fibrations_of_one_manifold_differ(self):
        assert not sf.equivalent(P("{0;(n1,1,(0,0));(0|);}"),
                                 P("{0;(o1,0,(1,0));(0|);}"))

    def test_twist_invariance(self):
        params = P("{0;(o1,1,(0,0));(|);((7,3))}")
        assert sf.equivalent(params, sf.twist(params, 1, 5))

    def test_burton_identity_example(self):
        assert sf.equivalent(P("{1;(n1,2,(0,0));(|);((3,1))}"),
                             P("{0;(n1,2,(0,0));(|);((3,2))}"))

    def test_equivalence_relation_on_samples(self):
        rng = Random(5)
        params = [random_valid(rng) for _ in range(40)]
        for x in params:
            assert sf.equivalent(x, x)
        for x in params[:12]:
            for y in params[:12]:
                assert sf.equivalent(x, y) == sf.equivalent(y, x)
                if sf.equivalent(x, y):
                    for z in params[:12]:
                        if sf.equivalent(y, z):
                            assert sf.equivalent(x, z)


class TestReverseOrientation:
    def test_lens_space_is_fixed(self):
        assert sf.reverse_orientation(P("{3;(o1,0,(0,0));(|);}")) == \
            P("{3;(o1,0,(0,0));(|);}")

    def test_involution_on_normal_forms(self):
        rng = Random(31)
        seen = 0
        while seen < 100:
            params = random_valid(rng)
            if params.epsilon not in sf.ORIENTABLE_AWAY_FROM_SE:
                continue
            seen += 1
            once = sf.reverse_orientation(params)
            assert sf.reverse_orientation(once) == once

    def test_bordered_keeps_leading_pair_representative(self):
        assert sf.reverse_orientation(P("{0;(o1,0,(0,0));(0|);((5,2))}")) == \
            P("{0;(o1,0,(0,0));(0|);((5,2))}")

    def test_rejects_other_epsilon(self):
        with pytest.raises(ValueError):
            sf.reverse_orientation(P("{0;(n1,1,(0,0));(|);}"))


class TestSolidTorus:
    def test_examples(self):
        T = sf.FibredSolidTorusType
        assert sf.solid_torus_equivalent(T(5, 2), T(5, 3))
        assert not sf.solid_torus_equivalent(T(5, 2), T(5, 1))
        assert sf.solid_torus_equivalent(T(1, 0), T(1, 7))
        assert not sf.solid_torus_equivalent(T(5, 2), T(7, 2))

    def test_matches_brute_force_residues(self):
        from math import gcd
        for p in range(1, 31):
            residues = [r for r in range(p + 1) if gcd(p, r) == 1]
            for r1 in residues:
                for r2 in residues:
                    expected = (r1 % p == r2 % p) or ((r1 + r2) % p == 0)
                    if p == 1:
                        expected = True
                    got = sf.solid_torus_equivalent(
                        sf.FibredSolidTorusType(p, r1),
                        sf.FibredSolidTorusType(p, r2))
                    assert got == expected, (p, r1, r2)


class TestFromBurton:
    def test_conversion_rule(self):
        assert sf.from_burton(P("{0;(n3,2,(0,0));(|);((3,2))}")) == \
            P("{1;(n3,2,(0,0));(|);((3,1))}")

    def test_already_normalized_row(self):
        row = P("{1;(n1,1,(0,0));(|);}")
        assert sf.from_burton(row) == row

    def test_two_pair_then_b_collapses(self):
        assert sf.from_burton(P("{0;(o2,1,(0,0));(|);((2,1),(5,4))}")) == \
            P("{0;(o2,1,(0,0));(|);((2,1),(5,1))}")
