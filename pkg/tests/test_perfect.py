import pytest

from gpstable import fixtures
from gpstable.algebra import InputError, parse_path_string
from gpstable.analysis import Analysis
from gpstable.oracle import bf_verify_perfect
from gpstable.perfect import (
    detect_overlap,
    enumerate_perfect_paths,
    is_perfect_pair,
    left_annihilators,
    min_rotation,
    primitive_root,
    right_annihilators,
    underlying_cycle_classes,
)


@pytest.fixture(scope="module")
def star():
    return fixtures.lambda_star()


def pp(alg, text):
    return parse_path_string(alg.quiver, text)


class TestAnnihilators:
    def test_loop_one(self):
        alg = fixtures.loop(1)
        x = pp(alg, "x")
        assert right_annihilators(alg, x) == (x,)
        assert left_annihilators(alg, x) == (x,)

    def test_loop_two(self):
        # With x^3 = 0 the minimal killer of x is x^2, not x.
        alg = fixtures.loop(2)
        x, xx = pp(alg, "x"), pp(alg, "x.x")
        assert right_annihilators(alg, x) == (xx,)
        assert right_annihilators(alg, xx) == (x,)

    def test_star_r_of_a12(self, star):
        assert right_annihilators(star, pp(star, "a1.a2")) == (
            pp(star, "a3.a1.a2.a3.a1.a2"),
        )

    def test_star_r_of_bridge_empty(self, star):
        assert right_annihilators(star, pp(star, "b2")) == ()

    def test_trivial_and_zero_rejected(self, star):
        with pytest.raises(InputError):
            right_annihilators(star, star.quiver.trivial("1"))
        with pytest.raises(InputError):
            left_annihilators(
                star, star.quiver.path(["a1", "a2", "a3"] * 2 + ["a1", "a2"])
            )


class TestPerfectPairs:
    def test_star_pair(self, star):
        assert is_perfect_pair(star, pp(star, "a1.a2"), pp(star, "a3.a1.a2.a3.a1.a2"))

    def test_loop3_pairs(self):
        alg = fixtures.loop(3)
        x = pp(alg, "x")
        x3 = pp(alg, "x.x.x")
        assert not is_perfect_pair(alg, x, x)
        assert is_perfect_pair(alg, x, x3)
        assert right_annihilators(alg, x) == (x3,)

    def test_star_nonpair_bridge(self, star):
        assert not is_perfect_pair(star, pp(star, "b2"), pp(star, "a4.a5"))

    def test_pair_agrees_with_bruteforce(self, star):
        pairs = [
            ("a1.a2", "a3.a1.a2.a3.a1.a2"),
            ("a3", "a1.a2.a3.a1.a2.a3"),
            ("a1.a2", "a3"),
            ("a4.a5.a4.a5", "a4.a5.a4.a5"),
        ]
        for a, b in pairs:
            p, q = pp(star, a), pp(star, b)
            assert is_perfect_pair(star, p, q) == bf_verify_perfect(star, p, q)


EXPECTED_SEQUENCES = [
    ("a1.a2", "a3.a1.a2.a3.a1.a2", "a3", "a1.a2.a3.a1.a2.a3"),
    ("a1.a2.a3.a1.a2", "a3.a1.a2", "a3.a1.a2.a3", "a1.a2.a3"),
    ("a4.a5", "a4.a5.a4.a5.a4.a5"),
    ("a4.a5.a4.a5",),
]


def rotations(seq):
    return {tuple(seq[k:] + seq[:k]) for k in range(len(seq))}


class TestEnumeration:
    def test_star_sequences(self, star):
        pset = enumerate_perfect_paths(star)
        assert len(pset.paths) == 11
        assert not pset.cm_free
        got = {tuple(map(str, seq)) for seq in pset.sequences}
        for expected in EXPECTED_SEQUENCES:
            assert rotations(list(expected)) & got
        assert len(got) == 4

    def test_a2_cm_free(self):
        pset = enumerate_perfect_paths(fixtures.a2())
        assert pset.cm_free and not pset.paths

    def test_nakayama_all_nontrivial_perfect(self):
        for n in (1, 2, 3):
            for m in (1, 2, 3):
                alg = fixtures.nakayama(n, m)
                pset = enumerate_perfect_paths(alg)
                assert set(pset.paths) == set(alg.nontrivial_basis)
                assert len(pset.paths) == n * m

    def test_sigma_injective(self, star):
        pset = enumerate_perfect_paths(star)
        values = list(pset.successor.values())
        assert len(set(values)) == len(values)
        for p, q in pset.successor.items():
            assert pset.predecessor[q] == p

    def test_pair_member_not_necessarily_perfect(self, star):
        # (a1, a2.a3.a1.a2.a3.a1.a2) is a perfect pair whose members sit on
        # no successor cycle, hence are not perfect paths.
        p = pp(star, "a1")
        q = pp(star, "a2.a3.a1.a2.a3.a1.a2")
        assert is_perfect_pair(star, p, q)
        pset = enumerate_perfect_paths(star)
        assert p not in pset.successor and q not in pset.successor

    def test_perfect_product_in_relations(self, star):
        pset = enumerate_perfect_paths(star)
        for p, q in pset.successor.items():
            assert (p * q) in set(star.relations)


class TestCycleClasses:
    def test_primitive_root(self, star):
        c4 = pp(star, "a4.a5.a4.a5")
        assert primitive_root(c4) == pp(star, "a4.a5")
        c = pp(star, "a1.a2.a3")
        assert primitive_root(c) == c

    def test_min_rotation(self, star):
        assert min_rotation(pp(star, "a3.a1.a2")) == pp(star, "a1.a2.a3")

    def test_star_classes(self, star):
        pset = enumerate_perfect_paths(star)
        classes = underlying_cycle_classes(star, pset)
        assert [str(c.cycle) for c in classes] == ["a4.a5", "a1.a2.a3"]
        by_cycle = {str(c.cycle): c for c in classes}
        assert len(by_cycle["a1.a2.a3"].members) == 8
        assert len(by_cycle["a4.a5"].members) == 3
        # both 3-cycle sequences land in the same class
        assert len(by_cycle["a1.a2.a3"].sequence_indices) == 2

    def test_loop_single_class(self):
        alg = fixtures.loop(3)
        pset = enumerate_perfect_paths(alg)
        classes = underlying_cycle_classes(alg, pset)
        assert len(classes) == 1
        assert classes[0].cycle.length == 1


class TestOverlaps:
    def test_star_o2(self, star):
        ov = detect_overlap(star, pp(star, "a1.a2.a3.a1.a2"), pp(star, "a3.a1.a2"))
        assert ov is not None and ov.kind == "O2"
        assert str(ov.left) == "a1.a2"
        assert str(ov.middle) == "a3.a1.a2"
        assert ov.right.is_trivial
        assert not star.is_zero(ov.witness_path)

    def test_loop3_o1(self):
        alg = fixtures.loop(3)
        xx = pp(alg, "x.x")
        ov = detect_overlap(alg, xx, xx)
        assert ov is not None and ov.kind == "O1"
        assert str(ov.left) == str(ov.middle) == str(ov.right) == "x"

    def test_quadratic_no_overlaps(self):
        alg = fixtures.quadratic()
        an = Analysis(alg)
        for p in an.perfect.paths:
            for q in an.perfect.paths:
                assert detect_overlap(alg, p, q) is None

    def test_overlap_implies_same_class(self, star):
        an = Analysis(star)
        for p in an.perfect.paths:
            for q in an.perfect.paths:
                if detect_overlap(star, p, q) is not None:
                    assert an.class_of[p] == an.class_of[q]

    def test_overlap_window_paths_perfect(self, star):
        an = Analysis(star)
        perfect = set(an.perfect.paths)
        for p in perfect:
            for q in perfect:
                if detect_overlap(star, p, q) is None:
                    continue
                for u in star.basis:
                    if (
                        p.left_divides(u)
                        and q.right_divides(u)
                        and u.length < p.length + q.length
                    ):
                        assert u in perfect
