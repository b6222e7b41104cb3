from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from bielliptic.errors import NotHyperbolicError, PreconditionError
from bielliptic.lattice import MukaiVector, l_invariant, mukai_pairing, square
from bielliptic.surfaces import surface_invariants
from bielliptic.walls import (
    FAKE_WALL,
    FLOPPING,
    HILBERT_CHOW,
    INDETERMINATE,
    NO_WALL,
    P1_FIBRATION,
    approximate_isotropic_full_l,
    classify_wall,
    enumerate_decompositions,
    hn_codim_bound,
    isotropic_rays,
    saturate_lattice,
)

from conftest import mukai_vectors, surface_types


def H_of(t, v, w):
    return saturate_lattice(t, MukaiVector.of(*v), MukaiVector.of(*w))


raw_instances = st.tuples(
    surface_types,
    st.tuples(st.integers(1, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
    st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
)


def build_instance(raw):
    """(t, H) from a raw tuple, or None when the pair is not a wall lattice."""
    t, vt, wt = raw
    v, w = MukaiVector.of(*vt), MukaiVector.of(*wt)
    if square(v) <= 0:
        return None
    try:
        return t, saturate_lattice(t, v, w)
    except (PreconditionError, NotHyperbolicError):
        return None


class TestSaturation:
    def test_already_saturated(self):
        H = H_of(1, (1, 0, 0, -2), (0, 0, 0, 1))
        assert {e.as_tuple() for e in H.basis} == {(1, 0, 0, 0), (0, 0, 0, 1)}
        assert H.gram in (((0, -1), (-1, 0)), ((0, -1), (-1, 0)))
        assert H.det() == -1

    def test_index_two_sublattice(self):
        H = H_of(1, (2, 0, 0, -2), (2, 0, 0, 0))
        assert H.coords(MukaiVector.of(1, 0, 0, -1)) is not None
        assert H.coords(MukaiVector.of(1, 0, 0, 0)) is not None

    def test_collinear_rejected(self):
        v = MukaiVector.of(1, 0, 0, -1)
        with pytest.raises(PreconditionError):
            saturate_lattice(1, v, 2 * v)

    def test_nonpositive_square_rejected(self):
        with pytest.raises(PreconditionError):
            saturate_lattice(1, MukaiVector.of(1, 0, 0, 0), MukaiVector.of(0, 0, 0, 1))

    def test_definite_plane_rejected(self):
        # span{(1,0,0,-1), (0,1,1,0)}: gram [[2,0],[0,2]] is positive definite
        with pytest.raises(NotHyperbolicError):
            saturate_lattice(1, MukaiVector.of(1, 0, 0, -1), MukaiVector.of(0, 1, 1, 0))

    @given(raw_instances)
    def test_gram_always_hyperbolic(self, raw):
        inst = build_instance(raw)
        assume(inst is not None)
        _, H = inst
        assert H.det() < 0


class TestIsotropicRays:
    def test_standard_pair(self):
        rays = isotropic_rays(H_of(1, (1, 0, 0, -2), (0, 0, 0, 1)))
        assert {u.as_tuple() for u in rays} == {(1, 0, 0, 0), (0, 0, 0, -1)}

    def test_irrational_directions(self):
        # gram determinant -20; -det is not a square, so no rational rays
        H = H_of(1, (2, 1, 2, 0), (0, 1, -2, 1))
        assert H.det() == -20
        assert isotropic_rays(H) == []

    @given(raw_instances)
    def test_ray_normalization(self, raw):
        inst = build_instance(raw)
        assume(inst is not None)
        t, H = inst
        rays = isotropic_rays(H)
        assert len(rays) in (0, 2)
        for u in rays:
            assert square(u) == 0
            assert u.is_primitive()
            assert mukai_pairing(H.v, u) > 0

    @given(raw_instances)
    def test_positive_classes_lie_in_the_ray_cone(self, raw):
        inst = build_instance(raw)
        assume(inst is not None)
        t, H = inst
        rays = isotropic_rays(H)
        if len(rays) != 2:
            return
        c1 = H.coords(rays[0])
        c2 = H.coords(rays[1])
        det = c1[0] * c2[1] - c1[1] * c2[0]
        for parts in enumerate_decompositions(H, 2)[:6]:
            for p in parts:
                px, py = H.coords(p)
                s = Fraction(px * c2[1] - py * c2[0], det)
                u = Fraction(c1[0] * py - c1[1] * px, det)
                assert s >= 0 and u >= 0


class TestDecompositions:
    def test_named_pairs_present(self):
        H = H_of(1, (1, 0, 0, -2), (0, 0, 0, 1))
        dset = {tuple(p.as_tuple() for p in d) for d in enumerate_decompositions(H, 2)}
        assert tuple(sorted([(1, 0, 0, 0), (0, 0, 0, -2)])) in dset
        assert tuple(sorted([(1, 0, 0, -1), (0, 0, 0, -1)])) in dset

    def test_empty_for_nonisotropic_instance(self):
        assert enumerate_decompositions(H_of(1, (2, 1, 2, 0), (0, 1, -2, 1)), 4) == []

    @given(raw_instances)
    @settings(max_examples=40, deadline=None)
    def test_parts_sum_and_positivity(self, raw):
        inst = build_instance(raw)
        assume(inst is not None)
        t, H = inst
        for parts in enumerate_decompositions(H, 3)[:10]:
            total = parts[0]
            for p in parts[1:]:
                total = total + p
            assert total == H.v
            for p in parts:
                assert square(p) >= 0
                assert mukai_pairing(H.v, p) > 0


class TestCodimBound:
    def test_fake_wall_instance(self):
        assert hn_codim_bound(1, [MukaiVector.of(1, 0, 0, 0), MukaiVector.of(0, 0, 0, -1)]) == 0

    def test_hilbert_chow_instance(self):
        assert hn_codim_bound(1, [MukaiVector.of(1, 0, 0, 0), MukaiVector.of(0, 0, 0, -3)]) == 0

    def test_positive_pair(self):
        assert hn_codim_bound(1, [MukaiVector.of(1, 0, 0, -1), MukaiVector.of(1, 0, 0, -2)]) == 3

    def test_rejects_negative_square(self):
        with pytest.raises(PreconditionError):
            hn_codim_bound(1, [MukaiVector.of(1, 1, -1, 1)])

    @given(mukai_vectors(rmin=-8, rmax=8), mukai_vectors(rmin=-8, rmax=8))
    def test_all_positive_pairs_exceed_two(self, p1, p2):
        if square(p1) <= 0 or square(p2) <= 0:
            return
        det = square(p1) * square(p2) - mukai_pairing(p1, p2) ** 2
        if det >= 0:
            # proportional or a definite plane; not a wall-lattice pair
            return
        if mukai_pairing(p1, p2) < 0:
            return
        assert hn_codim_bound(1, [p1, p2]) > 2


class TestClassification:
    def test_fake_wall(self):
        c = classify_wall(H_of(1, (1, 0, 0, -1), (0, 0, 0, 1)))
        assert c.totally_semistable
        assert c.tss_witness == MukaiVector.of(0, 0, 0, -1)
        assert c.labels == frozenset({FAKE_WALL})
        assert c.codim_bound == 0

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_hilbert_chow(self, n):
        c = classify_wall(H_of(1, (1, 0, 0, -n), (0, 0, 0, 1)))
        assert c.totally_semistable
        assert c.labels == frozenset({HILBERT_CHOW})
        assert c.codim_bound == 0

    def test_p1_fibration(self):
        c = classify_wall(H_of(1, (2, 0, 1, -1), (0, 0, 0, 1)))
        assert c.labels == frozenset({P1_FIBRATION})
        assert c.totally_semistable

    def test_no_wall(self):
        c = classify_wall(H_of(1, (2, 1, 2, 0), (0, 1, -2, 1)))
        assert c.labels == frozenset({NO_WALL})
        assert c.codim_bound is None

    def test_flopping(self):
        c = classify_wall(H_of(1, (3, 2, -2, -2), (1, 0, 0, 0)))
        assert c.labels == frozenset({FLOPPING})
        assert c.codim_bound == 1

    def test_non_primitive_refinement(self):
        # 2*(3, 2A0-2B0, -2): no divisorial clause fires, and the flopping /
        # fake / no-wall refinement is withheld for non-primitive classes
        c = classify_wall(H_of(1, (6, 4, -4, -4), (1, 0, 0, 0)))
        assert c.labels == frozenset({INDETERMINATE})
        # a non-primitive class can still satisfy a divisorial clause
        c2 = classify_wall(H_of(1, (2, 0, 0, -2), (0, 0, 0, 1)))
        assert "LGUDivisorial" in c2.labels

    def test_rejects_nonpositive_square(self):
        H = H_of(1, (1, 0, 0, -1), (0, 0, 0, 1))
        bad = type(H)(surface=H.surface, v=MukaiVector.of(1, 0, 0, 0), basis=H.basis, gram=H.gram)
        with pytest.raises(PreconditionError):
            classify_wall(bad)

    def test_tss_implies_codim_zero(self):
        for vw in [((1, 0, 0, -1), (0, 0, 0, 1)), ((1, 0, 0, -4), (0, 0, 0, 1)),
                   ((2, 0, 1, -1), (0, 0, 0, 1))]:
            c = classify_wall(H_of(1, *vw))
            assert c.totally_semistable
            assert c.codim_bound == 0

    def test_generator_change_invariance(self):
        base = H_of(1, (2, 0, 1, -1), (0, 0, 0, 1))
        c0 = classify_wall(base)
        v = MukaiVector.of(2, 0, 1, -1)
        for x, y in [(1, 1), (-2, 1), (3, -1), (0, -1)]:
            w2 = x * v + y * MukaiVector.of(0, 0, 0, 1)
            c1 = classify_wall(saturate_lattice(1, v, w2))
            assert c1 == c0

    def test_ord2_exceptional_divisorial(self):
        # square 6, a ray with pairing 3 and full divisibility, v - u divisible by 3
        c = classify_wall(H_of(1, (3, 0, 0, -1), (0, 0, 0, 1)))
        assert "Ord2ExceptionalDivisorial" in c.labels
        assert c.codim_bound is not None and c.codim_bound <= 1

    def test_ord3_exceptional_divisorial(self):
        c = classify_wall(H_of(5, (3, 0, 1, -1), (0, 0, 0, 1)))
        assert "Ord3ExceptionalDivisorial" in c.labels
        assert c.codim_bound is not None and c.codim_bound <= 1

    def test_lgu_divisorial_square_four_composite_order(self):
        c = classify_wall(H_of(3, (2, 0, 0, -1), (0, 0, 0, 1)))
        assert "LGUDivisorial" in c.labels
        assert c.codim_bound == 1

    def test_lgu_ord2_requires_unit_divisibility(self):
        # square 4, pairing-2 full-divisibility ray, l(v) = 1 on an order-2 surface
        c = classify_wall(H_of(2, (2, 1, 2, 0), (0, 0, 0, 1)))
        assert "LGUOrd2Divisorial" in c.labels


class TestIsotropicApproximation:
    def test_rank_one_seed(self):
        v0, gap = approximate_isotropic_full_l(1, MukaiVector.of(1, 0, 0, 0), 1)
        assert square(v0) == 0
        assert v0.is_primitive()
        assert l_invariant(1, v0) == 2
        assert gap > 0

    def test_rejects_bad_seed(self):
        with pytest.raises(PreconditionError):
            approximate_isotropic_full_l(1, MukaiVector.of(1, 0, 0, -1), 1)
        with pytest.raises(PreconditionError):
            approximate_isotropic_full_l(1, MukaiVector.of(0, 1, 0, 0), 1)
        with pytest.raises(PreconditionError):
            approximate_isotropic_full_l(1, MukaiVector.of(2, 0, 2, 0), 1)

    @pytest.mark.parametrize(
        "t,seed",
        [
            (1, (1, 0, 0, 0)),
            (2, (2, 1, 0, 0)),
            (3, (2, 0, 1, 0)),
            (5, (3, 0, 1, 0)),
            (6, (3, 1, 0, 0)),
            (7, (5, 0, 2, 0)),
        ],
    )
    def test_monotone_sweep(self, t, seed):
        ordk = surface_invariants(t).ord_k
        prev = None
        for n in range(1, 13):
            v0, gap = approximate_isotropic_full_l(t, MukaiVector.of(*seed), n)
            assert square(v0) == 0
            assert v0.is_primitive()
            assert l_invariant(t, v0) == ordk
            if prev is not None:
                assert gap <= prev
            prev = gap
