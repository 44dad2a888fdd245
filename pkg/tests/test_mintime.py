import numpy as np
import pytest

from spinpair.errors import NonPositiveCoupling, PositiveDiscriminant
from spinpair.gates import CNOT, IDENTITY4, SQRT_SWAP, SWAP, controlled_u
from spinpair.invariants import ABCTriple, abc_from_coords
from spinpair.kak import interaction_unitary
from spinpair.mintime import (
    CubicCoefficients,
    canonical_coords,
    coords_from_abc,
    cubic_coefficients,
    depress,
    min_time,
    solve_depressed,
)

from conftest import haar_unitary, random_local


class TestCubicCoefficients:
    @pytest.mark.parametrize(
        "abc,want",
        [
            ((0, 0, 1), (-1, 0, 0)),  # CNOT
            ((-1, 0, -3), (-3, 3, -1)),  # SWAP; cubic factors as (x-1)^3
            ((1, 0, 3), (0, 0, 0)),  # identity
        ],
    )
    def test_golden(self, abc, want):
        got = cubic_coefficients(ABCTriple(*abc))
        assert (got.p, got.q, got.r) == pytest.approx(want, abs=1e-14)


class TestDepress:
    def test_cnot(self):
        dc = depress(CubicCoefficients(-1, 0, 0))
        assert dc.p == pytest.approx(-1 / 3, abs=1e-15)
        assert dc.q == pytest.approx(-2 / 27, abs=1e-15)
        assert abs(dc.discriminant) < 1e-15

    def test_swap(self):
        dc = depress(CubicCoefficients(-3, 3, -1))
        assert dc.p == pytest.approx(0, abs=1e-14)
        assert dc.q == pytest.approx(0, abs=1e-14)

    @pytest.mark.parametrize("gamma", [np.pi / 2, np.pi / 3])
    def test_controlled_u_form(self, gamma):
        # P = -sin^4(g)/3, Q = -2 sin^6(g)/27
        abc = ABCTriple(np.cos(gamma) ** 2, 0.0, 2 * np.cos(gamma) ** 2 + 1)
        dc = depress(cubic_coefficients(abc))
        assert dc.p == pytest.approx(-np.sin(gamma) ** 4 / 3, abs=1e-14)
        assert dc.q == pytest.approx(-2 * np.sin(gamma) ** 6 / 27, abs=1e-14)
        assert abs(dc.discriminant) < 1e-15

    def test_rejects_positive_discriminant(self):
        # a = 1, c = -3 is not realizable by any unitary: disc = 1/4
        with pytest.raises(PositiveDiscriminant):
            depress(CubicCoefficients(-3, 3, 0))

    def test_theta_set_on_generic_branch(self):
        abc = abc_from_coords(1.2, 0.7, 0.3)
        dc = depress(cubic_coefficients(abc))
        assert dc.discriminant < -1e-12
        assert dc.t is not None and -1 < dc.t < 1
        assert dc.theta == pytest.approx(np.arccos(dc.t))


class TestSolveDepressed:
    def test_cnot_roots(self):
        dc = depress(CubicCoefficients(-1, 0, 0))
        roots = solve_depressed(dc)
        big = sorted((x - dc.shift for x in roots.as_tuple()), reverse=True)
        assert big == pytest.approx([2 / 3, -1 / 3, -1 / 3], abs=1e-12)

    def test_swap_roots(self):
        dc = depress(CubicCoefficients(-3, 3, -1))
        roots = solve_depressed(dc)
        big = [x - dc.shift for x in roots.as_tuple()]
        assert big == pytest.approx([0, 0, 0], abs=1e-12)
        assert roots.as_tuple() == pytest.approx([1, 1, 1], abs=1e-12)

    def test_recovers_sampled_sines(self, rng):
        for _ in range(200):
            c = np.sort(rng.uniform(0, np.pi / 2, size=3))[::-1]
            roots = solve_depressed(depress(cubic_coefficients(abc_from_coords(*c))))
            want = np.sort(np.sin(c) ** 2)[::-1]
            assert np.abs(np.array(roots.as_tuple()) - want).max() < 1e-8

    def test_symmetric_functions(self, rng):
        for _ in range(100):
            c = rng.uniform(0, np.pi / 2, size=3)
            abc = abc_from_coords(*c)
            x1, x2, x3 = solve_depressed(
                depress(cubic_coefficients(abc))
            ).as_tuple()
            s = abc.radius
            assert x1 + x2 + x3 == pytest.approx(1 + (1 - abc.c) / 2, abs=1e-8)
            assert x1 * x2 + x1 * x3 + x2 * x3 == pytest.approx(
                s + (1 - abc.c) / 2, abs=1e-8
            )
            assert x1 * x2 * x3 == pytest.approx((s - abc.a) / 2, abs=1e-8)


class TestCanonicalCoords:
    @pytest.mark.parametrize(
        "gate,want",
        [
            (CNOT, (np.pi / 2, 0, 0)),
            (SWAP, (np.pi / 2, np.pi / 2, np.pi / 2)),
            (SQRT_SWAP, (np.pi / 4, np.pi / 4, np.pi / 4)),
            (IDENTITY4, (0, 0, 0)),
        ],
        ids=["cnot", "swap", "sqrtswap", "identity"],
    )
    def test_golden(self, gate, want):
        coords = canonical_coords(gate)
        assert coords.as_tuple() == pytest.approx(want, abs=1e-12)

    def test_ordering_and_range(self, rng):
        for _ in range(100):
            c = canonical_coords(haar_unitary(rng))
            assert np.pi / 2 + 1e-12 >= c.c1 >= c.c2 >= c.c3 >= 0

    def test_round_trip_through_invariants(self, rng):
        from spinpair.invariants import abc_from_invariants, local_invariants

        for _ in range(50):
            u = haar_unitary(rng)
            coords = canonical_coords(u)
            via_coords = abc_from_coords(*coords.as_tuple())
            via_matrix = abc_from_invariants(local_invariants(u))
            # b may differ in sign for mirror-class gates; a, c and |b| agree
            assert via_coords.a == pytest.approx(via_matrix.a, abs=1e-7)
            assert abs(via_coords.b) == pytest.approx(abs(via_matrix.b), abs=1e-7)
            assert via_coords.c == pytest.approx(via_matrix.c, abs=1e-7)


class TestMinTime:
    @pytest.mark.parametrize("j", [1.0, 2.5])
    @pytest.mark.parametrize(
        "gate,factor",
        [(CNOT, 0.5), (SWAP, 1.5), (SQRT_SWAP, 0.75)],
        ids=["cnot", "swap", "sqrtswap"],
    )
    def test_golden(self, gate, factor, j):
        report = min_time(gate, j)
        assert report.t_star == pytest.approx(factor / j, rel=1e-10)

    @pytest.mark.parametrize("gamma", [np.pi / 6, np.pi / 4, np.pi / 3])
    @pytest.mark.parametrize("j", [1.0, 2.5])
    def test_controlled_u(self, gamma, j):
        report = min_time(controlled_u(gamma, 0, 0), j)
        want = np.arcsin(abs(np.sin(gamma))) / (np.pi * j)
        assert report.t_star == pytest.approx(want, rel=1e-10)

    def test_report_consistency(self):
        report = min_time(SWAP, 2.0)
        assert report.t_star == report.coords.total / (np.pi * 2.0)
        assert report.coupling_j == 2.0

    def test_rejects_bad_coupling(self):
        with pytest.raises(NonPositiveCoupling):
            min_time(CNOT, 0.0)

    def test_monotone_bound(self, rng):
        for _ in range(200):
            t = min_time(haar_unitary(rng), 1.0).t_star
            assert 0 <= t <= 1.5 + 1e-9

    def test_dressing_invariance(self, rng):
        for _ in range(20):
            c = np.sort(rng.uniform(0, np.pi / 2, size=3))[::-1]
            u = random_local(rng) @ interaction_unitary(*c) @ random_local(rng)
            report = min_time(u, 1.0)
            assert report.t_star == pytest.approx(np.sum(c) / np.pi, abs=1e-8)


class TestEdgeInputs:
    def test_coords_from_abc_accepts_boundary(self):
        coords = coords_from_abc(ABCTriple(1.0, 0.0, 3.0))
        assert coords.as_tuple() == pytest.approx((0, 0, 0), abs=1e-12)

    def test_discriminant_never_positive(self, rng):
        from spinpair.invariants import abc_from_invariants, local_invariants

        for _ in range(300):
            abc = abc_from_invariants(local_invariants(haar_unitary(rng)))
            dc = depress(cubic_coefficients(abc))
            assert dc.discriminant <= 1e-9
