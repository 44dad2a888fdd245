"""Minimal implementation time of a two-qubit gate under a fixed ZZ coupling.

The squared sines sin^2(c_i) of the canonical coordinates are the roots of a
monic cubic whose coefficients are symmetric functions of the invariant triple
(a, b, c):

    x^3 + p x^2 + q x + r = 0,
    p = -(1 + (1 - c)/2),
    q = sqrt(a^2 + b^2) + (1 - c)/2,
    r = -(sqrt(a^2 + b^2) - a)/2.

Shifting X = x + p/3 gives the depressed form X^3 + P X + Q = 0 whose
discriminant P^3/27 + Q^2/4 is never positive for unitary-derived input, so
all roots are real: either the tangent (double-root) case or three distinct
roots obtained trigonometrically.  Each root is validated against the
polynomial itself, making the solver self-verifying regardless of which branch
produced it.  The minimal time is then

    t* = (c1 + c2 + c3) / (pi J),   c_i = arcsin(sqrt(x_i)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveCoupling, PositiveDiscriminant, ResidualTooLarge
from .invariants import ABCTriple, LocalInvariants, abc_from_invariants, local_invariants

DISCRIMINANT_TOL = 1e-9  # above this the input cannot come from a unitary
# The tangent (double-root) case is detected relative to the discriminant's
# natural scale max(|P|^3/27, Q^2/4): an absolute threshold would misroute
# cubics whose roots are merely clustered (small P and Q shrink the
# discriminant without any true double root).
DEGENERATE_REL_TOL = 1e-9
ROOT_RESIDUAL_TOL = 1e-8
ROOT_RANGE_SLACK = 1e-9  # roots may leave [0, 1] by at most this before clamping
ROOT_SNAP = 1e-15  # roots this close to 0 or 1 are exactly 0 or 1
_MAX_POLISH_STEP = 1e-3  # refinement must stay local to its own root


@dataclass(frozen=True)
class CubicCoefficients:
    """Monic cubic x^3 + p x^2 + q x + r with roots sin^2(c_i)."""

    p: float
    q: float
    r: float


@dataclass(frozen=True)
class DepressedCubic:
    """Shifted cubic X^3 + P X + Q = 0 with X = x - shift.

    ``t`` and ``theta`` (theta = arccos(t)) are populated exactly when the
    cubic was classified as having three distinct roots; ``t`` is None on the
    tangent (double-root) branch.
    """

    monic: CubicCoefficients
    p: float
    q: float
    discriminant: float
    shift: float
    t: float | None = None
    theta: float | None = None


@dataclass(frozen=True)
class CubicRoots:
    """Roots of the monic cubic, clamped to [0, 1] and sorted descending."""

    x1: float
    x2: float
    x3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class CanonicalCoordinates:
    """Canonical (Weyl-chamber) coordinate triple, sorted descending.

    The minimal-time pipeline always produces pi/2 >= c1 >= c2 >= c3 >= 0.
    The KAK module reuses this type and may carry c3 < 0: gates whose
    invariant b = Im G1 is negative have no decomposition with all three
    coordinates nonnegative, and the sign of c3 is exactly what distinguishes
    such a gate from its mirror image.
    """

    c1: float
    c2: float
    c3: float

    _TOL = 1e-9

    def __post_init__(self):
        ok = (
            np.pi / 2 + self._TOL >= self.c1 >= self.c2 >= abs(self.c3) - self._TOL
            and self.c3 >= -np.pi / 2 - self._TOL
        )
        if not ok:
            raise ValueError(f"coordinates outside the canonical region: {self}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    @property
    def total(self) -> float:
        return self.c1 + self.c2 + self.c3


@dataclass(frozen=True)
class MinTimeReport:
    coords: CanonicalCoordinates
    t_star: float
    coupling_j: float
    invariants: LocalInvariants
    abc: ABCTriple


def cubic_coefficients(abc: ABCTriple) -> CubicCoefficients:
    """Symmetric-function coefficients of the cubic in sin^2(c_i)."""
    half = (1 - abc.c) / 2
    s = abc.radius
    return CubicCoefficients(p=-(1 + half), q=s + half, r=-(s - abc.a) / 2)


def depress(coeffs: CubicCoefficients) -> DepressedCubic:
    """Shift the monic cubic into X^3 + P X + Q = 0 and classify it.

    Raises:
        PositiveDiscriminant: if P^3/27 + Q^2/4 > 1e-9, which cannot happen
            for coefficients derived from a unitary.
    """
    p, q, r = coeffs.p, coeffs.q, coeffs.r
    big_p = q - p * p / 3
    big_q = 2 * p**3 / 27 - p * q / 3 + r
    disc = big_p**3 / 27 + big_q**2 / 4
    if disc > DISCRIMINANT_TOL:
        raise PositiveDiscriminant(
            f"P^3/27 + Q^2/4 = {disc:.3e} > {DISCRIMINANT_TOL:.0e}: "
            "input is not in the unitary-derived class"
        )
    scale = max(abs(big_p) ** 3 / 27, big_q * big_q / 4)
    # big_p >= 0 only happens as roundoff around the triple-root corner
    # (P = Q = 0), which belongs to the tangent branch.
    degenerate = big_p >= 0 or abs(disc) <= DEGENERATE_REL_TOL * scale
    t = theta = None
    if not degenerate:
        t = float(27 * big_q / (2 * (-3 * big_p) ** 1.5))
        theta = float(np.arccos(np.clip(t, -1.0, 1.0)))
    return DepressedCubic(
        monic=coeffs,
        p=float(big_p),
        q=float(big_q),
        discriminant=float(disc),
        shift=-p / 3,
        t=t,
        theta=theta,
    )


def _monic_value(coeffs: CubicCoefficients, x: float) -> float:
    return ((x + coeffs.p) * x + coeffs.q) * x + coeffs.r


def _monic_derivative(coeffs: CubicCoefficients, x: float) -> float:
    return (3 * x + 2 * coeffs.p) * x + coeffs.q


def _polish(coeffs: CubicCoefficients, x: float) -> float:
    # Local refinement using the quadratic Taylor model (degrades gracefully
    # to Newton), with a step cap so it can never hop to a different root and
    # a monotone guard on the residual.
    for _ in range(3):
        f = _monic_value(coeffs, x)
        if f == 0.0:
            break
        f1 = _monic_derivative(coeffs, x)
        f2 = 6 * x + 2 * coeffs.p
        square = f1 * f1 - 2 * f * f2
        if square >= 0 and f2 != 0.0:
            root = np.sqrt(square)
            h1 = (-f1 + root) / f2
            h2 = (-f1 - root) / f2
            h = h1 if abs(h1) < abs(h2) else h2
        elif f1 != 0.0:
            h = -f / f1
        else:
            break
        if not np.isfinite(h) or abs(h) > _MAX_POLISH_STEP:
            break
        candidate = x + h
        if abs(_monic_value(coeffs, candidate)) <= abs(f):
            x = candidate
        else:
            break
    return x


def _refine_close_pair(coeffs: CubicCoefficients, xs: list[float]) -> list[float]:
    # Nearly coincident roots limit the direct formulas to ~sqrt(eps)
    # accuracy, which arcsin further amplifies near the [0, 1] endpoints.
    # When the polished candidates contain a close pair, the pair is
    # recomputed from the well-separated root via Vieta (sum and product of
    # the deflated quadratic, no division), restoring near-full precision.
    pair_gap = 1e-5
    ordered = sorted(xs)
    gap01 = ordered[1] - ordered[0]
    gap12 = ordered[2] - ordered[1]
    if min(gap01, gap12) > pair_gap:
        return xs
    if gap01 <= pair_gap and gap12 <= pair_gap:
        triple = _polish(coeffs, -coeffs.p / 3)
        return [triple, triple, triple]
    isolated = ordered[2] if gap01 <= gap12 else ordered[0]
    center = (-coeffs.p - isolated) / 2
    pair_product = coeffs.q + isolated * (coeffs.p + isolated)
    split_sq = center * center - pair_product
    # The coefficients carry ~1e-16 absolute noise, so below ~1e-14 the
    # squared half-split is unresolved and recomputing the pair would only
    # amplify that noise; the collapsed candidates are already optimal.
    if split_sq <= 1e-14:
        return xs
    offset = np.sqrt(split_sq)
    return [isolated, center + offset, center - offset]


def solve_depressed(dc: DepressedCubic) -> CubicRoots:
    """Real roots of the depressed cubic, mapped back to x = X + shift.

    Tangent branch (dc.t is None): X1 = -2(Q/2)^(1/3), X2 = X3 = (Q/2)^(1/3)
    with the sign-preserving real cube root.  Otherwise the standard
    trigonometric three-real-root solution.  Every root is locally refined
    and validated against the polynomial.

    Raises:
        ResidualTooLarge: if any root leaves [0, 1] by more than 1e-9 or its
            polynomial residual exceeds 1e-8.
    """
    if dc.t is None:
        cr = float(np.cbrt(dc.q / 2))
        big_roots = [-2 * cr, cr, cr]
    else:
        # P < 0 on this branch; depress() already rejected positive
        # discriminants.
        m = 2 * np.sqrt(-dc.p / 3)
        phi = np.arccos(np.clip(-dc.t, -1.0, 1.0))
        big_roots = [m * np.cos((phi + 2 * np.pi * k) / 3) for k in range(3)]

    candidates = [_polish(dc.monic, big_x + dc.shift) for big_x in big_roots]
    candidates = _refine_close_pair(dc.monic, candidates)

    roots = []
    for x in candidates:
        if x < -ROOT_RANGE_SLACK or x > 1 + ROOT_RANGE_SLACK:
            raise ResidualTooLarge(f"root {x!r} leaves [0, 1] beyond slack")
        residual = abs(_monic_value(dc.monic, x))
        if residual > ROOT_RESIDUAL_TOL:
            raise ResidualTooLarge(
                f"root {x!r} has residual {residual:.3e} > {ROOT_RESIDUAL_TOL:.0e}"
            )
        x = min(max(x, 0.0), 1.0)
        # arcsin(sqrt(x)) amplifies absolute root error near the endpoints, so
        # values within one part in 1e15 of 0 or 1 are taken exactly.
        if x < ROOT_SNAP:
            x = 0.0
        elif 1.0 - x < ROOT_SNAP:
            x = 1.0
        roots.append(x)
    roots.sort(reverse=True)
    return CubicRoots(*roots)


def coords_from_abc(abc: ABCTriple) -> CanonicalCoordinates:
    """Run the cubic pipeline on an invariant triple."""
    roots = solve_depressed(depress(cubic_coefficients(abc)))
    c = sorted((float(np.arcsin(np.sqrt(x))) for x in roots.as_tuple()), reverse=True)
    return CanonicalCoordinates(*c)


def canonical_coords(u) -> CanonicalCoordinates:
    """Canonical coordinates of a two-qubit unitary via invariants + cubic."""
    return coords_from_abc(abc_from_invariants(local_invariants(u)))


def min_time(u, coupling_j: float) -> MinTimeReport:
    """Minimal time t* = (c1 + c2 + c3)/(pi J) to realize ``u``.

    Raises:
        NonPositiveCoupling: if coupling_j <= 0.
    """
    if coupling_j <= 0:
        raise NonPositiveCoupling(f"coupling J must be positive, got {coupling_j}")
    inv = local_invariants(u)
    abc = abc_from_invariants(inv)
    coords = coords_from_abc(abc)
    t_star = coords.total / (np.pi * coupling_j)
    return MinTimeReport(
        coords=coords,
        t_star=float(t_star),
        coupling_j=float(coupling_j),
        invariants=inv,
        abc=abc,
    )
