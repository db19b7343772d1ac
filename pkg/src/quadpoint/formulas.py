"""Closed-form enumerative formulas for codimension-two varieties.

Multiple-point counts of generic projections (double, triple, quadruple
points), 4-secant line counts for surfaces and curves in P^4, and
degree/genus closed forms for the focal loci of first-order line
congruences.  Every evaluator works in exact rational arithmetic;
integrality is asserted after the fact, never obtained by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple


def _require_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError("%s is not an integer: %s" % (what, value))
    return int(value)


@dataclass(frozen=True)
class ThreefoldInvariants:
    """Basic invariants of a smooth threefold X in P^5.

    d: degree; pi: sectional genus; chi_section: chi(O) of the general
    hyperplane-section surface; chi: chi(O) of X itself.
    """

    d: int
    pi: int
    chi_section: int
    chi: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("degree must be >= 1")
        if self.pi < 0:
            raise ValueError("sectional genus must be >= 0")


@dataclass(frozen=True)
class SurfaceInvariants:
    """Basic invariants of a smooth surface S in P^4.

    d: degree; pi: sectional genus; chi: chi(O_S); k_squared: K.K.
    """

    d: int
    pi: int
    chi: int
    k_squared: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("degree must be >= 1")

    @property
    def hk(self) -> int:
        """H.K by adjunction on a general curve section."""
        return 2 * self.pi - 2 - self.d

    @property
    def c2(self) -> int:
        """Topological Euler characteristic via Noether: c2 = 12*chi - K^2."""
        return 12 * self.chi - self.k_squared


# ----- double point formulas for threefolds in P^5 -----


def k_cubed(t: ThreefoldInvariants) -> int:
    """K^3 of a smooth threefold in P^5 from its basic invariants."""
    value = (
        Fraction(-5) * t.d**2
        + Fraction(t.d) * (2 * t.pi + 25)
        + 24 * (t.pi - 1)
        - 36 * t.chi
        - 24 * t.chi_section
    )
    return _require_integer(value, "K^3")


def h_k_squared(t: ThreefoldInvariants) -> int:
    """H.K^2 of a smooth threefold in P^5 from its basic invariants."""
    value = Fraction(t.d * (t.d + 1), 2) - 9 * (t.pi - 1) + 6 * t.chi
    return _require_integer(value, "H.K^2")


# ----- multiple point counts -----


def quadruple_points(t: ThreefoldInvariants) -> Fraction:
    """Apparent quadruple points of a generic projection of a smooth
    threefold X in P^5 to P^4 (quadruple-point formula)."""
    d, p = Fraction(t.d), Fraction(t.pi)
    return (
        d**4 / 24
        - d**3 / 4
        + d**2 / 2 * (Fraction(11, 12) - p)
        + d * (Fraction(5, 2) * p + 2 * t.chi_section - Fraction(9, 4))
        + p**2 / 2
        - Fraction(7, 2) * p
        + 6 * t.chi
        - 9 * t.chi_section
        + 3
    )


def four_secants_through_point(d: int, pi: int, chi: int) -> Fraction:
    """4-secant lines of a smooth non-scroll surface in P^4 passing
    through a general point of the surface."""
    dd, p = Fraction(d), Fraction(pi)
    return (
        dd**3 / 6
        - Fraction(3, 2) * dd**2
        + dd * (Fraction(16, 3) - p)
        + 4 * p
        + 2 * chi
        - 10
    )


def foursecant_scroll_degree(d: int, pi: int, chi: int) -> Fraction:
    """Degree a_1 of the hypersurface of P^4 swept by the 4-secant lines
    of a smooth non-scroll surface."""
    dd, p = Fraction(d), Fraction(pi)
    return (
        dd**4 / 8
        - Fraction(5, 4) * dd**3
        + dd**2 * (Fraction(35, 8) - p)
        + dd * (7 * p + 2 * chi - Fraction(33, 4))
        + p**2 / 2
        - Fraction(25, 2) * p
        - 9 * chi
        + 12
    )


def curve_foursecants(d: int, pi: int) -> Fraction:
    """Number a_2 of 4-secant lines of a smooth curve of degree d and
    genus pi in P^3."""
    dd, p = Fraction(d), Fraction(pi)
    return (
        dd**4 / 12
        - dd**3
        + Fraction(53, 12) * dd**2
        - Fraction(17, 2) * dd
        + 6
        - p * dd**2 / 2
        + Fraction(7, 2) * dd * p
        - Fraction(13, 2) * p
        + p**2 / 2
    )


def foursecant_constraint_residual(d: int, pi: int, chi: int) -> Fraction:
    """Residual of the constraint tying the 4-secant counts together for
    a non-scroll surface in P^4; zero exactly when the constraint holds.

    Identity: 4*four_secants_through_point - 1 - foursecant_scroll_degree
    equals minus this residual for every (d, pi, chi).
    """
    dd, p = Fraction(d), Fraction(pi)
    return (
        dd**4 / 8
        - Fraction(23, 12) * dd**3
        - dd**2 * (p - Fraction(83, 8))
        - dd * (Fraction(355, 12) - 11 * p - 2 * chi)
        + p**2 / 2
        - Fraction(57, 2) * p
        - 17 * chi
        + 53
    )


def apparent_triple_points(s: SurfaceInvariants) -> Fraction:
    """Apparent triple points of a generic projection of a smooth
    non-scroll surface in P^4 to P^3 (triple-point formula)."""
    d = Fraction(s.d)
    return (
        d * (d**2 - 12 * d + 44)
        + 4 * s.k_squared
        - 2 * s.c2
        - 3 * s.hk * (s.d - 8)
    ) / 6


def blowup_triple_points(s: SurfaceInvariants) -> Fraction:
    """Triple-point count for the blow-up of S at one point, projected
    from the exceptional line: degree drops by one, K^2 by one, c2
    grows by one, and H.K becomes 2*pi - d - 1.

    Equals four_secants_through_point(d, pi, chi) whenever K^2 satisfies
    the double point formula for smooth surfaces in P^4 (see
    k_squared_from_double_point); the blown-up triple points are exactly
    the 4-secants through the blown-up point.
    """
    dt = Fraction(s.d - 1)
    k2t = s.k_squared - 1
    c2t = s.c2 + 1
    hkt = 2 * s.pi - s.d - 1
    return (dt * (dt**2 - 12 * dt + 44) + 4 * k2t - 2 * c2t - 3 * hkt * (dt - 8)) / 6


def k_squared_from_double_point(d: int, pi: int, chi: int) -> int:
    """K^2 forced by the double point formula for a smooth surface in
    P^4: d^2 - 10d - 5*HK - 2*K^2 + 12*chi = 0."""
    value = Fraction(d * d - 5 * d - 10 * pi + 12 * chi + 10, 2)
    return _require_integer(value, "K^2")


# ----- focal locus closed forms -----


class FocalLocusInvariants(NamedTuple):
    degree: int
    sectional_genus: int
    dim: int


def linear_focal_degree(n: int) -> int:
    """Degree of the focal locus of a general linear congruence in P^n."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return _require_integer(Fraction(n * n - 3 * n + 4, 2), "focal degree")


def pfaffian_hypersurface_degree(n: int) -> int:
    """Degree of the Pfaffian hypersurface in the parameter space of a
    linear congruence; defined for odd n only (even n gives an
    identically vanishing determinant instead)."""
    if n % 2 == 0:
        raise ValueError("n even: determinant vanishes identically, no hypersurface")
    if n < 3:
        raise ValueError("n must be >= 3")
    return (n + 1) // 2


def determinantal_invariants(n: int) -> FocalLocusInvariants:
    """Degree and sectional genus of the degeneracy locus of a general
    n x (n-1) matrix of linear forms on P^n; the locus has dimension n-2."""
    if n < 3:
        raise ValueError("n must be >= 3")
    degree = comb(n, 2)
    genus = _require_integer(
        1 + Fraction(2 * n - 7, 3) * comb(n, 2), "sectional genus"
    )
    return FocalLocusInvariants(degree, genus, n - 2)


def blowup_center_invariants(n: int) -> FocalLocusInvariants:
    """Degree and sectional genus of the center Z blown up inside
    P^(n-2) to produce the determinantal focal locus; dim Z = n-4
    (points when n=4, a curve when n=5)."""
    if n < 4:
        raise ValueError("n must be >= 4")
    degree = comb(n + 1, 2)
    genus = _require_integer(
        Fraction(n * (2 * n - 5) * (n + 1), 6) - 1, "sectional genus"
    )
    return FocalLocusInvariants(degree, genus, n - 4)


def focal_degree_bound(n: int, m: int, k: int = 1) -> bool:
    """Strict degree window (n-1)/k < m < (n-1)^2 for the focal locus of
    a first-order congruence, where k is the geometric multiplicity of
    the reduced focal locus."""
    if n < 2 or m < 1 or k < 1:
        raise ValueError("require n >= 2, m >= 1, k >= 1")
    return Fraction(n - 1, k) < m < (n - 1) ** 2
