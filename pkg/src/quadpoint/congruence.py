"""Explicit first-order line congruences in P^n, built and verified exactly.

Two constructions are provided: linear congruences cut out on the
Grassmannian G(1,n) by n-1 skew-symmetric matrices, and determinantal
congruences given by an n x (n-1) matrix of linear forms whose minors
vanish on the focal locus.  Everything runs over the rationals; the
order-one property and the focal length on lines are checked by exact
linear algebra and binary-form gcds, never numerically.
"""

from __future__ import annotations

import random

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from .exact import (
    BinaryForm,
    MultiPoly,
    RationalMatrix,
    _as_fraction,
    binary_gcd,
    pfaffian,
    primitive_vector,
    rank_and_kernel,
    ring_determinant,
    seeded_random_matrix,
)

MAX_REDRAWS = 32


class FocalPointError(ValueError):
    """The probe point lies on the focal locus: no unique line exists."""


class DegeneracyError(ValueError):
    """A construction step hit a rank defect it cannot recover from."""


class GenericityError(RuntimeError):
    """Random draws kept producing degenerate data."""


def normalize_point(point: Sequence) -> tuple:
    """Canonical integer representative of a point of P^n.

    Clears denominators, divides by content, makes the first nonzero
    coordinate positive.
    """
    pt = tuple(_as_fraction(c) for c in point)
    if len(pt) < 2 or all(c == 0 for c in pt):
        raise ValueError("point must be a nonzero homogeneous tuple")
    return primitive_vector(pt)


class ProjLine:
    """A line of P^n spanned by two independent rational points.

    The parametrization P(s,t) = s*p0 + t*p1 is fixed: restriction
    operations on a given ProjLine always use these two generators in
    this order.  Equality and hashing go through the normalized Plucker
    coordinates, so they do not depend on the chosen spanning points.
    """

    __slots__ = ("p0", "p1", "_plucker")

    def __init__(self, p0: Sequence, p1: Sequence):
        a = normalize_point(p0)
        b = normalize_point(p1)
        if len(a) != len(b):
            raise ValueError("spanning points live in different spaces")
        wedge = [
            a[i] * b[j] - a[j] * b[i]
            for i, j in combinations(range(len(a)), 2)
        ]
        if all(w == 0 for w in wedge):
            raise ValueError("spanning points are proportional")
        self.p0 = a
        self.p1 = b
        self._plucker = primitive_vector(wedge)

    @property
    def ambient_dim(self) -> int:
        return len(self.p0) - 1

    @property
    def plucker(self) -> tuple:
        return self._plucker

    def point_at(self, s, t) -> tuple:
        sv, tv = _as_fraction(s), _as_fraction(t)
        coords = tuple(sv * x + tv * y for x, y in zip(self.p0, self.p1))
        if all(c == 0 for c in coords):
            raise ValueError("(s,t) must be nonzero")
        return primitive_vector(coords)

    def contains(self, point: Sequence) -> bool:
        pt = normalize_point(point)
        if len(pt) != len(self.p0):
            return False
        rank, _ = rank_and_kernel(RationalMatrix([self.p0, self.p1, pt]))
        return rank == 2

    def swapped(self) -> "ProjLine":
        """The same line with the parametrization reversed."""
        return ProjLine(self.p1, self.p0)

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return self._plucker == other._plucker

    def __hash__(self):
        return hash(self._plucker)

    def __repr__(self):
        return "ProjLine(%r, %r)" % (self.p0, self.p1)


class LinearCongruence:
    """n-1 skew-symmetric (n+1) x (n+1) matrices A_1..A_{n-1}.

    Each matrix cuts a hyperplane section of G(1,n) in the Plucker
    embedding; together they cut a congruence of lines.  The line
    through a general point P is the kernel of the stack of row vectors
    tP*A_i, which contains P automatically by skew-symmetry.
    """

    __slots__ = ("n", "matrices", "witness")

    def __init__(self, n: int, matrices: Sequence, witness: Optional[tuple] = None):
        if n < 3:
            raise ValueError("n must be >= 3")
        mats = tuple(
            m if isinstance(m, RationalMatrix) else RationalMatrix(m)
            for m in matrices
        )
        if len(mats) != n - 1:
            raise ValueError("expected %d matrices, got %d" % (n - 1, len(mats)))
        for k, m in enumerate(mats):
            if m.rows != n + 1 or m.cols != n + 1:
                raise ValueError("matrix %d is not (n+1) x (n+1)" % k)
            if not m.is_skew_symmetric():
                raise ValueError("matrix %d is not skew-symmetric" % k)
        self.n = n
        self.matrices = mats
        self.witness = None if witness is None else normalize_point(witness)

    @property
    def kind(self) -> str:
        return "linear"

    def stacked_rows_at(self, point: Sequence) -> RationalMatrix:
        """The (n-1) x (n+1) matrix with rows tP * A_i."""
        pt = normalize_point(point)
        if len(pt) != self.n + 1:
            raise ValueError("point has wrong length")
        return RationalMatrix(
            [m.transpose().mat_vec(pt) for m in self.matrices]
        )

    def restricted_columns(self, line: ProjLine) -> list:
        """(n+1) x (n-1) matrix of degree-1 binary forms: column i is
        A_i * (s*p0 + t*p1)."""
        cols = [
            (m.mat_vec(line.p0), m.mat_vec(line.p1)) for m in self.matrices
        ]
        return [
            [BinaryForm.linear(u[k], v[k]) for (u, v) in cols]
            for k in range(self.n + 1)
        ]


class DeterminantalCongruence:
    """An n x (n-1) matrix of linear forms on P^n.

    Entry (i, j) is stored as its coefficient tuple of length n+1.  The
    line through a general point P is cut by the n-1 linear forms
    obtained from the unique (up to scale) left kernel vector of the
    evaluated matrix A(P).
    """

    __slots__ = ("n", "rows", "witness")

    def __init__(self, n: int, rows: Sequence, witness: Optional[tuple] = None):
        if n < 3:
            raise ValueError("n must be >= 3")
        norm = []
        for i, row in enumerate(rows):
            entries = []
            for j, coeffs in enumerate(row):
                ct = tuple(_as_fraction(c) for c in coeffs)
                if len(ct) != n + 1:
                    raise ValueError(
                        "entry (%d,%d) needs %d coefficients" % (i, j, n + 1)
                    )
                entries.append(ct)
            if len(entries) != n - 1:
                raise ValueError("row %d needs %d entries" % (i, n - 1))
            norm.append(tuple(entries))
        if len(norm) != n:
            raise ValueError("expected %d rows, got %d" % (n, len(norm)))
        self.n = n
        self.rows = tuple(norm)
        self.witness = None if witness is None else normalize_point(witness)

    @property
    def kind(self) -> str:
        return "determinantal"

    def matrix_at(self, point: Sequence) -> RationalMatrix:
        pt = normalize_point(point)
        if len(pt) != self.n + 1:
            raise ValueError("point has wrong length")
        return RationalMatrix(
            [
                [sum(c * x for c, x in zip(coeffs, pt)) for coeffs in row]
                for row in self.rows
            ]
        )

    def restricted_rows(self, line: ProjLine) -> list:
        """n x (n-1) matrix of degree-1 binary forms: A at s*p0 + t*p1."""
        out = []
        for row in self.rows:
            out.append(
                [
                    BinaryForm.linear(
                        sum(c * x for c, x in zip(coeffs, line.p0)),
                        sum(c * x for c, x in zip(coeffs, line.p1)),
                    )
                    for coeffs in row
                ]
            )
        return out


Congruence = Union[LinearCongruence, DeterminantalCongruence]


# ----- line through a point -----


def line_through_point_linear(c: LinearCongruence, point: Sequence) -> ProjLine:
    """The unique congruence line through a general point P.

    Solves tP * A_i * v = 0 for all i.  P itself always solves the
    system; a second independent solution exists because the stack has
    at most n-1 rows.  A kernel of dimension 3 or more means P is a
    focal (fundamental) point.
    """
    stack = c.stacked_rows_at(point)
    rank, kernel = rank_and_kernel(stack)
    dim = c.n + 1 - rank
    if dim != 2:
        raise FocalPointError(
            "kernel dimension %d at %s: focal point" % (dim, normalize_point(point))
        )
    line = ProjLine(kernel[0], kernel[1])
    pt = normalize_point(point)
    assert line.contains(pt)
    for m in c.matrices:
        image = m.mat_vec(line.p1)
        assert sum(a * b for a, b in zip(line.p0, image)) == 0
    return line


def line_through_point_determinantal(
    c: DeterminantalCongruence, point: Sequence
) -> ProjLine:
    """The unique congruence line through a general point P.

    Finds the left kernel vector lambda of A(P) (it must be unique up
    to scale), then intersects the n-1 hyperplanes given by the lambda
    combination of the columns of A.
    """
    evaluated = c.matrix_at(point)
    rank, left = rank_and_kernel(evaluated.transpose())
    dim = c.n - rank
    if dim != 1:
        raise FocalPointError(
            "lambda space has dimension %d at %s: degeneracy locus point"
            % (dim, normalize_point(point))
        )
    lam = left[0]
    forms = [
        tuple(
            sum(lam[i] * c.rows[i][j][k] for i in range(c.n))
            for k in range(c.n + 1)
        )
        for j in range(c.n - 1)
    ]
    system = RationalMatrix(forms)
    rank2, kernel = rank_and_kernel(system)
    if rank2 != c.n - 1:
        raise DegeneracyError(
            "combined forms have rank %d < %d" % (rank2, c.n - 1)
        )
    line = ProjLine(kernel[0], kernel[1])
    pt = normalize_point(point)
    assert all(v == 0 for v in system.mat_vec(pt))
    assert line.contains(pt)
    return line


def line_through_point(c: Congruence, point: Sequence) -> ProjLine:
    if isinstance(c, LinearCongruence):
        return line_through_point_linear(c, point)
    return line_through_point_determinantal(c, point)


def is_focal_point(c: Congruence, point: Sequence) -> bool:
    """True iff P lies on the focal locus of the congruence."""
    if isinstance(c, LinearCongruence):
        pt = normalize_point(point)
        if len(pt) != c.n + 1:
            raise ValueError("point has wrong length")
        columns = RationalMatrix(
            [m.mat_vec(pt) for m in c.matrices]
        ).transpose()
        rank, _ = rank_and_kernel(columns)
        return rank <= c.n - 2
    rank, _ = rank_and_kernel(c.matrix_at(point))
    return rank <= c.n - 2


# ----- focal length on a line -----


class FocalSliceReport:
    """Outcome of slicing the defining matrix along one line.

    minor_degrees lists the degree of each restricted maximal minor in
    a fixed order (None for identically zero minors); gcd_form is the
    monic gcd of the nonzero minors.  On a line of the congruence the
    gcd degree equals n-1, the focal length.  If every minor vanishes,
    the line lies inside the focal locus and focal_line is set; the
    gcd degree is then None.
    """

    __slots__ = ("minor_degrees", "gcd_form", "gcd_degree", "focal_line")

    def __init__(self, minor_degrees, gcd_form, gcd_degree, focal_line):
        self.minor_degrees = tuple(minor_degrees)
        self.gcd_form = gcd_form
        self.gcd_degree = gcd_degree
        self.focal_line = focal_line

    def __repr__(self):
        return "FocalSliceReport(gcd_degree=%r, focal_line=%r)" % (
            self.gcd_degree,
            self.focal_line,
        )


def focal_points_on_line(c: Congruence, line: ProjLine) -> FocalSliceReport:
    """Focal scheme cut on a line, as the gcd of restricted minors.

    Restricts the defining matrix to s*p0 + t*p1 and takes all maximal
    minors (choices of n-1 rows, in ascending lexicographic order of
    the kept row indices).  Each nonzero minor is a binary form of
    degree n-1; their gcd is the divisorial part of the focal scheme.
    """
    if line.ambient_dim != c.n:
        raise ValueError("line lives in the wrong space")
    if isinstance(c, LinearCongruence):
        rows = c.restricted_columns(line)
    else:
        rows = c.restricted_rows(line)
    size = c.n - 1
    minors = [
        ring_determinant([rows[r] for r in kept], BinaryForm.zero())
        for kept in combinations(range(len(rows)), size)
    ]
    degrees = tuple(None if m.is_zero else m.degree for m in minors)
    if all(m.is_zero for m in minors):
        return FocalSliceReport(degrees, BinaryForm.zero(), None, True)
    g = binary_gcd(minors)
    return FocalSliceReport(degrees, g, g.degree, False)


# ----- Pfaffian of the linear family -----


def pfaffian_polynomial(c: LinearCongruence) -> MultiPoly:
    """Pfaffian of sum(lambda_i * A_i) as a form in lambda_1..lambda_{n-1}.

    Defined for odd n only: the matrices are (n+1) x (n+1), and an odd
    size would force a zero determinant.  The result is homogeneous of
    degree (n+1)/2; its vanishing locus parametrizes the singular
    members of the family.
    """
    if c.n % 2 == 0:
        raise ValueError(
            "n even: determinant of the lambda family vanishes identically"
        )
    nvars = c.n - 1
    size = c.n + 1
    rows = [
        [
            sum(
                (
                    MultiPoly.variable(nvars, i) * c.matrices[i].entry(j, k)
                    for i in range(nvars)
                    if c.matrices[i].entry(j, k) != 0
                ),
                MultiPoly.zero(nvars),
            )
            for k in range(size)
        ]
        for j in range(size)
    ]
    pf = pfaffian(rows)
    if not pf:
        raise DegeneracyError("pfaffian vanishes identically")
    expected = (c.n + 1) // 2
    if not pf.is_homogeneous(expected):
        raise DegeneracyError("pfaffian is not homogeneous of degree %d" % expected)
    return pf


def determinant_vanishes_identically(c: LinearCongruence) -> bool:
    """Symbolic check that det(sum(lambda_i * A_i)) is the zero
    polynomial; always true when n is even (odd matrix size)."""
    nvars = c.n - 1
    size = c.n + 1
    rows = [
        [
            sum(
                (
                    MultiPoly.variable(nvars, i) * c.matrices[i].entry(j, k)
                    for i in range(nvars)
                    if c.matrices[i].entry(j, k) != 0
                ),
                MultiPoly.zero(nvars),
            )
            for k in range(size)
        ]
        for j in range(size)
    ]
    det = ring_determinant(rows, MultiPoly.zero(nvars))
    return not det


# ----- order-one verification -----


class OrderCheckReport:
    """Aggregate outcome of probing the congruence at random points.

    passed is true when every non-focal probe produced exactly one
    line; focal probes are skipped and counted, never failed.
    """

    __slots__ = ("trials", "successes", "focal_skips", "failures", "unique_lines")

    def __init__(self, trials, successes, focal_skips, failures, unique_lines):
        self.trials = trials
        self.successes = successes
        self.focal_skips = focal_skips
        self.failures = tuple(failures)
        self.unique_lines = unique_lines

    @property
    def passed(self) -> bool:
        return not self.failures and self.successes + self.focal_skips == self.trials

    def __repr__(self):
        return "OrderCheckReport(trials=%d, successes=%d, focal_skips=%d, failures=%d)" % (
            self.trials,
            self.successes,
            self.focal_skips,
            len(self.failures),
        )


def _derived_seed(seed: int, stage: int, index: int) -> int:
    # Deterministic mix so redraw attempts and trial probes are
    # reproducible and order-independent.
    return seed * 1000003 + stage * 1009 + index


def _random_point(rng: random.Random, n: int, bound: int) -> tuple:
    while True:
        coords = [rng.randint(-bound, bound) for _ in range(n + 1)]
        if any(coords):
            return tuple(coords)


def order_check(
    c: Congruence, trials: int = 10, seed: int = 0, bound: int = 9
) -> OrderCheckReport:
    """Probe the congruence at `trials` random points of P^n.

    Every non-focal point must yield exactly one line through it; focal
    probes are recorded as skips.  Per-trial seeds are derived from
    (seed, trial), so the report does not depend on evaluation order.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    successes = 0
    focal_skips = 0
    failures = []
    lines = set()
    for trial in range(trials):
        rng = random.Random(_derived_seed(seed, trial, 0))
        point = _random_point(rng, c.n, bound)
        try:
            line = line_through_point(c, point)
        except FocalPointError:
            focal_skips += 1
            continue
        except DegeneracyError as err:
            failures.append("point %s: %s" % (point, err))
            continue
        successes += 1
        lines.add(line)
    return OrderCheckReport(trials, successes, focal_skips, failures, len(lines))


class FociTrial:
    """One probe of the focal-length property: the line through a
    random point must carry a focal scheme of length exactly n-1."""

    __slots__ = ("point", "focal_probe", "gcd_degree", "expected")

    def __init__(self, point, focal_probe, gcd_degree, expected):
        self.point = point
        self.focal_probe = focal_probe
        self.gcd_degree = gcd_degree
        self.expected = expected

    @property
    def ok(self) -> bool:
        return self.focal_probe or self.gcd_degree == self.expected

    def __repr__(self):
        return "FociTrial(point=%r, focal_probe=%r, gcd_degree=%r)" % (
            self.point,
            self.focal_probe,
            self.gcd_degree,
        )


def foci_check(
    c: Congruence, trials: int = 10, seed: int = 0, bound: int = 9
) -> tuple:
    """Slice the congruence along `trials` probe lines and report the
    gcd degree of the restricted minors for each; probes that land on
    the focal locus are marked and skipped.  Uses the same derived-seed
    scheme as order_check, so the two reports probe the same points.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    expected = c.n - 1
    out = []
    for trial in range(trials):
        rng = random.Random(_derived_seed(seed, trial, 0))
        point = _random_point(rng, c.n, bound)
        try:
            line = line_through_point(c, point)
        except FocalPointError:
            out.append(FociTrial(point, True, None, expected))
            continue
        report = focal_points_on_line(c, line)
        out.append(FociTrial(point, False, report.gcd_degree, expected))
    return tuple(out)


# ----- random constructions -----


def _probe_point(n: int) -> tuple:
    return tuple(range(1, n + 2))


def random_linear_congruence(
    n: int, seed: int, bound: int = 9
) -> LinearCongruence:
    """Draw n-1 random integer skew matrices until they pass a
    genericity probe (unique line through a fixed point)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    probe = _probe_point(n)
    for attempt in range(MAX_REDRAWS):
        mats = [
            seeded_random_matrix(
                _derived_seed(seed, attempt, i), n + 1, n + 1, bound, skew=True
            )
            for i in range(n - 1)
        ]
        candidate = LinearCongruence(n, mats)
        try:
            line_through_point_linear(candidate, probe)
        except (FocalPointError, DegeneracyError):
            continue
        return LinearCongruence(n, mats, witness=probe)
    raise GenericityError(
        "no generic linear congruence after %d draws" % MAX_REDRAWS
    )


def random_determinantal_congruence(
    n: int, seed: int, bound: int = 9
) -> DeterminantalCongruence:
    """Draw a random n x (n-1) tensor of integer linear forms until it
    passes a genericity probe (unique lambda and a genuine line)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    probe = _probe_point(n)
    for attempt in range(MAX_REDRAWS):
        rng = random.Random(_derived_seed(seed, attempt, 0))
        rows = [
            [
                [rng.randint(-bound, bound) for _ in range(n + 1)]
                for _ in range(n - 1)
            ]
            for _ in range(n)
        ]
        candidate = DeterminantalCongruence(n, rows)
        try:
            line_through_point_determinantal(candidate, probe)
        except (FocalPointError, DegeneracyError):
            continue
        return DeterminantalCongruence(n, rows, witness=probe)
    raise GenericityError(
        "no generic determinantal congruence after %d draws" % MAX_REDRAWS
    )


def twisted_cubic_congruence() -> DeterminantalCongruence:
    """The catalecticant 3 x 2 matrix ((x0,x1),(x1,x2),(x2,x3)) on P^3.

    Its 2x2 minors cut the twisted cubic; the congruence consists of
    the secant lines of the curve.
    """
    x = [tuple(1 if k == i else 0 for k in range(4)) for i in range(4)]
    rows = [(x[0], x[1]), (x[1], x[2]), (x[2], x[3])]
    return DeterminantalCongruence(3, rows, witness=None)


# ----- plain-text serialization -----


def save_congruence(c: Congruence) -> str:
    """Plain-text form: kind, n, then matrix entries row by row."""
    lines = ["kind %s" % c.kind, "n %d" % c.n]
    if isinstance(c, LinearCongruence):
        for idx, m in enumerate(c.matrices):
            lines.append("matrix %d" % idx)
            for i in range(m.rows):
                lines.append(" ".join(str(v) for v in m.row(i)))
    else:
        for idx, row in enumerate(c.rows):
            lines.append("row %d" % idx)
            for coeffs in row:
                lines.append(" ".join(str(v) for v in coeffs))
    return "\n".join(lines) + "\n"


def load_congruence(text: str) -> Congruence:
    """Parse the save_congruence format; diagnostics carry line numbers."""
    raw = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]

    def fail(no, msg):
        raise ValueError("line %d: %s" % (no, msg))

    if len(raw) < 2:
        raise ValueError("truncated congruence file")
    no, first = raw[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != "kind":
        fail(no, "expected 'kind linear|determinantal'")
    kind = parts[1]
    if kind not in ("linear", "determinantal"):
        fail(no, "unknown kind %r" % kind)
    no, second = raw[1]
    parts = second.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].lstrip("-").isdigit():
        fail(no, "expected 'n <integer>'")
    n = int(parts[1])
    if n < 3:
        fail(no, "n must be >= 3")

    body = raw[2:]
    pos = 0

    def next_line(expect: str):
        nonlocal pos
        if pos >= len(body):
            raise ValueError("unexpected end of file: expected %s" % expect)
        item = body[pos]
        pos += 1
        return item

    def parse_vector(expect_len: int):
        no, line = next_line("%d entries" % expect_len)
        tokens = line.split()
        if len(tokens) != expect_len:
            fail(no, "expected %d entries, got %d" % (expect_len, len(tokens)))
        try:
            return [Fraction(tok) for tok in tokens]
        except ValueError:
            fail(no, "non-rational entry in %r" % line)

    if kind == "linear":
        matrices = []
        for idx in range(n - 1):
            no, header = next_line("'matrix %d'" % idx)
            if header.split() != ["matrix", str(idx)]:
                fail(no, "expected 'matrix %d', got %r" % (idx, header))
            matrices.append([parse_vector(n + 1) for _ in range(n + 1)])
        result = LinearCongruence(n, matrices)
    else:
        rows = []
        for idx in range(n):
            no, header = next_line("'row %d'" % idx)
            if header.split() != ["row", str(idx)]:
                fail(no, "expected 'row %d', got %r" % (idx, header))
            rows.append([parse_vector(n + 1) for _ in range(n - 1)])
        result = DeterminantalCongruence(n, rows)
    if pos != len(body):
        no, line = body[pos]
        fail(no, "trailing content %r" % line)
    return result
