"""Exact arithmetic substrate: rational matrices, fraction-free elimination,
sparse multivariate polynomials, Pfaffians, and binary-form gcd.

Everything here stays in exact rational arithmetic (fractions.Fraction);
no operation introduces floating point.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected an exact rational value, got %r" % (x,))


def primitive_vector(vec: Sequence) -> tuple:
    """Scale a nonzero rational vector to coprime integers, first nonzero positive.

    Canonical representative for projective points and kernel vectors.
    """
    fracs = [_as_fraction(x) for x in vec]
    if all(x == 0 for x in fracs):
        raise ValueError("zero vector has no primitive representative")
    mult = math.lcm(*(x.denominator for x in fracs))
    ints = [int(x * mult) for x in fracs]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


class RationalMatrix:
    """Immutable matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows_data: Iterable[Iterable]):
        data = tuple(tuple(_as_fraction(x) for x in row) for row in rows_data)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self._rows = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def from_rows(cls, rows_data) -> "RationalMatrix":
        return cls(rows_data)

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    @property
    def entries(self) -> tuple:
        """Row-major flat view."""
        return tuple(x for row in self._rows for x in row)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows))

    def mat_vec(self, v: Sequence) -> tuple:
        vf = [_as_fraction(x) for x in v]
        if len(vf) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(r[j] * vf[j] for j in range(self.cols)) for r in self._rows)

    def is_skew_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self._rows[i][j] == -self._rows[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return "RationalMatrix[%s]" % body


def _integer_rows(m: RationalMatrix) -> list:
    # Row scaling changes neither rank nor kernel.
    out = []
    for i in range(m.rows):
        row = m.row(i)
        mult = math.lcm(*(x.denominator for x in row))
        out.append([int(x * mult) for x in row])
    return out


def rank_and_kernel(m: RationalMatrix) -> tuple:
    """Rank of m together with a primitive integer basis of its right kernel.

    Fraction-free (Bareiss) elimination over the integers; every
    intermediate entry is an exact minor of the scaled input, so the
    interior division is exact.
    """
    work = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    pivot_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, nrows):
            for k in range(c + 1, ncols):
                num = work[i][k] * work[r][c] - work[i][c] * work[r][k]
                q, rem = divmod(num, prev)
                assert rem == 0
                work[i][k] = q
            work[i][c] = 0
        prev = work[r][c]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    rank = r

    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            p = pivot_cols[i]
            s = sum((work[i][k] * v[k] for k in range(p + 1, ncols)), Fraction(0))
            v[p] = -s / work[i][p]
        basis.append(primitive_vector(v))
    return rank, tuple(basis)


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    scale = Fraction(1)
    work = []
    for i in range(n):
        row = m.row(i)
        mult = math.lcm(*(x.denominator for x in row))
        scale *= mult
        work.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            sign = -sign
        for i in range(c + 1, n):
            for k in range(c + 1, n):
                num = work[i][k] * work[c][c] - work[i][c] * work[c][k]
                q, rem = divmod(num, prev)
                assert rem == 0
                work[i][k] = q
            work[i][c] = 0
        prev = work[c][c]
    return Fraction(sign * work[n - 1][n - 1]) / scale


def ring_determinant(rows: Sequence[Sequence], zero):
    """Cofactor-expansion determinant for small matrices over an exact ring.

    Entries need +, -, * and truth testing; used for matrices of
    polynomials where elimination would require division.
    """
    size = len(rows)
    if size == 0 or any(len(r) != size for r in rows):
        raise ValueError("square nonempty matrix required")

    def expand(row_ids, col_ids):
        if len(col_ids) == 1:
            return rows[row_ids[0]][col_ids[0]]
        total = zero
        for pos, c in enumerate(col_ids):
            entry = rows[row_ids[0]][c]
            if not entry:
                continue
            sub = expand(row_ids[1:], col_ids[:pos] + col_ids[pos + 1 :])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    return expand(tuple(range(size)), tuple(range(size)))


def pfaffian(rows: Sequence[Sequence]):
    """Pfaffian of an even-size skew-symmetric matrix of ring elements.

    Convention Pf([[0,1],[-1,0]]) = +1; recursive expansion along the
    first row.  Satisfies Pf(m)^2 = det(m).
    """
    size = len(rows)
    if size == 0 or any(len(r) != size for r in rows):
        raise ValueError("square nonempty matrix required")
    if size % 2 != 0:
        raise ValueError("pfaffian requires even size")
    for i in range(size):
        for j in range(i, size):
            if rows[i][j] != -rows[j][i]:
                raise ValueError("matrix is not skew-symmetric")

    def expand(idx):
        if len(idx) == 2:
            return rows[idx[0]][idx[1]]
        first, rest = idx[0], idx[1:]
        total = None
        for pos, j in enumerate(rest):
            entry = rows[first][j]
            term = entry * expand(rest[:pos] + rest[pos + 1 :])
            if pos % 2 == 1:
                term = -term
            total = term if total is None else total + term
        return total

    return expand(tuple(range(size)))


class MultiPoly:
    """Sparse multivariate polynomial over the rationals.

    Terms map exponent tuples to nonzero coefficients.  Graded
    lexicographic order fixes printing, so equal polynomials render
    identically.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        self.nvars = int(nvars)
        clean = {}
        for exp, coeff in (terms or {}).items():
            c = _as_fraction(coeff)
            if not c:
                continue
            e = tuple(int(k) for k in exp)
            if len(e) != self.nvars or any(k < 0 for k in e):
                raise ValueError("bad exponent tuple %r" % (exp,))
            clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exp: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _as_fraction(other)
            return MultiPoly(self.nvars, {e: k * c for e, k in self.terms.items()})
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [_as_fraction(v) for v in values]
        if len(vals) != self.nvars:
            raise ValueError("value count mismatch")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                term *= v**k
            total += term
        return total

    def _sorted_terms(self):
        # graded lex, highest first
        return sorted(self.terms.items(), key=lambda it: (sum(it[0]), it[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, tuple(self._sorted_terms())))

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = ["x%d" % i for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append("%s^%d" % (name, k))
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s*%s" % (str(abs(c)), mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "MultiPoly(%s)" % self.render()


class BinaryForm:
    """Homogeneous form in two variables s, t.

    coeffs[k] is the coefficient of s^(degree-k) * t^k.  The
    identically-zero form carries an explicit flag since it has no
    well-defined degree.
    """

    __slots__ = ("degree", "coeffs", "is_zero")

    def __init__(self, coeffs: Sequence):
        cs = tuple(_as_fraction(x) for x in coeffs)
        if not cs:
            raise ValueError("empty coefficient list")
        if all(c == 0 for c in cs):
            self.degree = 0
            self.coeffs = (Fraction(0),)
            self.is_zero = True
        else:
            self.degree = len(cs) - 1
            self.coeffs = cs
            self.is_zero = False

    @classmethod
    def zero(cls) -> "BinaryForm":
        return cls([0])

    @classmethod
    def constant(cls, c) -> "BinaryForm":
        return cls([c])

    @classmethod
    def linear(cls, a, b) -> "BinaryForm":
        """The form a*s + b*t."""
        return cls([a, b])

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.is_zero, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        if self.is_zero:
            return self
        return BinaryForm([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            c = _as_fraction(other)
            if self.is_zero or c == 0:
                return BinaryForm.zero()
            return BinaryForm([k * c for k in self.coeffs])
        if self.is_zero or other.is_zero:
            return BinaryForm.zero()
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return BinaryForm(out)

    __rmul__ = __mul__

    def evaluate(self, s, t) -> Fraction:
        sv, tv = _as_fraction(s), _as_fraction(t)
        if self.is_zero:
            return Fraction(0)
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if c:
                total += c * sv ** (self.degree - k) * tv**k
        return total

    def t_valuation(self) -> int:
        if self.is_zero:
            raise ValueError("zero form")
        return next(k for k, c in enumerate(self.coeffs) if c)

    def s_valuation(self) -> int:
        if self.is_zero:
            raise ValueError("zero form")
        top = max(k for k, c in enumerate(self.coeffs) if c)
        return self.degree - top

    def monic(self) -> "BinaryForm":
        """Divide by the leading (highest s-power) nonzero coefficient."""
        if self.is_zero:
            return self
        lead = self.coeffs[self.t_valuation()]
        if lead == 1:
            return self
        return BinaryForm([c / lead for c in self.coeffs])

    def _core(self) -> tuple:
        """(t_val, s_val, dense u-polynomial coeffs) with u = t/s.

        The u-polynomial has nonzero constant and leading terms.
        """
        a, b = self.t_valuation(), self.s_valuation()
        return a, b, [self.coeffs[a + j] for j in range(self.degree - a - b + 1)]

    def divide(self, other: "BinaryForm") -> "BinaryForm":
        """Exact division; raises if other does not divide self."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero form")
        if self.is_zero:
            return BinaryForm.zero()
        fa, fb, fcore = self._core()
        ga, gb, gcore = other._core()
        if fa < ga or fb < gb:
            raise ValueError("not divisible")
        q, r = _upoly_divmod(fcore, gcore)
        if any(c != 0 for c in r):
            raise ValueError("not divisible")
        out = [Fraction(0)] * (self.degree - other.degree + 1)
        shift = fa - ga
        for j, c in enumerate(q):
            out[shift + j] = c
        result = BinaryForm(out)
        assert result * other == self
        return result

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            sp, tp = self.degree - k, k
            factors = []
            if sp == 1:
                factors.append("s")
            elif sp > 1:
                factors.append("s^%d" % sp)
            if tp == 1:
                factors.append("t")
            elif tp > 1:
                factors.append("t^%d" % tp)
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s*%s" % (str(abs(c)), mono)
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "BinaryForm(%s)" % self


def _upoly_normalize(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _upoly_divmod(f: Sequence, g: Sequence) -> tuple:
    """Dense little-endian division of rational univariate polynomials."""
    f = _upoly_normalize([_as_fraction(x) for x in f])
    g = _upoly_normalize([_as_fraction(x) for x in g])
    if not g:
        raise ZeroDivisionError
    if len(f) < len(g):
        return [], f
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    rem = list(f)
    for k in range(len(f) - len(g), -1, -1):
        coeff = rem[k + len(g) - 1] / g[-1]
        q[k] = coeff
        if coeff:
            for j, gc in enumerate(g):
                rem[k + j] -= coeff * gc
    return q, _upoly_normalize(rem)


def _upoly_gcd(f: Sequence, g: Sequence) -> list:
    a = _upoly_normalize([_as_fraction(x) for x in f])
    b = _upoly_normalize([_as_fraction(x) for x in g])
    while b:
        _, r = _upoly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def binary_gcd(forms: Sequence[BinaryForm]) -> BinaryForm:
    """Monic gcd of the nonzero forms; zero forms are ignored.

    Powers of t and s are tracked separately so the Euclid step runs on
    dehomogenizations with nonzero constant and leading coefficients.
    """
    forms = list(forms)
    if not forms:
        raise ValueError("empty input")
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return BinaryForm.zero()
    g = nonzero[0]
    for f in nonzero[1:]:
        g = _pair_gcd(g, f)
    return g.monic()


def _pair_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    fa, fb, fcore = f._core()
    ga, gb, gcore = g._core()
    core = _upoly_gcd(fcore, gcore)
    a, b = min(fa, ga), min(fb, gb)
    if not core:
        core = [Fraction(1)]
    out = [Fraction(0)] * (a + b + len(core))
    for j, c in enumerate(core):
        out[a + j] = c
    return BinaryForm(out)


def binary_resultant(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Sylvester resultant at the stated degrees.

    Vanishes exactly when f and g share a projective root, including
    the point at infinity when both leading coefficients drop.
    """
    if f.is_zero or g.is_zero:
        return Fraction(0)
    df, dg = f.degree, g.degree
    if df == 0:
        return f.coeffs[0] ** dg
    if dg == 0:
        return g.coeffs[0] ** df
    size = df + dg
    rows = []
    for i in range(dg):
        row = [Fraction(0)] * size
        for k, c in enumerate(f.coeffs):
            row[i + k] = c
        rows.append(row)
    for i in range(df):
        row = [Fraction(0)] * size
        for k, c in enumerate(g.coeffs):
            row[i + k] = c
        rows.append(row)
    return determinant(RationalMatrix(rows))


def rational_roots(form: BinaryForm) -> list:
    """Rational projective roots (s:t) of a nonzero binary form.

    Canonical primitive integer pairs; multiplicities are not repeated.
    """
    if form.is_zero:
        raise ValueError("every point is a root of the zero form")
    if form.degree == 0:
        return []
    roots = []
    a, b, core = form._core()
    if a > 0:
        roots.append((1, 0))
    if b > 0:
        roots.append((0, 1))
    mult = math.lcm(*(c.denominator for c in core))
    ints = [int(c * mult) for c in core]
    if len(ints) > 1:
        const, lead = ints[0], ints[-1]
        seen = set()
        for p in _divisors(abs(const)):
            for q in _divisors(abs(lead)):
                for num in (p, -p):
                    u = Fraction(num, q)
                    if u in seen:
                        continue
                    seen.add(u)
                    if sum(c * u**k for k, c in enumerate(core)) == 0:
                        roots.append((u.denominator, u.numerator))
    return roots


def _divisors(n: int) -> list:
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def seeded_random_matrix(
    seed: int, rows: int, cols: int, bound: int, skew: bool = False
) -> RationalMatrix:
    """Integer matrix with entries uniform in [-bound, bound].

    Draws come from a seeded Mersenne Twister (random.Random), so a
    fixed seed reproduces the same matrix.  Skew output has zero
    diagonal and satisfies m^T = -m.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if rows < 1 or cols < 1:
        raise ValueError("matrix must be nonempty")
    if skew and rows != cols:
        raise ValueError("skew-symmetric matrix must be square")
    rng = random.Random(seed)
    if skew:
        data = [[0] * cols for _ in range(rows)]
        for i in range(rows):
            for j in range(i + 1, cols):
                v = rng.randint(-bound, bound)
                data[i][j] = v
                data[j][i] = -v
        return RationalMatrix(data)
    return RationalMatrix(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    )
