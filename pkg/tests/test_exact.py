"""Tests for the exact-arithmetic substrate.

Oracles kept independent of the library paths: determinants are
re-done by permutation expansion, gcd fixtures are built as explicit
products of linear factors.
"""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from quadpoint.exact import (
    BinaryForm,
    MultiPoly,
    RationalMatrix,
    binary_gcd,
    binary_resultant,
    determinant,
    pfaffian,
    primitive_vector,
    rank_and_kernel,
    rational_roots,
    ring_determinant,
    seeded_random_matrix,
)


def perm_det(rows, zero):
    """Permutation-expansion determinant, the brute-force oracle."""
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        prod = rows[0][perm[0]]
        for i in range(1, n):
            prod = prod * rows[i][perm[i]]
        total = total + prod if inversions % 2 == 0 else total - prod
    return total


def form_from_roots(roots):
    """Product of the linear forms t0*s - s0*t over the given roots."""
    out = BinaryForm.constant(1)
    for s0, t0 in roots:
        out = out * BinaryForm([t0, -s0])
    return out


def random_rational(rng, bound=9):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 5))


# ----- rank and kernel -----


def test_rank_identity():
    rank, basis = rank_and_kernel(RationalMatrix.identity(2))
    assert rank == 2
    assert basis == ()


def test_rank_single_row():
    rank, basis = rank_and_kernel(RationalMatrix([[1, 1, 1]]))
    assert rank == 1
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0


def test_kernel_of_coordinate_rows():
    m = RationalMatrix([[1, 0, 0, 0], [0, 0, 0, 1]])
    rank, basis = rank_and_kernel(m)
    assert rank == 2
    assert sorted(basis) == [(0, 0, 1, 0), (0, 1, 0, 0)]


def test_rank_equals_rank_of_transpose():
    rng = random.Random(11)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = RationalMatrix(
            [[random_rational(rng) for _ in range(cols)] for _ in range(rows)]
        )
        assert rank_and_kernel(m)[0] == rank_and_kernel(m.transpose())[0]


def test_rank_nullity_and_annihilation():
    rng = random.Random(23)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 6)
        # low-rank products exercise nontrivial kernels
        inner = rng.randint(1, 3)
        a = [[rng.randint(-4, 4) for _ in range(inner)] for _ in range(rows)]
        b = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(inner)]
        m = RationalMatrix(
            [
                [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
                for i in range(rows)
            ]
        )
        rank, basis = rank_and_kernel(m)
        assert rank + len(basis) == cols
        for v in basis:
            assert all(x == 0 for x in m.mat_vec(v))
        if basis:
            span = RationalMatrix(basis)
            assert rank_and_kernel(span)[0] == len(basis)


def test_determinant_matches_permutation_oracle():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = [[random_rational(rng) for _ in range(n)] for _ in range(n)]
        assert determinant(RationalMatrix(rows)) == perm_det(rows, Fraction(0))


def test_ring_determinant_matches_permutation_oracle():
    rng = random.Random(8)
    for _ in range(10):
        n = rng.randint(1, 4)
        rows = [
            [
                MultiPoly(
                    2,
                    {
                        (1, 0): rng.randint(-3, 3),
                        (0, 1): rng.randint(-3, 3),
                    },
                )
                for _ in range(n)
            ]
            for _ in range(n)
        ]
        zero = MultiPoly.zero(2)
        assert ring_determinant(rows, zero) == perm_det(rows, zero)


# ----- pfaffian -----


def test_pfaffian_2x2_variable():
    a = MultiPoly.variable(1, 0)
    assert pfaffian([[MultiPoly.zero(1), a], [-a, MultiPoly.zero(1)]]) == a


def test_pfaffian_4x4_generic():
    # six independent variables above the diagonal
    nv = 6
    v = [MultiPoly.variable(nv, i) for i in range(nv)]
    z = MultiPoly.zero(nv)
    a01, a02, a03, a12, a13, a23 = v
    m = [
        [z, a01, a02, a03],
        [-a01, z, a12, a13],
        [-a02, -a12, z, a23],
        [-a03, -a13, -a23, z],
    ]
    pf = pfaffian(m)
    assert pf == a01 * a23 - a02 * a13 + a03 * a12
    assert pf * pf == perm_det(m, z)


def test_pfaffian_squared_is_determinant_integers():
    for size in (2, 4, 6):
        for seed in range(3):
            m = seeded_random_matrix(100 * size + seed, size, size, 9, skew=True)
            rows = [list(m.row(i)) for i in range(size)]
            assert pfaffian(rows) ** 2 == perm_det(rows, Fraction(0))


def test_pfaffian_squared_is_determinant_polynomials():
    rng = random.Random(17)
    for size in (2, 4, 6):
        rows = [[MultiPoly.zero(2) for _ in range(size)] for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                p = MultiPoly(
                    2, {(1, 0): rng.randint(-3, 3), (0, 1): rng.randint(-3, 3)}
                )
                rows[i][j] = p
                rows[j][i] = -p
        assert pfaffian(rows) * pfaffian(rows) == perm_det(rows, MultiPoly.zero(2))


def test_pfaffian_zero_matrix():
    z = MultiPoly.zero(1)
    assert pfaffian([[z, z], [z, z]]).is_zero


def test_pfaffian_rejects_odd_size():
    with pytest.raises(ValueError):
        pfaffian([[Fraction(0)]])


def test_pfaffian_rejects_non_skew():
    with pytest.raises(ValueError):
        pfaffian([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])


def test_odd_skew_determinant_is_zero():
    for size in (3, 5, 7):
        for seed in range(3):
            m = seeded_random_matrix(31 * size + seed, size, size, 9, skew=True)
            assert determinant(m) == 0


# ----- binary forms -----


def test_binary_gcd_ignores_zero_forms():
    st = BinaryForm([0, 1, 0])
    g = binary_gcd([st, BinaryForm.zero(), BinaryForm.zero()])
    assert g == st


def test_binary_gcd_all_zero():
    assert binary_gcd([BinaryForm.zero(), BinaryForm.zero()]).is_zero


def test_binary_gcd_empty_input_rejected():
    with pytest.raises(ValueError):
        binary_gcd([])


def test_binary_gcd_shared_factor():
    f1 = form_from_roots([(1, 1), (1, 1), (0, 1)])  # (s-t)^2 * s
    f2 = form_from_roots([(1, 1), (0, 1), (0, 1)])  # (s-t) * s^2
    g = binary_gcd([f1, f2])
    assert g == form_from_roots([(1, 1), (0, 1)]).monic()
    assert g.degree == 2


def test_binary_gcd_coprime_forms():
    g = binary_gcd([BinaryForm([1, 0, 0]), BinaryForm([0, 0, 1])])
    assert g.degree == 0
    assert g == BinaryForm.constant(1)


def test_binary_gcd_scaling_invariance():
    rng = random.Random(41)
    for _ in range(20):
        shared = [(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rng.randint(0, 2))]
        f1 = form_from_roots(shared + [(rng.randint(-3, 3), rng.randint(1, 3))])
        f2 = form_from_roots(shared + [(rng.randint(4, 7), rng.randint(1, 3))])
        base = binary_gcd([f1, f2])
        c1 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        c2 = Fraction(-rng.randint(1, 9), rng.randint(1, 9))
        scaled = binary_gcd([f1 * c1, f2 * c2])
        assert scaled.degree == base.degree
        assert scaled == base  # monic output is scale-free entirely


def test_binary_gcd_divides_inputs_and_quotients_coprime():
    rng = random.Random(59)
    for _ in range(20):
        shared = [(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(rng.randint(1, 2))]
        forms = []
        for k in range(3):
            extra = [(5 + 3 * k, 1)]  # distinct extra roots keep quotients coprime
            forms.append(form_from_roots(shared + extra))
        g = binary_gcd(forms)
        quots = [f.divide(g) for f in forms]
        assert binary_gcd(quots).degree == 0
        assert binary_resultant(quots[0], quots[1]) != 0


def test_binary_resultant_detects_common_root():
    f = form_from_roots([(2, 1), (1, -1)])
    g = form_from_roots([(2, 1), (1, 1)])
    h = form_from_roots([(3, 1), (1, 2)])
    assert binary_resultant(f, g) == 0
    assert binary_resultant(g, h) != 0


def test_binary_resultant_common_root_at_infinity():
    # both divisible by t: shared root (1:0)
    f = BinaryForm([0, 1, 2])
    g = BinaryForm([0, 3, 1])
    assert binary_resultant(f, g) == 0


def test_rational_roots():
    assert sorted(rational_roots(BinaryForm([0, 1, 0]))) == [(0, 1), (1, 0)]
    roots = rational_roots(form_from_roots([(2, 1), (1, -1)]))
    assert sorted(roots) == [(1, -1), (2, 1)]
    assert rational_roots(BinaryForm([1, 0, 1])) == []  # s^2 + t^2
    with pytest.raises(ValueError):
        rational_roots(BinaryForm.zero())


def test_binary_form_add_requires_matching_degree():
    with pytest.raises(ValueError):
        BinaryForm([1, 0]) + BinaryForm([1, 0, 0])


def test_binary_form_exact_division_only():
    f = form_from_roots([(1, 1), (2, 1)])
    with pytest.raises(ValueError):
        f.divide(form_from_roots([(3, 1)]))
    assert f.divide(form_from_roots([(2, 1)])) == form_from_roots([(1, 1)])


def test_binary_form_reparametrized_evaluation():
    f = form_from_roots([(1, 2), (3, 4)])
    assert f.evaluate(1, 2) == 0
    assert f.evaluate(3, 4) == 0
    assert f.evaluate(1, 0) != 0


# ----- multivariate polynomials -----


def test_multipoly_arithmetic_and_evaluation():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.evaluate([3, 2]) == 5
    assert (p - p).is_zero
    assert p.is_homogeneous(2)
    assert not (p + x).is_homogeneous()


def test_multipoly_render_is_graded_lex():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = y + x * x * 2 - x * y
    assert str(p) == "2*x0^2 - x0*x1 + x1"
    assert p.render(["s", "t"]) == "2*s^2 - s*t + t"


def test_multipoly_rejects_mixed_variable_counts():
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) + MultiPoly.variable(3, 0)


# ----- random matrices and vectors -----


def test_seeded_random_matrix_is_deterministic():
    a = seeded_random_matrix(1, 3, 4, 9)
    b = seeded_random_matrix(1, 3, 4, 9)
    assert a == b
    assert all(abs(x) <= 9 and x.denominator == 1 for x in a.entries)


def test_seeded_random_matrix_skew_shape():
    m = seeded_random_matrix(1, 2, 2, 5, skew=True)
    assert m.is_skew_symmetric()
    assert m.entry(0, 0) == 0
    assert abs(m.entry(0, 1)) <= 5
    for seed in (1, 2):
        assert seeded_random_matrix(seed, 6, 6, 9, skew=True).is_skew_symmetric()


def test_seeded_random_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        seeded_random_matrix(1, 2, 3, 9, skew=True)
    with pytest.raises(ValueError):
        seeded_random_matrix(1, 2, 2, 0)


def test_primitive_vector_canonical_form():
    assert primitive_vector([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert primitive_vector([0, -2, 4]) == (0, 1, -2)
    with pytest.raises(ValueError):
        primitive_vector([0, 0])
