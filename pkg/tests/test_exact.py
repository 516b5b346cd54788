"""Unit tests for exact Gaussian-rational arithmetic."""
from fractions import Fraction

import pytest

from src.askey.errors import ExactDivisionByZero, NotSquareError
from src.askey.exact import (
    I,
    ONE,
    ZERO,
    ExactScalar,
    as_scalar,
    det,
    pythagorean_unit,
    q_binomial,
    qpochhammer,
    rising_factorial,
    scalar_arith,
)
from tests.conftest import random_scalar


class TestParse:
    """Tests for scalar literals."""

    def test_rational(self):
        """Test that a plain fraction parses to a real scalar."""
        assert ExactScalar.parse("-1/3") == ExactScalar(Fraction(-1, 3))

    def test_gaussian_rational(self):
        """Test that 're+imi' literals keep both parts."""
        value = ExactScalar.parse("1/2+1/3i")
        assert value.re == Fraction(1, 2)
        assert value.im == Fraction(1, 3)

    def test_bare_imaginary_unit(self):
        """Test that 'i' and '-i' parse."""
        assert ExactScalar.parse("i") == I
        assert ExactScalar.parse("1/2-i") == ExactScalar(Fraction(1, 2), -1)

    def test_invalid_literal(self):
        """Test that garbage is rejected."""
        with pytest.raises(ValueError, match="invalid"):
            ExactScalar.parse("1/2+xi")

    def test_floats_rejected(self):
        """Test that floats never enter exact arithmetic."""
        with pytest.raises(TypeError, match="floats"):
            ExactScalar(0.5)

    def test_str_parses_back(self):
        """Test that the report rendering is a valid literal."""
        value = ExactScalar(Fraction(-3, 7), Fraction(2, 5))
        assert ExactScalar.parse(str(value)) == value


class TestArithmetic:
    """Tests for field operations in Q(i)."""

    def test_i_squared(self):
        """Test that i*i = -1."""
        assert I * I == -1

    def test_division_inverts_multiplication(self, rng):
        """Test (a*b)/b == a on random Gaussian rationals."""
        for _ in range(20):
            a, b = random_scalar(rng), random_scalar(rng)
            if b.is_zero():
                continue
            assert (a * b) / b == a

    def test_division_by_zero(self):
        """Test that dividing by zero raises the exact error."""
        with pytest.raises(ExactDivisionByZero):
            ONE / ExactScalar(0)

    def test_division_by_zero_is_zero_division(self):
        """Test that ExactDivisionByZero is also a ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            scalar_arith(ONE, 0, "div")

    def test_unknown_operation(self):
        """Test that scalar_arith rejects unknown operations."""
        with pytest.raises(ValueError, match="Unsupported"):
            scalar_arith(ONE, ONE, "pow")

    def test_negative_power(self):
        """Test that negative powers invert."""
        assert ExactScalar(2) ** -2 == ExactScalar(Fraction(1, 4))

    def test_conjugate_product_is_modulus(self):
        """Test z * conj(z) = |z|^2."""
        z = as_scalar("3/4-2/3i")
        assert z * z.conj() == z.abs2()


class TestFieldAxioms:
    """Seeded property checks of the field laws on random Gaussian rationals."""

    CASES = 1000

    def _triples(self, rng):
        for _ in range(self.CASES):
            yield random_scalar(rng), random_scalar(rng), random_scalar(rng)

    def test_associativity(self, rng):
        """Test (a + b) + c == a + (b + c) and (a b) c == a (b c)."""
        for a, b, c in self._triples(rng):
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)

    def test_commutativity(self, rng):
        """Test a + b == b + a and a b == b a."""
        for a, b, _ in self._triples(rng):
            assert a + b == b + a
            assert a * b == b * a

    def test_distributivity(self, rng):
        """Test a (b + c) == a b + a c."""
        for a, b, c in self._triples(rng):
            assert a * (b + c) == a * b + a * c

    def test_identities_and_inverses(self, rng):
        """Test a + 0 == a, a 1 == a, a - a == 0 and a (1/a) == 1."""
        for a, _, _ in self._triples(rng):
            assert a + ZERO == a
            assert a * ONE == a
            assert (a - a).is_zero()
            if not a.is_zero():
                assert a * (ONE / a) == ONE

    def test_conjugation_is_multiplicative(self, rng):
        """Test conj(a b) == conj(a) conj(b)."""
        for a, b, _ in self._triples(rng):
            assert (a * b).conj() == a.conj() * b.conj()


class TestFactorials:
    """Tests for Pochhammer and q-Pochhammer symbols."""

    def test_rising_factorial(self):
        """Test (1/2)_3 = 1/2 * 3/2 * 5/2."""
        assert rising_factorial(Fraction(1, 2), 3) == ExactScalar(Fraction(15, 8))

    def test_rising_factorial_empty(self):
        """Test (a)_0 = 1."""
        assert rising_factorial(7, 0) == ONE

    def test_qpochhammer(self):
        """Test (1/2; 1/2)_2 = (1 - 1/2)(1 - 1/4)."""
        assert qpochhammer(Fraction(1, 2), Fraction(1, 2), 2) == ExactScalar(Fraction(3, 8))

    def test_qpochhammer_multi_argument(self):
        """Test that a list of bases multiplies the single products."""
        q = Fraction(1, 3)
        expected = qpochhammer(Fraction(1, 2), q, 3) * qpochhammer(Fraction(1, 5), q, 3)
        assert qpochhammer([Fraction(1, 2), Fraction(1, 5)], q, 3) == expected

    def test_q_binomial(self):
        """Test [4 choose 2]_q = (1 + q^2)(1 + q + q^2) at q = 1/2."""
        q = Fraction(1, 2)
        assert q_binomial(4, 2, q) == ExactScalar((1 + q * q) * (1 + q + q * q))


class TestPythagoreanUnit:
    """Tests for exact unit-modulus phases."""

    def test_modulus_one(self):
        """Test that (m, n) gives |w| = 1."""
        assert pythagorean_unit(2, 1).abs2() == 1

    def test_values(self):
        """Test (2, 1) -> 3/5 + 4/5 i."""
        assert pythagorean_unit(2, 1) == ExactScalar(Fraction(3, 5), Fraction(4, 5))

    def test_zero_pair(self):
        """Test that (0, 0) is rejected."""
        with pytest.raises(ValueError, match="must not be"):
            pythagorean_unit(0, 0)


class TestDeterminant:
    """Tests for the Bareiss determinant."""

    def test_three_by_three(self):
        """Test a 3x3 determinant with rational entries."""
        matrix = [[2, 0, 1], [1, 3, 2], [1, 1, 2]]
        assert det(matrix) == 6

    def test_zero_pivot(self):
        """Test that a zero leading entry is handled by pivoting."""
        assert det([[0, 1], [1, 0]]) == -1
        assert det([[0, 1, 0], [1, 0, 0], [0, 0, 1]]) == -1

    def test_gaussian_entries(self):
        """Test a 2x2 determinant over Q(i)."""
        assert det([[I, 1], [1, I]]) == -2

    def test_not_square(self):
        """Test that ragged matrices are rejected."""
        with pytest.raises(NotSquareError):
            det([[1, 2], [3]])

    def test_small_examples(self):
        """Test the identity, [[1, 2], [3, 4]] and a 1x1 matrix."""
        assert det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
        assert det([[1, 2], [3, 4]]) == -2
        assert det([[as_scalar("2/3+i")]]) == as_scalar("2/3+i")

    def test_empty_matrix(self):
        """Test that a 0x0 matrix is rejected."""
        with pytest.raises(NotSquareError):
            det([])


def _random_matrix(rng, size):
    return [[random_scalar(rng) for _ in range(size)] for _ in range(size)]


def _matmul(a, b):
    size = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(size)), ZERO) for j in range(size)] for i in range(size)]


class TestDeterminantProperties:
    """Seeded property checks of det over Q(i)."""

    CASES = 200

    @pytest.mark.parametrize("size", [2, 3, 4])
    def test_row_swap_negates(self, rng, size):
        """Test that exchanging two rows flips the sign."""
        for _ in range(self.CASES):
            m = _random_matrix(rng, size)
            swapped = [m[1], m[0]] + m[2:]
            assert det(swapped) == -det(m)

    @pytest.mark.parametrize("size", [2, 3, 4])
    def test_equal_rows_vanish(self, rng, size):
        """Test that a repeated row gives zero."""
        for _ in range(self.CASES):
            m = _random_matrix(rng, size)
            m[-1] = list(m[0])
            assert det(m).is_zero()

    @pytest.mark.parametrize("size", [2, 3, 4])
    def test_linear_in_first_row(self, rng, size):
        """Test det with row u a + v b equals u det(a) + v det(b)."""
        for _ in range(self.CASES):
            m = _random_matrix(rng, size)
            other = [random_scalar(rng) for _ in range(size)]
            u, v = random_scalar(rng), random_scalar(rng)
            combined = [[u * x + v * y for x, y in zip(m[0], other)]] + m[1:]
            assert det(combined) == u * det(m) + v * det([other] + m[1:])

    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_product_rule(self, rng, size):
        """Test det(A B) == det(A) det(B)."""
        for _ in range(self.CASES):
            a, b = _random_matrix(rng, size), _random_matrix(rng, size)
            assert det(_matmul(a, b)) == det(a) * det(b)
