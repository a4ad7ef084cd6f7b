"""Exact scalar layer: parsing, square roots, quadratics, projective ratios."""

import random
from fractions import Fraction

import pytest

from quadriline import (
    FieldError,
    ParseError,
    PreconditionError,
    PrimeField,
    QQ,
    Ratio,
    ratio_format,
    ratio_parse,
    scalar_parse,
    solve_quadratic,
)


class TestParsing:
    def test_rational_reduces_to_lowest_terms(self):
        assert scalar_parse("6/4", QQ) == Fraction(3, 2)

    def test_zero(self):
        assert scalar_parse("0", QQ) == 0

    def test_prime_field_residue(self):
        f11 = PrimeField(11)
        assert scalar_parse("14", f11) == f11.from_int(3)

    def test_negative_literals(self):
        assert scalar_parse("-7/2", QQ) == Fraction(-7, 2)
        assert scalar_parse("-1", PrimeField(5)).value == 4

    def test_zero_denominator_rejected(self):
        with pytest.raises(ParseError):
            scalar_parse("3/0", QQ)

    def test_malformed_rejected(self):
        for bad in ("1.5", "x", "1/2/3", ""):
            with pytest.raises(ParseError):
                scalar_parse(bad, QQ)
        with pytest.raises(ParseError):
            scalar_parse("1/2", PrimeField(7))

    def test_bad_moduli_rejected(self):
        with pytest.raises(FieldError):
            PrimeField(9)
        with pytest.raises(FieldError):
            PrimeField(2)

    def test_rational_roundtrip(self):
        rng = random.Random(7)
        for _ in range(200):
            x = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
            assert QQ.parse(QQ.format(x)) == x

    def test_prime_roundtrip(self):
        f13 = PrimeField(13)
        for v in range(13):
            x = f13.from_int(v)
            assert f13.parse(f13.format(x)) == x


class TestFieldArithmetic:
    def test_fp_operators(self):
        f7 = PrimeField(7)
        a, b = f7.from_int(3), f7.from_int(5)
        assert a + b == f7.from_int(1)
        assert a - b == f7.from_int(5)
        assert a * b == f7.from_int(1)
        assert a / b == f7.from_int(2)  # 3 * 5^{-1} = 3 * 3 = 2
        assert -a == f7.from_int(4)
        assert a ** 2 == f7.from_int(2)
        assert 2 * a == f7.from_int(6)
        assert 1 - a == f7.from_int(5)
        assert not f7.zero()
        assert f7.one()

    def test_fp_division_by_zero(self):
        f5 = PrimeField(5)
        with pytest.raises(ZeroDivisionError):
            f5.one() / f5.zero()

    def test_mixed_moduli_rejected(self):
        with pytest.raises(FieldError):
            PrimeField(5).one() + PrimeField(7).one()

    def test_is_square_rational(self):
        assert QQ.is_square(Fraction(9, 4))
        assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert not QQ.is_square(Fraction(-1))
        assert not QQ.is_square(Fraction(52))
        assert QQ.sqrt(Fraction(2)) is None

    def test_is_square_fp_matches_brute_force(self):
        for p in (3, 5, 7, 11, 13):
            field = PrimeField(p)
            squares = {(v * v) % p for v in range(p)}
            for x in field.elements():
                assert field.is_square(x) == (x.value in squares)
                r = field.sqrt(x)
                if x.value in squares:
                    assert r is not None and r * r == x
                else:
                    assert r is None


class TestSolveQuadratic:
    def test_perfect_square(self):
        roots = solve_quadratic(QQ, Fraction(1), Fraction(0), Fraction(-4))
        assert {r.value for r in roots} == {2, -2}
        assert all(r.multiplicity == 1 for r in roots)

    def test_negative_discriminant(self):
        assert solve_quadratic(QQ, Fraction(1), Fraction(0), Fraction(2)) == []

    def test_cfg1_at_infinity_quadratic_has_no_rational_roots(self):
        # Discriminant 4^2 - 4*(-3)*3 = 52 is not a rational square.
        assert not QQ.is_square(Fraction(52))
        assert solve_quadratic(QQ, Fraction(-3), Fraction(4), Fraction(3)) == []

    def test_double_root_flagged(self):
        roots = solve_quadratic(QQ, Fraction(1), Fraction(-2), Fraction(1))
        assert len(roots) == 1
        assert roots[0].value == 1 and roots[0].multiplicity == 2

    def test_linear_case(self):
        roots = solve_quadratic(QQ, Fraction(0), Fraction(2), Fraction(-5))
        assert [r.value for r in roots] == [Fraction(5, 2)]

    def test_all_zero_rejected(self):
        with pytest.raises(PreconditionError):
            solve_quadratic(QQ, Fraction(0), Fraction(0), Fraction(0))

    def test_roots_satisfy_equation_exactly(self):
        rng = random.Random(11)
        for _ in range(100):
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            b = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            if not a and not b and not c:
                continue
            for root in solve_quadratic(QQ, a, b, c):
                x = root.value
                assert a * x * x + b * x + c == 0

    def test_fp_agrees_with_brute_force(self):
        rng = random.Random(13)
        for p in (5, 7, 11, 13):
            field = PrimeField(p)
            for _ in range(60):
                a, b, c = (field.from_int(rng.randrange(p)) for _ in range(3))
                if not a and not b and not c:
                    continue
                expected = {
                    v for v in range(p) if (a.value * v * v + b.value * v + c.value) % p == 0
                }
                got = {r.value.value for r in solve_quadratic(field, a, b, c)}
                assert got == expected


class TestRatio:
    def test_canonical_affine(self):
        r = Ratio.of(Fraction(6), Fraction(4))
        assert (r.num, r.den) == (Fraction(3, 2), Fraction(1))

    def test_canonical_infinite(self):
        r = Ratio.of(Fraction(-5), Fraction(0))
        assert (r.num, r.den) == (1, 0)
        assert r.is_infinite

    def test_cross_multiplication_equality(self):
        assert Ratio.of(Fraction(2), Fraction(4)) == Ratio.of(Fraction(-1), Fraction(-2))
        assert Ratio.of(Fraction(1), Fraction(0)) == Ratio.of(Fraction(7), Fraction(0))

    def test_zero_zero_rejected(self):
        with pytest.raises(ParseError):
            Ratio.of(Fraction(0), Fraction(0))

    def test_orthogonal(self):
        r = Ratio.of(Fraction(3), Fraction(2))
        assert r.orthogonal() == Ratio.of(Fraction(-2), Fraction(3))
        assert Ratio.of(Fraction(1), Fraction(0)).orthogonal() == Ratio.of(
            Fraction(0), Fraction(1)
        )

    def test_parse_and_format(self):
        assert ratio_parse("1/0", QQ).is_infinite
        assert ratio_parse("-1/2", QQ) == Ratio.of(Fraction(-1), Fraction(2))
        assert ratio_parse("3/2", QQ) == Ratio.of(Fraction(3), Fraction(2))
        assert ratio_format(ratio_parse("3/2", QQ), QQ) == "3/2"
        assert ratio_format(ratio_parse("1/0", QQ), QQ) == "1/0"
        f11 = PrimeField(11)
        assert ratio_parse("7/2", f11) == Ratio.of(f11.from_int(7), f11.from_int(2))
        with pytest.raises(ParseError):
            ratio_parse("0/0", QQ)
