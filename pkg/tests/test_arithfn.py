"""Pointwise functions against brute-force search oracles."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqlab import arithfn as af
from seqlab.numkernel import (
    double_factorial,
    euler_totient,
    factorial,
    factorize,
    is_perfect_power,
    is_prime,
    kempner,
    reduced_residues,
)


def double_factorials_up_to_index(j_max):
    values = []
    for j in range(1, j_max + 1):
        values.append(double_factorial(j))
    return values


class TestMpowerComplement:
    def test_printed_values(self):
        assert af.mpower_complement(2, 3) == 4
        assert af.mpower_complement(12, 3) == 18
        assert af.mpower_complement(8, 3) == 1

    def test_brute_force_small(self):
        for m in (2, 3, 4):
            for n in range(1, 501):
                k = 1
                while not is_perfect_power(n * k, m):
                    k += 1
                assert af.mpower_complement(n, m) == k, (n, m)

    def test_result_is_mpower_free(self):
        for n in range(1, 200):
            k = af.mpower_complement(n, 3)
            assert all(e < 3 for _, e in factorize(k)) or k == 1

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            af.mpower_complement(0, 2)


class TestFactorialQuotient:
    def test_printed_values(self):
        assert af.factorial_quotient(7) == 720
        assert af.factorial_quotient(10) == 12
        assert af.factorial_quotient(1) == 1

    def test_brute_force_small(self):
        factorials = [factorial(j) for j in range(1, 30)]
        for n in range(1, 501):
            target = next(f for f in factorials if f % n == 0)
            assert af.factorial_quotient(n) == target // n


class TestDoubleFactorialComplement:
    def test_printed_values(self):
        assert af.double_factorial_complement(5) == 3
        assert af.double_factorial_complement(6) == 8
        assert af.double_factorial_complement(8) == 1

    def test_value_at_10_is_384(self):
        # 10 * 384 = 3840 = 10!!; the printed listing's 192 is a misprint
        # (1920 falls strictly between 9!! = 945 and 10!! = 3840).
        assert 10 * 192 == 1920
        assert double_factorial(9) < 1920 < double_factorial(10)
        assert af.double_factorial_complement(10) == 384

    def test_brute_force_small(self):
        dfs = double_factorials_up_to_index(1100)
        for n in range(1, 501):
            target = next(v for v in dfs if v % n == 0)
            assert af.double_factorial_complement(n) == target // n, n


class TestPrimeComplement:
    def test_printed_values(self):
        assert af.prime_complement(1) == 1
        assert af.prime_complement(8) == 3
        assert af.prime_complement(7) == 0

    def test_brute_force_small(self):
        for n in range(1, 501):
            k = 0
            while not is_prime(n + k):
                k += 1
            assert af.prime_complement(n) == k


class TestDoubleFactorialNumber:
    def test_printed_values(self):
        assert af.double_factorial_number(8) == 4
        assert af.double_factorial_number(12) == 6
        assert af.double_factorial_number(1) == 1

    def test_value_at_50_is_20(self):
        # even chain needs 5*5: first reached by 20!! (10 and 20); the odd
        # chain can never divide an even n.  The printed 10 is a misprint.
        assert double_factorial(10) % 50 != 0
        assert double_factorial(20) % 50 == 0
        assert af.double_factorial_number(50) == 20

    def test_brute_force_small(self):
        dfs = double_factorials_up_to_index(1100)
        for n in range(1, 501):
            k = next(j for j, v in enumerate(dfs, start=1) if v % n == 0)
            assert af.double_factorial_number(n) == k


class TestPrimePart:
    def test_printed_values(self):
        assert af.prime_part(4, "inferior") == 3
        assert af.prime_part(8, "superior") == 11
        assert af.prime_part(13, "inferior") == 13
        assert af.prime_part(13, "superior") == 13

    def test_bracketing(self):
        for n in range(2, 500):
            lo = af.prime_part(n, "inferior")
            hi = af.prime_part(n, "superior")
            assert lo <= n <= hi
            assert (lo == n == hi) == is_prime(n)

    def test_superior_at_zero(self):
        assert af.prime_part(0, "superior") == 2

    def test_inferior_rejects_below_two(self):
        with pytest.raises(ValueError):
            af.prime_part(1, "inferior")

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            af.prime_part(5, "nearest")


class TestPrimitiveOfPower:
    def test_printed_values(self):
        assert af.primitive_of_power(2, 4) == 6
        assert af.primitive_of_power(3, 4) == 9
        assert af.primitive_of_power(5, 1) == 5

    def test_brute_force(self):
        for p in (2, 3, 5):
            valuation = 0
            k = 0
            expected = {}
            while len(expected) < 120:
                k += 1
                v = k
                while v % p == 0:
                    valuation += 1
                    v //= p
                for n in range(1, valuation + 1):
                    expected.setdefault(n, k)
            for n in range(1, 121):
                assert af.primitive_of_power(p, n) == expected[n], (p, n)

    def test_output_is_multiple_of_p(self):
        for p in (2, 3, 7):
            for n in range(1, 200):
                assert af.primitive_of_power(p, n) % p == 0

    def test_multiplicity_matches_valuation_gain(self):
        # each multiple of p appears as often as the p-valuation it adds
        for p in (2, 3):
            seq = [af.primitive_of_power(p, n) for n in range(1, 400)]
            for v in range(p, 61, p):
                gain = 0
                q = v
                while q % p == 0:
                    gain += 1
                    q //= p
                assert seq.count(v) == gain, (p, v)

    def test_nondecreasing(self):
        seq = [af.primitive_of_power(2, n) for n in range(1, 300)]
        assert all(a <= b for a, b in zip(seq, seq[1:]))

    def test_rejects_composite_p(self):
        with pytest.raises(ValueError):
            af.primitive_of_power(4, 2)

    def test_kempner_assembly(self):
        # kernel route (incremental factorial residues) vs prime-power route
        for n in range(1, 2001):
            parts = [af.primitive_of_power(p, e) for p, e in factorize(n)]
            assert kempner(n) == (max(parts) if parts else 1)


class TestMpowerResidue:
    def test_printed_values(self):
        assert af.mpower_residue(8, 2) == 2
        assert af.mpower_residue(8, 3) == 4
        assert af.mpower_residue(1, 5) == 1

    def test_downward_scan_oracle(self):
        def mfree(v, m):
            return all(e < m for _, e in factorize(v)) if v > 1 else True

        for m in (2, 3, 4):
            for n in range(1, 501):
                d = n
                while not (n % d == 0 and mfree(d, m)):
                    d -= 1
                assert af.mpower_residue(n, m) == d, (n, m)

    def test_exponent_clipping(self):
        for n in range(2, 400):
            for m in (2, 3):
                residue = af.mpower_residue(n, m)
                exps = dict(factorize(n))
                for p, e in factorize(residue):
                    assert e == min(m - 1, exps[p])
                assert n % residue == 0

    def test_square_multiples_are_reduced(self):
        # any multiple of p*p loses at least that square
        for p in (2, 3, 5, 7, 11, 13):
            for j in range(1, 251):
                n = p * p * j
                assert af.mpower_residue(n, 2) < n


class TestExponentOfPower:
    def test_printed_values(self):
        assert af.exponent_of_power(8, 2) == 3
        assert af.exponent_of_power(9, 3) == 2
        assert af.exponent_of_power(7, 10) == 0

    def test_characterization(self):
        for p in (2, 3, 10):
            for n in range(1, 501):
                k = af.exponent_of_power(n, p)
                assert n % p**k == 0
                assert n % p ** (k + 1) != 0

    def test_composite_base_allowed(self):
        assert af.exponent_of_power(100, 10) == 2


class TestResidualFunction:
    PRINTED = [1, 2, 3, 24, 5, 720, 105, 2240, 189, 3628800, 385, 479001600,
               19305, 896896, 2027025, 20922789888000, 85085,
               6402373705728000, 8729721, 47297536000, 1249937325]

    def test_printed_values(self):
        assert af.residual_function(0, 8) == 105
        assert af.residual_function(0, 10) == 189
        assert af.residual_function(1, 2) == 2

    def test_printed_prefix(self):
        assert [af.residual_sequence(m) for m in range(2, 23)] == self.PRINTED

    def test_product_of_residues(self):
        for m in range(2, 51):
            prod = 1
            for c in reduced_residues(m):
                prod *= c
            assert af.residual_sequence(m) == prod

    def test_wilson_gauss_probe(self):
        # recorded, not asserted as an invariant: the residue product is
        # +-1 mod m (Gauss's generalization of Wilson's theorem)
        for m in range(2, 51):
            r = af.residual_sequence(m) % m
            assert r in (1 % m, m - 1)

    @given(st.integers(-50, 50), st.integers(2, 60))
    def test_degree_matches_totient(self, x, m):
        # product of (x + c) over residues c has phi(m) factors
        value = af.residual_function(x, m)
        assert isinstance(value, int)
        if x > 0:
            assert value >= (x + 1) ** euler_totient(m)
