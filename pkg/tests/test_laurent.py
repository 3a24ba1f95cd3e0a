"""Exact Laurent scalars and formal sums.

Core claims:
    - HalfLaurent is a commutative ring; bar is an involutive automorphism
    - quantum integers are bar-invariant; [2]_t = t + t^-1
    - FormalSum addition/scaling behave and drop zero coefficients
"""

import random

from cyclotome import FormalSum, HalfLaurent, quantum_factorial, quantum_int
from cyclotome.laurent import T, T_HALF, T_INV


def random_poly(rng):
    return HalfLaurent(
        {rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(rng.randint(0, 4))}
    )


class TestHalfLaurent:
    def test_quantum_two(self):
        assert quantum_int(2) == T + T_INV

    def test_quantum_int_bar_invariant(self):
        for n in range(6):
            assert quantum_int(n).bar() == quantum_int(n)

    def test_difference_of_squares(self):
        assert (T - T_INV) * (T + T_INV) == HalfLaurent({4: 1, -4: -1})

    def test_half_powers_multiply(self):
        assert T_HALF * T_HALF == T
        assert HalfLaurent.t_pow(3) * HalfLaurent.t_pow(-3) == 1

    def test_ring_axioms_random(self):
        rng = random.Random(7)
        for _ in range(60):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a + HalfLaurent.zero() == a
            assert a * HalfLaurent.from_int(1) == a

    def test_bar_is_ring_involution(self):
        rng = random.Random(11)
        for _ in range(40):
            a, b = random_poly(rng), random_poly(rng)
            assert (a * b).bar() == a.bar() * b.bar()
            assert (a + b).bar() == a.bar() + b.bar()
            assert a.bar().bar() == a

    def test_quantum_factorial(self):
        assert quantum_factorial(3) == quantum_int(1) * quantum_int(2) * quantum_int(3)

    def test_zero_coefficients_dropped(self):
        assert (T - T).is_zero()
        assert HalfLaurent({2: 0, 0: 5}).terms == {0: 5}


class TestFormalSum:
    def test_addition_merges(self):
        s = FormalSum.of("x", T) + FormalSum.of("x", T_INV) + FormalSum.of("y")
        assert s.coefficient("x") == quantum_int(2)
        assert s.coefficient("y") == 1

    def test_cancellation_is_zero(self):
        s = FormalSum.of("x", T) - FormalSum.of("x", T)
        assert s.is_zero()
        assert s == FormalSum()

    def test_scale(self):
        s = FormalSum.of("x") - FormalSum.of("y")
        scaled = s.scale(T - T_INV)
        assert scaled.coefficient("x") == T - T_INV
        assert scaled.coefficient("y") == T_INV - T
