import random

import pytest

from charsum.cycint import CycInt
from charsum.errors import NotRationalInteger


def test_vanishing_geometric_sum():
    for p in (3, 5, 7):
        assert CycInt.from_counts(p, [1] * p) == CycInt.zero(p)
        total = CycInt.zero(p)
        for j in range(p):
            total = total + CycInt.omega_power(p, j)
        assert total == 0


def test_unit_magnitudes():
    for j in range(5):
        assert CycInt.omega_power(5, j).norm_squared() == 1


def test_one_plus_omega_p3():
    # 1 + w = -w^2 when p = 3, a unit
    z = CycInt.integer(3, 1) + CycInt.omega_power(3, 1)
    assert z == -CycInt.omega_power(3, 2)
    assert z.norm_squared() == 1


def test_omega_exponent_wraps():
    for p in (3, 5):
        assert CycInt.omega_power(p, p) == 1
        assert CycInt.omega_power(p, -1) == CycInt.omega_power(p, p - 1)


def test_shift_is_multiplication_by_omega():
    rng = random.Random(3)
    for _ in range(30):
        z = CycInt(5, [rng.randrange(-9, 10) for _ in range(4)])
        j = rng.randrange(11)
        assert z.omega_shift(j) == z * CycInt.omega_power(5, j)
    assert z.omega_shift(5) == z


def test_conj_involution_and_mul_compatibility():
    rng = random.Random(4)
    for _ in range(30):
        z = CycInt(7, [rng.randrange(-5, 6) for _ in range(6)])
        w = CycInt(7, [rng.randrange(-5, 6) for _ in range(6)])
        assert z.conj().conj() == z
        assert (z * w).conj() == z.conj() * w.conj()


def test_ring_axioms_random():
    rng = random.Random(5)
    for _ in range(100):
        x, y, z = (CycInt(5, [rng.randrange(-7, 8) for _ in range(4)]) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_rational_integer_accessors():
    z = CycInt.integer(3, -9)
    assert z.is_rational_integer and z.as_int() == -9
    w = CycInt.omega_power(3, 1)
    assert not w.is_rational_integer
    with pytest.raises(NotRationalInteger):
        w.as_int()


def test_integer_interop():
    z = CycInt.integer(5, 4)
    assert z == 4 and z + 1 == 5 and 2 * z == 8 and 1 - z == -3
    assert hash(z) == hash(4)


def test_rendering_is_canonical():
    assert str(CycInt.integer(3, -9)) == "-9"
    assert str(-9 * CycInt.omega_power(3, 1)) == "-9w"
    assert str(CycInt.zero(7)) == "0"
    z = CycInt(5, [1, 2, 0, -1])
    assert str(z) == "1+2w-w^3"


def test_immutability():
    z = CycInt.integer(3, 1)
    with pytest.raises(AttributeError):
        z.c = (0, 0)
