import pytest
from hypothesis import given, strategies as st

from grothmodt.core import CrtError
from grothmodt.oracle import crt_reconstruct, candidates_within

MODULI = [2, 4, 6, 10, 12]


def test_reconstruct():
    assert crt_reconstruct([(2, 1), (4, 3), (6, 5)], 10) == -1


def test_ambiguous():
    with pytest.raises(CrtError):
        crt_reconstruct([(2, 0), (4, 2)], 3)


def test_inconsistent():
    with pytest.raises(CrtError):
        crt_reconstruct([(2, 0), (4, 1)], 10)


@pytest.mark.parametrize("residues", [[], [(0, 1)], [(-4, 1)]])
def test_invalid(residues):
    with pytest.raises(CrtError):
        crt_reconstruct(residues, 10)


def test_nothing_within_bound():
    assert crt_reconstruct([(12, 6)], 5) is None


def test_candidates():
    assert candidates_within(3, 4, 10) == [-9, -5, -1, 3, 7]
    assert candidates_within(0, 60, 29) == [0]
    assert candidates_within(-1, 60, 29) == [-1]


@given(st.integers(min_value=-29, max_value=29))
def test_round_trip_default_primes(n):
    residues = [(m, n % m) for m in MODULI]
    assert crt_reconstruct(residues, 29) == n
