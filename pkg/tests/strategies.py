# strategies.py - hypothesis strategies shared by the test modules
import random

from hypothesis import strategies as st

from modules.scalars import CycNumber, QSqrt2
from modules.supervec import SuperSpace, random_map

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def cyc_numbers(nonzero: bool = False):
    s = st.lists(small_fractions, min_size=8, max_size=8).map(CycNumber)
    return s.filter(bool) if nonzero else s


def qsqrt2_numbers(nonzero: bool = False):
    s = st.builds(QSqrt2, small_fractions, small_fractions)
    return s.filter(bool) if nonzero else s


def super_spaces(max_dim: int = 2):
    return st.builds(SuperSpace, st.integers(0, max_dim), st.integers(0, max_dim)).filter(lambda V: V.dim > 0)


def seeds():
    return st.integers(min_value=0, max_value=2 ** 16)


def map_between(V: SuperSpace, W: SuperSpace, parity: int, seed: int):
    return random_map(V, W, parity, random.Random(seed))

