"""Shared fixtures data and strategies for the test modules."""
from fractions import Fraction as F
from pathlib import Path

from hypothesis import strategies as st

from necktie import Configuration, point
from necktie.scalars import MERSENNE_61

ROOT = Path(__file__).resolve().parent.parent
SCENES = ROOT / "scenes"
GOLDEN = Path(__file__).resolve().parent / "golden"

coord = st.integers(-30, 30)
affine = st.tuples(coord, coord)
homog = st.tuples(coord, coord, coord).filter(any)
FIELDS = [0, MERSENNE_61]


def k1(p=0, Q=(2, 3), aprime=(-3, 4)):
    """The worked configuration: A1=(3,3), B1=(5/2,1/2), C1=(1/2,5/2), A'_P=(4,4)."""
    A, B, C, P = (point(*xy, p=p) for xy in [(0, 0), (4, 0), (0, 4), (1, 1)])
    return Configuration.from_params(
        A, B, C, P, (-2, 3), (1, 1), (1, 1),
        Q=point(*Q, p=p) if Q is not None else None,
        aprime=aprime,
    )


def affine_of(P):
    x, y = P.affine()
    return F(x), F(y)
