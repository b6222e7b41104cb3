import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import hypothesis.strategies as st

from bielliptic.lattice import MukaiVector

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

surface_types = st.integers(min_value=1, max_value=7)

coords = st.integers(min_value=-30, max_value=30)


@st.composite
def mukai_vectors(draw, rmin=-30, rmax=30):
    return MukaiVector.of(
        draw(st.integers(min_value=rmin, max_value=rmax)),
        draw(coords),
        draw(coords),
        draw(coords),
    )


@st.composite
def primitive_vectors(draw, rmin=1, rmax=30):
    v = draw(
        mukai_vectors(rmin=rmin, rmax=rmax).filter(lambda u: u.is_primitive())
    )
    return v
