from fractions import Fraction

from hypothesis import settings, strategies as st

from sramorita.exact import gauss
from sramorita.mckay import build_affine_quiver, catalog
from sramorita.weyl import Permute, Reflect, diagram_automorphisms

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ALL_QUIVERS = catalog()
SMALL_QUIVERS = [build_affine_quiver("A", m) for m in (2, 3, 4, 5)] + [build_affine_quiver("D", 4)]

quivers = st.sampled_from(ALL_QUIVERS)
small_quivers = st.sampled_from(SMALL_QUIVERS)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)
small_ints = st.integers(min_value=-4, max_value=4)
gaussians = st.builds(gauss, rationals, rationals)


def level_one(Q, tail):
    """Complete entries 1..n-1 into a level-1 parameter (delta_0 = 1)."""
    head = 1 - sum(d * x for d, x in zip(Q.delta[1:], tail))
    return (head,) + tuple(tail)


@st.composite
def level_one_params(draw, Q, entries=rationals):
    return level_one(Q, [draw(entries) for _ in range(Q.n - 1)])


@st.composite
def complex_level_one_params(draw, Q):
    real = draw(level_one_params(Q))
    tail = [draw(rationals) for _ in range(Q.n - 1)]
    imag_head = -sum(d * y for d, y in zip(Q.delta[1:], tail))
    imag = (imag_head,) + tuple(tail)
    return tuple(gauss(x, y) for x, y in zip(real, imag))


@st.composite
def words(draw, Q, max_len=25):
    autos = diagram_automorphisms(Q)
    letters = st.one_of(
        st.integers(0, Q.n - 1).map(Reflect),
        st.sampled_from(autos).map(Permute),
    )
    return tuple(draw(st.lists(letters, max_size=max_len)))


@st.composite
def quiver_and_param(draw, pool=quivers):
    Q = draw(pool)
    return Q, draw(level_one_params(Q))


F = Fraction
