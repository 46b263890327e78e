"""Extended affine Weyl group: lengths, LP sets, moves, length-zero
elements."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adlv.affine import AffineElement, AffineWeyl
from adlv.datum import builtin_datum


@pytest.fixture(scope='module')
def sl2():
    return AffineWeyl(builtin_datum('sl2'))


@pytest.fixture(scope='module')
def sl3():
    return AffineWeyl(builtin_datum('sl3'))


def bfs_lengths(aw, depth):
    """Independent length oracle: BFS word length over the simple affine
    generators (plus length-zero elements as seeds)."""
    seeds = aw.omega_elements()
    dist = {x: 0 for x in seeds}
    frontier = list(seeds)
    for d in range(1, depth + 1):
        nxt = []
        for x in frontier:
            for a in aw.simple_affine:
                for y in (aw.mult(x, aw.reflection(a)),
                          aw.mult(aw.reflection(a), x)):
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
        frontier = nxt
    return dist


@pytest.mark.parametrize('name,depth', [('sl2', 7), ('sl3', 6)])
def test_length_against_word_bfs(name, depth):
    aw = AffineWeyl(builtin_datum(name))
    for x, d in bfs_lengths(aw, depth).items():
        assert aw.aff_length(x) == d


def random_elements(name, mu_lo, mu_hi):
    aw = AffineWeyl(builtin_datum(name))
    dim = aw.datum.dim
    return aw, [AffineElement(w, mu)
                for w in range(aw.W.size)
                for mu in itertools.product(range(mu_lo, mu_hi + 1),
                                            repeat=dim)]


@pytest.mark.parametrize('name', ['sl3', 'sp4', 'sl3_flip'])
def test_length_functional_sums_to_length(name):
    aw, elements = random_elements(name, -2, 2)
    n = aw.datum.num_positive
    for x in elements:
        total = sum(abs(aw.length_functional(x, i)) for i in range(n))
        assert total == aw.aff_length(x)


@pytest.mark.parametrize('name', ['sl3', 'sp4'])
def test_multiplication_length_subadditive(name):
    aw, elements = random_elements(name, -1, 1)
    for x in elements[:20]:
        for y in elements[::7]:
            lxy = aw.aff_length(aw.mult(x, y))
            assert abs(aw.aff_length(x) - aw.aff_length(y)) <= lxy \
                <= aw.aff_length(x) + aw.aff_length(y)


def test_group_law_and_inverse(sl3):
    aw = sl3
    xs = [AffineElement(w, mu) for w in range(aw.W.size)
          for mu in itertools.product((-1, 0, 1), repeat=2)]
    e = AffineElement(0, (0, 0))
    for x in xs[::5]:
        assert aw.mult(x, aw.inverse(x)) == e
        assert aw.aff_length(aw.inverse(x)) == aw.aff_length(x)


def test_reflections_and_simple_lengths(sl2, sl3):
    for aw in (sl2, sl3):
        for a in aw.simple_affine:
            r = aw.reflection(a)
            assert aw.aff_length(r) == 1
            assert aw.mult(r, r) == AffineElement(0, (0,) * aw.datum.dim)


def test_sl2_worked_identity(sl2):
    # s0 s1 = eps^{alpha^vee} in the group law
    s0 = sl2.reflection(sl2.simple_affine[1])
    s1 = sl2.reflection(sl2.simple_affine[0])
    assert sl2.mult(s0, s1) == sl2.translation((1,))
    assert sl2.aff_length(sl2.mult(s1, sl2.mult(s0, s1))) == 3


def test_lp_basic(sl2):
    # identity: LP = all of W; regular dominant translation: LP = {e}
    assert sl2.lp_set(AffineElement(0, (0,))) == [0, 1]
    assert sl2.lp_set(sl2.translation((1,))) == [0]
    # x = s1 eps^{alpha^vee} has LP = {e}
    assert sl2.lp_set(AffineElement(1, (1,))) == [0]


@pytest.mark.parametrize('name', ['sl3', 'sp4', 'sl3_flip'])
def test_lp_transport_cases(name):
    aw, elements = random_elements(name, -2, 2)
    for x in elements[::11]:
        for a in aw.simple_affine:
            case, lp_x, lp_xr, transported = aw.lp_transport(x, a)
            # the transport map itself re-verifies containments; check
            # the case < 0 bijection cardinality here as well
            if case < 0:
                assert len(lp_x) == len(lp_xr)


@pytest.mark.parametrize('name', ['sl3', 'sp4', 'sl3_flip'])
def test_simple_sigma_conjugate_kinds(name):
    aw, elements = random_elements(name, -2, 2)
    for x in elements[::7]:
        for a in aw.simple_affine:
            both, kind, left = aw.simple_sigma_conjugate(x, a)
            delta = aw.aff_length(both) - aw.aff_length(x)
            assert {'keep': 0, 'down': -2, 'up': 2}[kind] == delta
            assert aw.mult(aw.reflection(a), x) == left


def test_omega_counts():
    assert len(AffineWeyl(builtin_datum('sl2')).omega_elements()) == 1
    assert len(AffineWeyl(builtin_datum('pgl2')).omega_elements()) == 2
    assert len(AffineWeyl(builtin_datum('pgl3')).omega_elements()) == 3
    assert len(AffineWeyl(builtin_datum('psp4')).omega_elements()) == 2
    for tau in AffineWeyl(builtin_datum('pgl3')).omega_elements():
        pass


def test_omega_elements_have_length_zero():
    for name in ('pgl2', 'pgl3', 'psp4', 'gl3'):
        aw = AffineWeyl(builtin_datum(name))
        for tau in aw.omega_elements():
            assert aw.aff_length(tau) == 0


def test_parse_and_format_roundtrip(sl3):
    x = AffineElement(3, (1, -2))
    text = sl3.format_element(x)
    assert sl3.parse_element(text) == x
    with pytest.raises(ValueError):
        sl3.parse_element('{"w": [9], "mu": [0, 0]}')
    with pytest.raises(ValueError):
        sl3.parse_element('{"w": [1], "mu": [0]}')


def test_eta_sigma(sl2):
    # x = s1 eps^{alpha^vee}: mu dominant, v = e, eta = s1
    assert sl2.eta_sigma(AffineElement(1, (1,))) == 1
    # dominant translation: eta = e
    assert sl2.eta_sigma(sl2.translation((1,))) == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 7), st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
       st.integers(0, 2))
def test_length_change_by_simple_reflection(w, mu, i):
    aw = AffineWeyl(builtin_datum('sp4'))
    w = w % aw.W.size
    x = AffineElement(w, mu)
    a = aw.simple_affine[i]
    xr = aw.mult(x, aw.reflection(a))
    assert abs(aw.aff_length(xr) - aw.aff_length(x)) == 1
