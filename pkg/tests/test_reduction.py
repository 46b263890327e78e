"""Reduction trees, minimal descent, class keys, class polynomials."""

import itertools

import pytest

from adlv.affine import AffineElement, AffineWeyl
from adlv.datum import builtin_datum
from adlv.reduction import (POLY_ONE, Reduction, poly_add, poly_mul,
                            poly_str)


@pytest.fixture(scope='module')
def red2():
    return Reduction(AffineWeyl(builtin_datum('sl2')))


@pytest.fixture(scope='module')
def red3():
    return Reduction(AffineWeyl(builtin_datum('sl3')))


def elements(aw, bound, max_len):
    return [AffineElement(w, mu) for w in range(aw.W.size)
            for mu in itertools.product(range(-bound, bound + 1),
                                        repeat=aw.datum.dim)
            if aw.aff_length(AffineElement(w, mu)) <= max_len]


def test_poly_arithmetic():
    assert poly_mul((-1, 1), (0, 1)) == (0, -1, 1)
    assert poly_add((1, 2), (-1, -2)) == ()
    assert poly_add((), (0, 1)) == (0, 1)
    assert poly_str((0, -1, 1)) == 'q^2-q'
    assert poly_str(()) == '0'
    assert poly_str((1,)) == '1'


def test_sl2_chain_tree(red2):
    x = AffineElement(1, (1,))           # s1 s0 s1
    tree = red2.build_reduction_tree(x)
    leaves = {leaf.x for leaf in tree.leaves()}
    assert leaves == {AffineElement(0, (1,)), AffineElement(1, (-1,))}
    paths = {(ni, nii) for _, ni, nii in tree.paths()}
    assert paths == {(1, 0), (0, 1)}
    polys = red2.class_polynomials(x)
    assert sorted(polys.values()) == [(-1, 1), (0, 1)]


def test_minimal_elements(red2):
    # length-zero and straight elements are minimal
    assert red2.is_minimal(AffineElement(0, (0,)))
    assert red2.is_minimal(AffineElement(0, (1,)))
    x = AffineElement(1, (1,))
    x_min, moves = red2.descend_to_minimal(x)
    assert red2.aw.aff_length(x_min) == 1
    assert len(moves) == 1
    assert red2.is_minimal(x_min)


def test_class_keys_sl2(red2):
    # eps^{alpha^vee} and eps^{-alpha^vee} are conjugate by s1
    k1 = red2.class_key(AffineElement(0, (1,)))
    k2 = red2.class_key(AffineElement(0, (-1,)))
    assert k1 == k2
    # distinct Newton points separate without search
    assert red2.class_key(AffineElement(0, (0,))) != k1
    # x and r_a x r_{sigma a} have equal keys
    x = AffineElement(1, (2,))
    for a in red2.aw.simple_affine:
        y, _, _ = red2.aw.simple_sigma_conjugate(x, a)
        assert red2.class_key(y) == red2.class_key(x)


def test_same_class(red2):
    assert red2.same_class(AffineElement(0, (1,)), AffineElement(0, (-1,)))
    assert not red2.same_class(AffineElement(0, (0,)),
                               AffineElement(1, (0,)))


def test_degree_bookkeeping(red3):
    aw = red3.aw
    for x in elements(aw, 2, 5)[::3]:
        tree = red3.build_reduction_tree(x)
        lx = aw.aff_length(x)
        for leaf, ni, nii in tree.paths():
            assert ni + 2 * nii + aw.aff_length(leaf.x) == lx


def test_q_equals_one_picks_unique_path(red3):
    # at q=1 the fold (q-1)*f_I + q*f_II kills every type I branch, so the
    # polynomials sum to 1: there is exactly one all-type-II path
    aw = red3.aw
    for x in elements(aw, 2, 5)[::5]:
        tree = red3.build_reduction_tree(x)
        polys = red3.class_polynomials(x, tree=tree)
        assert sum(sum(p) for p in polys.values()) == 1
        assert sum(1 for _, ni, _ in tree.paths() if ni == 0) == 1


def test_polynomials_base_case(red3):
    x = AffineElement(0, (1, 1))
    assert red3.is_minimal(x)
    polys = red3.class_polynomials(x)
    assert list(polys.values()) == [POLY_ONE]


def test_endpoint_kappa_matches(red3):
    bg = red3.bg
    for x in elements(red3.aw, 1, 4)[::4]:
        kx = bg.kottwitz_point(x)
        for leaf in red3.build_reduction_tree(x).leaves():
            assert bg.kottwitz_point(leaf.x) == kx


def test_seeded_trees_same_polynomials(red2):
    x = AffineElement(1, (2,))
    base = red2.class_polynomials(x)
    for seed in (1, 2, 3):
        assert red2.class_polynomials(x, seed=seed) == base


def test_tree_dot(red2):
    tree = red2.build_reduction_tree(AffineElement(1, (1,)))
    dot = red2.tree_to_dot(tree)
    assert dot.startswith('digraph') and 'solid' in dot and 'dashed' in dot


def test_bgx_from_tree_minimal(red3):
    x = AffineElement(0, (1, 1))        # dominant, straight
    data = red3.bgx_from_tree(x)
    assert len(data) == 1
    (b, entry), = data.items()
    assert entry['paths'] == [(0, 0, red3.aw.aff_length(x),
                               red3.aw.aff_length(x)
                               - int(red3.bg.pair_two_rho(b.nu)))]
    # straight element: dim statistic 0
    assert entry['paths'][0][3] == 0
