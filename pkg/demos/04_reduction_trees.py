"""Deligne-Lusztig reduction trees and class polynomials.

Starting from any x, length-preserving conjugations ("keep" moves) and
length-dropping ones ("down" moves, which branch into a type I and a
type II child) build a binary tree whose leaves are minimal-length
elements.  Folding (q-1) over type I edges and q over type II edges
gives the class polynomials, independent of every branching choice.
"""

from adlv import AffineElement, AffineWeyl, Reduction, builtin_datum
from adlv.reduction import poly_str

aw = AffineWeyl(builtin_datum('sl2'))
red = Reduction(aw)

x = AffineElement(1, (1,))                  # s1 s0 s1
tree = red.build_reduction_tree(x)
print('x =', aw.format_element(x), ' length', aw.aff_length(x))
for leaf, n_i, n_ii in tree.paths():
    print('  leaf %-12s after %d type I and %d type II moves'
          % (aw.format_element(leaf.x), n_i, n_ii))

for key, poly in sorted(red.class_polynomials(x).items()):
    print('  class with nu =', key[1], ' polynomial:', poly_str(poly))

# seeds only change which branch is explored first, never the result
for seed in (1, 2, 3):
    assert red.class_polynomials(x, seed=seed) == red.class_polynomials(x)
print('class polynomials are branch-policy independent')

# DOT export: type I edges solid, type II dashed
print(red.tree_to_dot(tree))
