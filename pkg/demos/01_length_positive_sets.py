"""Affine Weyl groups, lengths, and length-positive sets.

Every element of the extended affine Weyl group is written x = w eps^mu
with w in the finite Weyl group and mu a cocharacter.  The length
functional ell(x, alpha) splits the length of x over the positive roots,
and the length-positive set LP(x) collects the v in W that keep every
value nonnegative.
"""

from adlv import AffineElement, AffineWeyl, builtin_datum

aw = AffineWeyl(builtin_datum('sl3'))
W = aw.W

# s1 eps^{alpha_1^vee + alpha_2^vee}
x = AffineElement(W.simple[0], (1, 1))
print('x       =', aw.format_element(x))
print('ell(x)  =', aw.aff_length(x))

# the split of the length over positive roots
total = 0
for idx in range(aw.datum.num_positive):
    val = aw.length_functional(x, idx)
    total += abs(val)
    print('  ell(x, %s) = %d' % (aw.datum.roots[idx].coords, val))
assert total == aw.aff_length(x)

print('LP(x)   =', [W.words[v] for v in aw.lp_set(x)])
print('eta(x)  =', W.words[aw.eta_sigma(x)])

# pure translations: LP of a regular dominant translation is {e}
t = AffineElement(0, (2, 1))
print('LP(%s) =' % aw.format_element(t),
      [W.words[v] for v in aw.lp_set(t)])
