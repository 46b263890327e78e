"""Sigma-conjugacy invariants: Newton point, Kottwitz point, lambda.

A sigma-conjugacy class of the extended affine Weyl group is pinned down
by its Newton point nu (a dominant rational cocharacter) and its
Kottwitz point kappa (a residue in the fundamental-group quotient).  The
lambda-invariant is the maximal integral residue below nu, and the
defect measures the gap <nu - lambda, 2 rho>.
"""

from adlv import AffineElement, AffineWeyl, BGInvariants, builtin_datum

aw = AffineWeyl(builtin_datum('gl3'))
bg = BGInvariants(aw)

for x in (AffineElement(0, (1, 0, 0)),           # dominant translation
          AffineElement(aw.W.simple[0], (1, 0, 0)),
          aw.reflection(aw.simple_affine[-1])):  # affine reflection r_0
    b = bg.element_class(x)
    res, lam = bg.lambda_invariant(b)
    print('x =', aw.format_element(x))
    print('  nu     =', b.nu)
    print('  kappa  =', b.kappa)
    print('  lambda =', lam, ' defect =', bg.defect(b))

# invariants do not move under sigma-conjugation
x = AffineElement(aw.W.simple[0], (1, 0, 0))
y = aw.mult(aw.mult(aw.inverse(aw.from_weyl(2)), x), aw.sigma(aw.from_weyl(2)))
assert bg.element_class(x) == bg.element_class(y)
print('sigma-conjugation preserves the class, as it must')
