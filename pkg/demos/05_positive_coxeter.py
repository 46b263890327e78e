"""Positive Coxeter type: pairs, intervals, dimensions, endpoints.

When some length-positive v turns the finite part of x into a
sigma-Coxeter element c of a standard parabolic W_J, everything about
the reduction of x becomes a closed formula: the set of classes is a
saturated interval, each class is reached by exactly one tree path, its
polynomial is q^{l_II} (q-1)^{l_I}, and the endpoint class is solved
from two congruences rather than read off the tree.
"""

from adlv import PCT, AffineElement, AffineWeyl, builtin_datum
from adlv.reduction import poly_str

aw = AffineWeyl(builtin_datum('sl3'))
pct = PCT(aw)
W = aw.W

x = AffineElement(W.simple[0], (1, 1))
print('x =', aw.format_element(x))

report = pct.thmA_report(x)               # cross-validated against the tree
pair = report['pair']
print('pair: v =', W.words[pair.v], ' J =', sorted(pair.J),
      ' c =', pair.c_word)
print('b_min:', report['b_min'])
print('b_max:', report['b_max'], ' lambda_max =', report['lambda_max'])

for cd in report['classes']:
    print('  class nu =', cd['class'].nu,
          ' (l_I, l_II) = (%d, %d)' % (cd['l_i'], cd['l_ii']),
          ' dim =', cd['dimension'])
    cert = pct.endpoint_class(pair, cd['class'])
    print('    endpoint:', aw.format_element(cert['endpoint']),
          ' support', sorted(cert['support']))

# the converse: positive Coxeter type is characterized without pairs
flag, v = pct.pct_characterize(x)
print('characterization agrees:', flag, '(witness v =', W.words[v], ')')
