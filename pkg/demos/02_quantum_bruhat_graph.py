"""The quantum Bruhat graph and its path weights.

Vertices are the finite Weyl group elements.  Upward edges follow the
Bruhat order; downward "quantum" edges carry a coroot weight.  All
shortest paths between two vertices have the same total weight, which is
what makes the weight function wt(v => v') well defined.
"""

from adlv import QuantumBruhatGraph, WeylGroup, builtin_datum

W = WeylGroup(builtin_datum('sl3'))
qbg = QuantumBruhatGraph(W)

e = 0
w0 = W.longest

d, wt = qbg.distance_weight(e, w0)
print('d(e => w0)  =', d, ' weight =', qbg.weight_vector(wt))

d, wt = qbg.distance_weight(w0, e)
print('d(w0 => e)  =', d, ' weight =', qbg.weight_vector(wt))

# the well-definedness check, by brute-force path enumeration
for v in range(W.size):
    for v2 in range(W.size):
        weights = qbg.all_shortest_path_weights(v, v2)
        assert len(weights) == 1
print('all %d ordered pairs have a unique shortest-path weight'
      % (W.size * W.size))

# export for graphviz:  python3 demos/02_quantum_bruhat_graph.py > qbg.dot
print(qbg.to_dot()[:200], '...')
