"""The Witt-type algebra on z_-1, z_0, z_1, ... split by index mod 4.

Both pieces fail to be subalgebras, so theta and gamma are both nonzero.
We check every axiom on the tuples with index sum up to a bound and print
a few reconstructed brackets.

    python demos/w1_graded.py [bound]
"""

import sys

from bicross.fixtures import w1_graded
from bicross.lie import graded_bracket, graded_verify

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 20
g = w1_graded()
report = graded_verify(g, bound)
print(report.summary())

for i, j in [(-1, 2), (0, 3), (1, 2), (2, 3), (3, 4)]:
    v = graded_bracket(g, i, j)
    terms = " + ".join(f"{c} z{k}" for k, c in sorted(v.items())) or "0"
    print(f"[z{i}, z{j}] = {terms}   (expected {j - i} z{i + j})")
