"""k[Z4] through the whole quantum pipeline.

1. Factor k[Z4] along span{g0,g2} and span{g0,g1}; neither product closes
   in the second factor, so gamma(g1,g1) = g2.
2. Check the fourteen conditions and rebuild the product.
3. Pass to the dual along the other split and recover the coproduct-side data.

    python demos/bialgebra_pipeline.py
"""

from bicross.fixtures import kz4_cdcp, kz4_split
from bicross.quantum import (
    build_bicocycle_bialgebra,
    build_cdcc,
    build_cdcp,
    cdcc_from_cdcp,
    dualize,
    pullback_bialgebra,
    verify_bicocycle_conditions,
    verify_cdcc_conditions,
)

G, f = kz4_split()
d = f.data
print("gamma(g1,g1) =", dict(zip(d.M.labels, map(str, d.gamma[1, 1]))))
print(verify_bicocycle_conditions(d).summary())
B = build_bicocycle_bialgebra(d)
print("rebuilt k[Z4]:", B.same_tensors(pullback_bialgebra(G, f.iso, B.space)))

c = kz4_cdcp()
L = dualize(build_cdcp(c))
g = cdcc_from_cdcp(c, return_iso=True)
print(verify_cdcc_conditions(g.data).summary().splitlines()[0])
D = build_cdcc(g.data)
print("rebuilt the dual:", D.same_tensors(pullback_bialgebra(L, g.iso, D.space)))
