# Wheels and whirls are one long fan, and none of their elements is elastic.

from elastic_matroids import catalog
from elastic_matroids.elasticity import elasticity_report
from elastic_matroids.structures import fans, triads, triangles

w = catalog.wheel(4)
print(w, w.labels)

# %% triangles {s_i, r_i, s_i+1} and triads {r_i-1, s_i, r_i}
print("triangles", [w.names(t) for t in triangles(w)])
print("triads   ", [w.names(t) for t in triads(w)])

# %% the whole ground set is a single maximal fan
for f in fans(w):
    print(len(f), [w.labels[i] for i in f.order], f.witness_types[:3], "...")

# %% every element fails one of the two tests
rep = elasticity_report(w)
for v in rep.verdicts:
    print(f"{w.labels[v.element]:>3} deletable={v.deletable!s:5} contractible={v.contractible}")
print("elastic:", rep.num_elastic)

# %% a witness for non-contractibility is a vertical 3-separation at the element
v = rep.verdicts[0]
t = v.witness_vertical
print("s1 is not contractible:", w.names(t.x), w.labels[t.e], w.names(t.y))

# %% relaxing the rim gives the whirl; same story
wh = catalog.whirl(4)
print(wh, "rim rank", wh.rank(catalog.rim(wh)), "elastic", elasticity_report(wh).num_elastic)
