# Theta_n: a line W of n points and a coline Z of n points, glued by partners.

from elastic_matroids import catalog
from elastic_matroids.core import delete, dual, rank_function_equal
from elastic_matroids.elasticity import elasticity_report
from elastic_matroids.structures import cosegments, segments, theta_separators

t = catalog.theta(4)
print(t, t.labels)
print("W is a segment:  ", [t.names(s.elements) for s in segments(t)])
print("Z is a cosegment:", [t.names(s.elements) for s in cosegments(t)])

# %% self-dual under w_i <-> z_i
swap = {f"w{i}": f"z{i}" for i in range(1, 5)} | {f"z{i}": f"w{i}" for i in range(1, 5)}
print("self-dual:", rank_function_equal(dual(t), t, swap))

# %% no 4-element fans, yet nothing is elastic
rep = elasticity_report(t)
print("deletable", rep.num_deletable, "contractible", rep.num_contractible, "elastic", rep.num_elastic)

# %% glue W onto a 5-point line: the separator survives, e5 is the only elastic element
g = catalog.glued_theta(4, 5)
for s in theta_separators(g):
    print(s.kind, "n =", s.n, s.side, g.names(s.elements))
print("elastic:", [g.labels[e] for e in elasticity_report(g).elastic])

# %% drop w4: the separator loses a point and z4, now without a partner, turns elastic
h = delete(g, g.subset(["w4"]))
minus = [s for s in theta_separators(h) if s.kind == "theta-minus" and s.n == 4]
print("unpartnered:", [h.labels[s.unpartnered] for s in minus])
print("elastic:", [h.labels[e] for e in elasticity_report(h).elastic])
