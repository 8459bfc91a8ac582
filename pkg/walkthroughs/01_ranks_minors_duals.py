# Ranks, minors and duals on small matroids.
# Subsets are ints: bit i is element i. m.subset / m.names translate labels.

from elastic_matroids import catalog
from elastic_matroids.core import circuits, closure, contract, corank, delete, dual, simplify
from elastic_matroids.connectivity import is_three_connected, lambda_

# %% K4 as a graphic matroid, edges labelled by their endpoints
k4 = catalog.mk4()
print(k4, k4.labels)
print("rank", k4.rank(), "corank", corank(k4, k4.ground))

# %% circuits: four triangles and three 4-cycles
for c in circuits(k4):
    print("circuit", k4.names(c))

# %% closure of two edges of a triangle picks up the third
two = k4.subset(["12", "23"])
print(k4.names(closure(k4, two)))

# %% the connectivity function is symmetric and dual-invariant
s = k4.subset(["12", "13", "14"])  # a vertex star
print("lambda", lambda_(k4, s), lambda_(k4, k4.ground & ~s), lambda_(dual(k4), s))

# %% contract an edge: the two triangles through it collapse into parallel pairs
c = contract(k4, k4.subset(["12"]))
si, classes = simplify(c)
print(c, "->", si, classes)
print("si(M/e) 3-connected:", is_three_connected(si))

# %% delete an edge: K4 minus an edge has series pairs
d = delete(k4, k4.subset(["12"]))
print(d, "3-connected:", is_three_connected(d))
