# Run the three verifiers over a batch of random GF(p) matroids and tally
# which alternative explains each maximal vertical 3-separation.

from collections import Counter

from elastic_matroids import catalog
from elastic_matroids.verify import oracle_crosscheck, verify_bixby, verify_corollary2, verify_theorem1

fired = Counter()
cases = Counter()
for seed in range(30):
    m = catalog.random_linear(3, 4, 9, seed=seed)
    assert verify_bixby(m).passed
    out = verify_theorem1(m)
    assert out.passed
    fired.update({k: v for k, v in out.details["fired"].items()})
    cor = verify_corollary2(m)
    cases[cor.details.get("case")] += 1

print("disjunct counts over all maximal triples:", dict(fired))
print("corollary cases:", dict(cases))

# %% the brute-force oracle agrees with the fast code paths
m = catalog.random_linear(3, 4, 9, seed=0)
print("crosscheck:", "clean" if oracle_crosscheck(m).passed else "DIFF")

# %% the named examples
for name, m in [("wheel(4)", catalog.wheel(4)), ("glued", catalog.glued_theta()), ("U(4,8)", catalog.uniform(4, 8))]:
    out = verify_theorem1(m)
    print(f"{name:9} maximal triples {out.instances:3}  fired {out.details['fired']}")
