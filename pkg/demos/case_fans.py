"""
Fans of the four lower-degree cases
===================================

Each case is a subtorus cut out by monomial conditions. Intersecting the big
fan with it gives a complete smooth fan; in rank 3 the fan is completed from
a handful of seed cones.
"""

# %%
from burniat import cases as C
from burniat import fans as F
from burniat import groups as G

for case in C.CaseId:
    spec = C.case_spec(case)
    fan = C.build_case_fan(case)
    rg = C.relabeling_group(case)
    print(f"{case.label}: conditions {spec.triples}")
    print(f"  lattice basis {spec.sublattice.basis}")
    print(f"  {len(fan.rays)} rays, {len(fan.max_cones)} cones, census {F.cone_type_census(fan)}")
    print(f"  group {G.identify_small_group(rg.group)} of order {rg.group.order}, "
          f"kernel {rg.kernel.order}")

# %%
# The rank-2 fans match the standard toric surfaces.
print("4a -> hexagon via", F.fan_isomorphic_2d(C.build_case_fan("4a"), F.HEXAGON_FAN))
print("4b -> octagon via", F.fan_isomorphic_2d(C.build_case_fan("4b"), F.OCTAGON_FAN))

# %%
# In rank 3 the seed orbits give 26 cones; ridge resolution adds the rest.
fan5 = C.build_case_fan("5")
print("seed cones:", len(C.seed_orbit_cones()), " final:", len(fan5.max_cones))
print("V, E, F =", F.euler_characteristic(fan5))

# %%
# Boundary divisors: toric ones come from ray orbits, the others are recorded.
for case in C.CaseId:
    bd = C.boundary_divisors(case)
    print(case.label, "computed", bd.computed, "recorded", bd.recorded, "total", bd.total)
