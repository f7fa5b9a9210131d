"""
Lattices and the relabeling group
=================================

The four-dimensional torus of the degree-6 family is a quotient of a
six-dimensional one. Here we compute the quotient lattice, its index in Z^4,
and the action of the order-48 group on it.
"""

# %%
# The quotient map and its kernel
# -------------------------------
from burniat import groups as G
from burniat import lattice as L

image, kernel = L.image_and_kernel(L.QUOTIENT_MAP)
print("image basis :", image.basis)
print("kernel basis:", kernel.basis)
print("index of the image in Z^4:", image.index_in(L.Sublattice.full(4)))
print("invariant factors:", L.invariant_factors(L.QUOTIENT_MATRIX))

# %%
# Characters. The monomial r1 g1 b1 becomes a half-integral covector on Z^4.
m = L.character_pushforward((1, 0, 1, 0, 1, 0))
print("r1 g1 b1 ->", m, " pairs to", m.pair((1, 1, 0, 0)), "with (1,1,0,0)")

# %%
# The group
# ---------
# Elements are permutations of the twelve curve labels. Their matrices on
# the quotient lattice are built from the label permutation.
gamma = G.gamma6()
print("order:", gamma.order)
print("s_r acts as", G.S_R.matrix_N6)
print("Cremona acts as", G.CREMONA.matrix_N6)

# %%
# Orbits of the four basic vectors give the 42 rays of the big fan.
for name, v in (("A", (2, 0, 0, 0)), ("B", (1, 1, 0, 0)), ("C", (1, 1, 1, 1)), ("D", (0, 1, 0, 1))):
    orbit = G.orbit_vectors(gamma, v)
    stab = G.vector_stabilizer(gamma, v)
    print(f"{name}: orbit {len(orbit):2d}, stabilizer {stab.order:2d}")
