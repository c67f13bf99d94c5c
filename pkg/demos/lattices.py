"""Ideal lattices of small rings, and independent families of ideals."""

from idealgraph import enumerate_ideals, join, max_independent_family, meet, parse_ring_spec, product_ideal

# Z12 splits as Z4 x GF(3): a chain block and a field block
z12 = parse_ring_spec("Z12")
print(z12.blocks)

ideals = enumerate_ideals(z12)
print(len(ideals), "ideals:", [a.label() for a in ideals])

# 2Z12 and 3Z12 in block coordinates; their meet is 6Z12
two, three = ideals[2], ideals[1]
print(two.label(), "meet", three.label(), "=", meet(two, three).label())
print(two.label(), "join", three.label(), "=", join(two, three).label())
print(two.label(), "squared =", product_ideal(two, two).label())

# the local ring with a 2-dimensional square-zero maximal ideal over GF(2):
# below m the ideals are just the subspaces of GF(2)^2
vs = parse_ring_spec("vs(2,2)")
for a in enumerate_ideals(vs):
    print("  ", a.label())

# three fields carry three independent ideals and no fourth
for text in ("Z12", "GF(2) x GF(3) x GF(5)", "GF(2) x GF(3) x GF(5) x GF(7)"):
    t, fam = max_independent_family(text, limit=6)
    print(f"{text:>30}: t = {t}", [a.label() for a in fam.members])
