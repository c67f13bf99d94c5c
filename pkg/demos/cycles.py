"""Hamiltonian cycles built from grid snakes, and a cycle of every length."""

from idealgraph import construct_hamiltonian, grid_snake_cycle, pancyclic_family, predict_hamiltonian


def draw(gc):
    # number the cells in cycle order; the missing corner is '.'
    pos = {c: k for k, c in enumerate(gc.cells)}
    for i in range(1, gc.m + 1):
        print(" ".join(f"{pos[(i, j)]:>2}" if (i, j) in pos else " ." for j in range(1, gc.n + 1)))


for m, n in ((3, 3), (2, 5), (4, 6)):
    gc = grid_snake_cycle(m, n)
    print(f"{m}x{n} grid, pattern {gc.family}, problems: {gc.problems()}")
    draw(gc)
    print()

for text in ("Z8 x Z8", "Z8 x GF(2)", "GF(2) x GF(3) x GF(5)", "GF(2) x GF(3)", "vs(2,2)"):
    out = construct_hamiltonian(text)
    print(f"{text:>22}: {out.status:<27} {out.strategy} {out.tag or ''}")
    if out.witness is not None:
        print("    ", " ~ ".join(out.graph.label(v) for v in out.witness))

print(predict_hamiltonian("Z8"))

big = construct_hamiltonian("chain(2,11) x chain(2,11)", oracle_limit=0)
print("chain(2,11)^2:", big.graph.order, "vertices,", big.strategy)

fam = pancyclic_family("Z8 x Z8")
for length, w in sorted(fam.cycles.items()):
    print(f"{length:>3} via {fam.methods[length]}")
print("gaps:", fam.gaps)
