"""
Finite posets from cover pairs
==============================

Build small partial orders, compute joins and meets as partial
operations, and test for lattices and order isomorphisms.
"""

from orthoview import FinitePoset, ValidationError, find_order_isomorphism

# A poset is declared by its elements and a handful of cover pairs; the
# full order is the reflexive-transitive closure.
diamond = FinitePoset.from_covers(
    ["bottom", "left", "right", "top"],
    [("bottom", "left"), ("bottom", "right"), ("left", "top"), ("right", "top")],
)
print("diamond order matrix:")
print(diamond.leq.astype(int))

# Joins and meets may not exist; they come back as None instead of raising.
l, r = diamond.idx("left"), diamond.idx("right")
print("left v right =", diamond.elements[diamond.join(l, r)])
print("left ^ right =", diamond.elements[diamond.meet(l, r)])

fence = FinitePoset.from_covers(["a", "b", "x"], [("a", "x"), ("b", "x")])
print("fence a v b =", fence.elements[fence.join(0, 1)], " a ^ b =", fence.meet(0, 1))

# A relation whose closure has a cycle is rejected with the cycle as witness.
try:
    FinitePoset.from_covers(["p", "q"], [("p", "q"), ("q", "p")])
except ValidationError as err:
    print("rejected:", err.code, err.witness)

# Lattice test with a witness on failure.
print("diamond is a lattice:", bool(diamond.is_lattice()))
print("fence   is a lattice:", bool(fence.is_lattice()))
print("fence witness:", fence.is_lattice().code, fence.is_lattice().witness)

# Isomorphism search relabels the diamond automatically.
shuffled = FinitePoset.from_covers(
    ["t", "m1", "m2", "b"],
    [("b", "m1"), ("b", "m2"), ("m1", "t"), ("m2", "t")],
)
print("diamond ~ shuffled:", find_order_isomorphism(diamond, shuffled))
