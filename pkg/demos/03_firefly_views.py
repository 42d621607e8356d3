"""
Two observers, one firefly
==========================

The builtin firefly model: a box with four sectors, one observer per
split. Each observer's partial descriptions form a poset; translation
tables carry descriptions between the views, losing information along
the way. Merging both views yields a single description space.
"""

from orthoview import (
    apply_transform,
    build_presum,
    build_repsys,
    check_rs_axioms,
    quotient_sum,
    verify_closure_properties,
    view_closure,
    zoo_model,
)

rs, _ = build_repsys(zoo_model("firefly").doc)
print("views:", rs.views)
print("X descriptions:", rs.poset_of("X").elements)
print("Y descriptions:", rs.poset_of("Y").elements)

# The three transformation laws hold exhaustively.
print("axioms:", check_rs_axioms(rs))

# Seeing the right half tells Y the firefly is in the lower half; seeing
# the upper half tells X nothing at all.
print('Y reading of X:"Right" ->', apply_transform(rs, "Y", "X", "Right"))
print('X reading of Y:"Up"    ->', apply_transform(rs, "X", "Y", "Up"))

# The merged space: ten tagged descriptions collapse to nine classes,
# because the two information-less tops coincide.
presum = build_presum(rs)
s = quotient_sum(presum)
print(f"{len(presum.pairs)} tagged descriptions -> {s.order.n} classes")
print("classes:", s.order.elements)

# Per-view closures send a class to the best description visible from
# that view; they are inflationary, idempotent and monotone.
up = s.class_of("Y", "Up")
print('best X view of Y:"Up" ->', s.label(view_closure(s, rs, "X", up)))
print("closure laws:", verify_closure_properties(s, rs))
