"""Merging all views into one poset: pre-sum, quotient sum, view closures."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poset import OK, FinitePoset, InternalCheckError, Verdict
from .ortho import OrthoPoset


@dataclass(frozen=True)
class PreSum:
    """Tagged union of all view elements under the translated order:
    (i, x) <= (j, y) iff the view-j translation of x sits below y.
    The relation is a preorder, not a partial order: distinct pairs may be
    mutually comparable."""

    pairs: tuple
    rel: np.ndarray


def build_presum(rs):
    """Materialize the tagged pairs and their relation matrix.

    Reflexivity and transitivity are re-asserted from the matrix; a failure
    here means an invalid system slipped past validation.
    """
    pairs = []
    for v, p in zip(rs.views, rs.posets):
        pairs.extend((v, e) for e in p.elements)
    pairs = tuple(pairs)
    m = len(pairs)
    rel = np.zeros((m, m), dtype=bool)
    for a, (i, x) in enumerate(pairs):
        xi = rs.poset_of(i).idx(x)
        for b, (j, y) in enumerate(pairs):
            pj = rs.poset_of(j)
            rel[a, b] = pj.leq[rs.transforms[(j, i)][xi], pj.idx(y)]
    if not rel.diagonal().all():
        a = int(np.flatnonzero(~rel.diagonal())[0])
        raise InternalCheckError("preorder", "pre-sum relation is not reflexive", pairs[a])
    bad = (rel @ rel) & ~rel
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        raise InternalCheckError("preorder", "pre-sum relation is not transitive", pairs[a] + pairs[b])
    rel.flags.writeable = False
    return PreSum(pairs, rel)


def _label(pair):
    return f"{pair[0]}/{pair[1]}"


@dataclass(frozen=True)
class SumPoset:
    """Quotient of the pre-sum by mutual comparability.

    classes[c] lists the member pairs of class c (full member sets are kept
    so failures stay diagnosable); order is the induced poset, labelled by
    each class's first member; embed sends a (view, element) pair to its
    class index.
    """

    classes: tuple
    order: FinitePoset
    embed: dict

    def class_of(self, view, element):
        return self.embed[(view, element)]

    def label(self, c):
        return self.order.elements[c]


def quotient_sum(ps):
    """Group mutually comparable pairs and order the classes."""
    m = len(ps.pairs)
    mutual = ps.rel & ps.rel.T
    seen = [False] * m
    classes = []
    for a in range(m):
        if seen[a]:
            continue
        members = [int(b) for b in np.flatnonzero(mutual[a])]
        for b in members:
            seen[b] = True
        classes.append(tuple(members))
    reps = [c[0] for c in classes]
    order_rel = ps.rel[np.ix_(reps, reps)]
    order = FinitePoset([_label(ps.pairs[r]) for r in reps], order_rel)
    embed = {}
    for c, members in enumerate(classes):
        for b in members:
            embed[ps.pairs[b]] = c
    member_pairs = tuple(tuple(ps.pairs[b] for b in members) for members in classes)
    return SumPoset(member_pairs, order, embed)


def view_closure(s, rs, view, c):
    """Best approximation of class c visible from the given view.

    Computed from a representative and asserted identical across all
    representatives; a disagreement means the system was invalid.
    """
    results = set()
    for j, x in s.classes[c]:
        xi = rs.poset_of(j).idx(x)
        target = rs.poset_of(view).elements[rs.transforms[(view, j)][xi]]
        results.add(s.embed[(view, target)])
    if len(results) != 1:
        raise InternalCheckError(
            "ill-defined-closure",
            f"closure of class {s.label(c)!r} under view {view!r} depends on the representative",
            (view, s.label(c)),
        )
    return results.pop()


def closure_table(s, rs):
    """view_closure for every (view, class), as a views x classes array."""
    n = s.order.n
    table = np.empty((len(rs.views), n), dtype=int)
    for vi, v in enumerate(rs.views):
        for c in range(n):
            table[vi, c] = view_closure(s, rs, v, c)
    return table


def verify_closure_properties(s, rs):
    """Every view closure must be inflationary, idempotent and monotone."""
    leq = s.order.leq
    table = closure_table(s, rs)
    for vi, v in enumerate(rs.views):
        rho = table[vi]
        for c in range(s.order.n):
            if not leq[c, rho[c]]:
                return Verdict(False, "extension", (v, s.label(c)))
            if rho[rho[c]] != rho[c]:
                return Verdict(False, "idempotence", (v, s.label(c)))
        for c in range(s.order.n):
            for d in range(s.order.n):
                if leq[c, d] and not leq[rho[c], rho[d]]:
                    return Verdict(False, "monotony", (v, s.label(c), s.label(d)))
    return OK


def sum_as_orthoposet(s, brs):
    """Carry the per-view complements and bounds over to the sum classes.

    The class map (i, x) -> (i, x') must not depend on the representative,
    and the bottom/top classes must not depend on the view; both facts are
    asserted exhaustively before the result is validated as an orthoposet.
    """
    rs = brs.rs
    n = s.order.n
    ortho = [None] * n
    for c in range(n):
        images = set()
        for v, x in s.classes[c]:
            o = brs.ortho_of(v)
            images.add(s.embed[(v, o.elements[o.ortho[o.idx(x)]])])
        if len(images) != 1:
            raise InternalCheckError(
                "ill-defined-ortho",
                f"complement of class {s.label(c)!r} depends on the representative",
                (s.label(c),),
            )
        ortho[c] = images.pop()
    bottoms = {s.embed[(v, o.elements[o.least])] for v, o in zip(rs.views, brs.orthos)}
    tops = {s.embed[(v, o.elements[o.greatest])] for v, o in zip(rs.views, brs.orthos)}
    if len(bottoms) != 1 or len(tops) != 1:
        raise InternalCheckError("ill-defined-bounds", "sum bounds depend on the view", ())
    return OrthoPoset(s.order, ortho)
