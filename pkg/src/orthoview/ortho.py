"""Orthocomplemented posets and their classification."""

from __future__ import annotations

from dataclasses import dataclass

from .poset import OK, ValidationError, Verdict


class OrthoPoset:
    """Bounded poset with an orthocomplementation x -> x'.

    Validation is exhaustive: the map must be involutive and antitone, the
    poset bounded, and every x must satisfy meet(x, x') = 0 and
    join(x, x') = 1 (both existing). The first failure in index order is
    reported.
    """

    def __init__(self, poset, ortho):
        ortho = tuple(int(i) for i in ortho)
        n = poset.n
        els = poset.elements
        if len(ortho) != n or any(not 0 <= i < n for i in ortho):
            raise ValidationError("bad-ortho", "orthocomplement map must cover every element")
        least, greatest = poset.bounds()
        if least is None or greatest is None:
            raise ValidationError("not-bounded", "no least/greatest element")
        for i in range(n):
            if ortho[ortho[i]] != i:
                raise ValidationError("not-involutive", f"({els[i]!r}')' != {els[i]!r}", (els[i],))
        for i in range(n):
            for j in range(n):
                if poset.leq[i, j] and not poset.leq[ortho[j], ortho[i]]:
                    raise ValidationError(
                        "not-antitone",
                        f"{els[i]!r} <= {els[j]!r} but complements are not reversed",
                        (els[i], els[j]),
                    )
        for i in range(n):
            if poset.meet(i, ortho[i]) != least or poset.join(i, ortho[i]) != greatest:
                raise ValidationError(
                    "complement-law",
                    f"{els[i]!r} and its complement do not meet at 0 / join at 1",
                    (els[i],),
                )
        self.poset = poset
        self.ortho = ortho
        self.least = least
        self.greatest = greatest
        self._cache = {}

    @property
    def elements(self):
        return self.poset.elements

    @property
    def n(self):
        return self.poset.n

    def idx(self, element):
        return self.poset.idx(element)

    def le(self, i, j):
        return self.poset.le(i, j)

    def join(self, i, j):
        return self.poset.join(i, j)

    def meet(self, i, j):
        return self.poset.meet(i, j)

    def orthogonal(self, i, j):
        """x is orthogonal to y iff x <= y'."""
        return self.poset.le(i, self.ortho[j])

    def __repr__(self):
        return f"OrthoPoset({self.n} elements)"


def _cached(o, key, compute):
    if key not in o._cache:
        o._cache[key] = compute()
    return o._cache[key]


def is_lattice(o):
    return _cached(o, "lattice", o.poset.is_lattice)


def is_boolean_algebra(o):
    """Lattice + distributive, with the orthocomplement as complement."""

    def compute():
        lat = is_lattice(o)
        if not lat:
            return Verdict(False, "not-lattice", lat.witness)
        els = o.elements
        for x in range(o.n):
            for y in range(o.n):
                for z in range(o.n):
                    lhs = o.meet(x, o.join(y, z))
                    rhs = o.join(o.meet(x, y), o.meet(x, z))
                    if lhs != rhs:
                        return Verdict(False, "not-distributive", (els[x], els[y], els[z]))
        return OK

    return _cached(o, "boolean", compute)


def is_orthomodular_poset(o):
    """Orthogonal joins must exist and x <= y must force y = x v (y ^ x').

    Existence is checked before the law: a missing join/meet is reported
    under its own code, never silently conflated with a law violation.
    """

    def compute():
        els = o.elements
        for x in range(o.n):
            for y in range(o.n):
                if o.orthogonal(x, y) and o.join(x, y) is None:
                    return Verdict(False, "orthogonal-join-missing", (els[x], els[y]))
        for x in range(o.n):
            for y in range(o.n):
                if not o.le(x, y) or x == y:
                    continue
                m = o.meet(y, o.ortho[x])
                if m is None:
                    return Verdict(False, "law-meet-missing", (els[x], els[y]))
                j = o.join(x, m)
                if j is None:
                    return Verdict(False, "law-join-missing", (els[x], els[y]))
                if j != y:
                    return Verdict(False, "law-violation", (els[x], els[y]))
        return OK

    return _cached(o, "omp", compute)


def is_orthomodular_lattice(o):
    omp = is_orthomodular_poset(o)
    if not omp:
        return omp
    return is_lattice(o)


@dataclass(frozen=True)
class StructureClass:
    """Classification flags with the verdicts (and witnesses) behind them."""

    boolean: Verdict
    ortholattice: Verdict
    omp: Verdict
    oml: Verdict

    @property
    def is_boolean(self):
        return self.boolean.ok

    @property
    def is_ortholattice(self):
        return self.ortholattice.ok

    @property
    def is_omp(self):
        return self.omp.ok

    @property
    def is_oml(self):
        return self.oml.ok

    def flags(self):
        return {
            "is_boolean": self.is_boolean,
            "is_ortholattice": self.is_ortholattice,
            "is_omp": self.is_omp,
            "is_oml": self.is_oml,
        }


def classify(o):
    """All four structure flags; booleans imply OMLs imply OMPs by construction."""
    sc = StructureClass(
        boolean=is_boolean_algebra(o),
        ortholattice=is_lattice(o),
        omp=is_orthomodular_poset(o),
        oml=is_orthomodular_lattice(o),
    )
    assert not sc.is_boolean or sc.is_oml
    assert not sc.is_oml or (sc.is_omp and sc.is_ortholattice)
    return sc


def sasaki_projection(o, x, y):
    """(x v y') ^ y, total on orthomodular lattices only."""
    oml = is_orthomodular_lattice(o)
    if not oml:
        raise ValidationError("not-oml", f"sasaki projection needs an orthomodular lattice: {oml.code}", oml.witness)
    return o.meet(o.join(x, o.ortho[y]), y)


def derive_boolean_ortho(p):
    """The complement map a boolean-shaped bare poset determines, or a
    failure Verdict. In a distributive complemented lattice complements are
    unique, so no choice is involved."""
    least, greatest = p.bounds()
    if least is None or greatest is None:
        return Verdict(False, "not-bounded", ())
    lat = p.is_lattice()
    if not lat:
        return Verdict(False, "not-lattice", lat.witness)
    els = p.elements
    for x in range(p.n):
        for y in range(p.n):
            for z in range(p.n):
                if p.meet(x, p.join(y, z)) != p.join(p.meet(x, y), p.meet(x, z)):
                    return Verdict(False, "not-distributive", (els[x], els[y], els[z]))
    ortho = []
    for x in range(p.n):
        c = next((y for y in range(p.n) if p.meet(x, y) == least and p.join(x, y) == greatest), None)
        if c is None:
            return Verdict(False, "not-complemented", (els[x],))
        ortho.append(c)
    return ortho
