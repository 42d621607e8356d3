"""Hand-built models and dumb oracles shared across the test suite.

Everything here is constructed directly from definitions (explicit order
rules, raw scans) so it can serve as an independent check on the library's
own algorithms.
"""

import numpy as np

from orthoview import FinitePoset, OrthoPoset


# -- literal structures, built from order rules rather than cover closure ----


def boolean_algebra(k):
    """2^k as bitmask subsets: leq is inclusion, ortho is set complement."""
    n = 1 << k
    elements = [f"s{m:0{k}b}" for m in range(n)] if k else ["s"]
    leq = np.array([[(i | j) == j for j in range(n)] for i in range(n)], dtype=bool)
    ortho = [(n - 1) ^ i for i in range(n)]
    return elements, leq, ortho


def mo(k):
    """0 and 1 plus k incomparable complement pairs."""
    elements = ["0"] + [e for i in range(k) for e in (f"x{i}", f"x{i}'")] + ["1"]
    n = len(elements)
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    ortho = [n - 1] + [((i - 1) ^ 1) + 1 for i in range(1, n - 1)] + [0]
    return elements, leq, ortho


def double_chain(h):
    """0 < c1 < ... < ch < 1 next to the reversed chain of complements."""
    elements = ["0"] + [f"c{i}" for i in range(1, h + 1)] + [f"c{i}'" for i in range(1, h + 1)] + ["1"]
    n = len(elements)
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    for i in range(1, h + 1):
        for j in range(i, h + 1):
            leq[i, j] = True          # c_i <= c_j
            leq[h + j, h + i] = True  # c_j' <= c_i'
    ortho = [n - 1] + [h + i for i in range(1, h + 1)] + [i for i in range(1, h + 1)] + [0]
    return elements, leq, ortho


def greechie_pasting(blocks):
    """Paste three-atom boolean blocks: 0 < atoms < coatoms < 1, an atom
    sitting under a coatom iff the two atoms share a block."""
    atoms = sorted({a for b in blocks for a in b})
    elements = ["0"] + atoms + [a + "'" for a in atoms] + ["1"]
    n = len(elements)
    k = len(atoms)
    pos = {a: 1 + i for i, a in enumerate(atoms)}
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    for block in blocks:
        for x in block:
            for y in block:
                if x != y:
                    leq[pos[x], k + pos[y]] = True
    ortho = [n - 1] + [k + pos[a] for a in atoms] + [pos[a] for a in atoms] + [0]
    return elements, leq, ortho


def greechie_cycle(m):
    return greechie_pasting([(f"a{i}", f"b{i}", f"a{(i + 1) % m}") for i in range(m)])


def greechie_chain(m):
    return greechie_pasting([(f"a{i}", f"b{i}", f"a{i + 1}") for i in range(m)])


def product(model1, model2):
    els1, leq1, ortho1 = model1
    els2, leq2, ortho2 = model2
    elements = [f"{a}.{b}" for a in els1 for b in els2]
    n1, n2 = len(els1), len(els2)
    leq = np.kron(leq1, leq2).astype(bool)
    ortho = [ortho1[i] * n2 + ortho2[j] for i in range(n1) for j in range(n2)]
    return elements, leq, ortho


def shuffled(model, rng):
    """The same structure with a random element permutation applied."""
    els, leq, ortho = model
    n = len(els)
    perm = list(range(n))
    rng.shuffle(perm)
    new_els = [None] * n
    new_leq = np.zeros((n, n), dtype=bool)
    new_ortho = [0] * n
    for i in range(n):
        new_els[perm[i]] = els[i]
        new_ortho[perm[i]] = perm[ortho[i]]
        for j in range(n):
            new_leq[perm[i], perm[j]] = leq[i, j]
    return new_els, new_leq, new_ortho


def as_orthoposet(model):
    els, leq, ortho = model
    return OrthoPoset(FinitePoset(els, leq), ortho)


_FAMILIES = (
    lambda: boolean_algebra(1),
    lambda: boolean_algebra(2),
    lambda: boolean_algebra(3),
    lambda: mo(2),
    lambda: mo(3),
    lambda: mo(4),
    lambda: mo(5),
    lambda: double_chain(2),
    lambda: double_chain(3),
    lambda: double_chain(4),
    lambda: double_chain(5),
    lambda: greechie_chain(2),
    lambda: product(boolean_algebra(1), mo(2)),
    lambda: product(boolean_algebra(1), double_chain(2)),
    lambda: product(boolean_algebra(1), boolean_algebra(2)),
)


def random_orthoposet(rng):
    """A random bounded orthoposet with at most 12 elements: a random
    family member under a random relabelling."""
    model = rng.choice(_FAMILIES)()
    return as_orthoposet(shuffled(model, rng))


# -- dumb oracles -------------------------------------------------------------


def oracle_join(leq, i, j):
    n = len(leq)
    ub = [u for u in range(n) if leq[i, u] and leq[j, u]]
    least = [u for u in ub if all(leq[u, v] for v in ub)]
    return least[0] if least else None


def oracle_meet(leq, i, j):
    n = len(leq)
    lb = [u for u in range(n) if leq[u, i] and leq[u, j]]
    greatest = [u for u in lb if all(leq[v, u] for v in lb)]
    return greatest[0] if greatest else None


def oracle_is_lattice(leq):
    n = len(leq)
    return all(
        oracle_join(leq, i, j) is not None and oracle_meet(leq, i, j) is not None
        for i in range(n)
        for j in range(n)
    )


def oracle_distributive(leq):
    n = len(leq)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                jn = oracle_join(leq, y, z)
                my, mz = oracle_meet(leq, x, y), oracle_meet(leq, x, z)
                if oracle_meet(leq, x, jn) != oracle_join(leq, my, mz):
                    return False
    return True


def oracle_is_omp(leq, ortho):
    n = len(leq)
    for x in range(n):
        for y in range(n):
            if leq[x, ortho[y]] and oracle_join(leq, x, y) is None:
                return False
    for x in range(n):
        for y in range(n):
            if not leq[x, y]:
                continue
            m = oracle_meet(leq, y, ortho[x])
            if m is None or oracle_join(leq, x, m) != y:
                return False
    return True


def mutate_random_entry(rs, rng):
    """A copy of rs with one random transform entry rewired at random."""
    from orthoview import RepresentationSystem

    pair = rng.choice(sorted(rs.transforms))
    table = list(rs.transforms[pair])
    x = rng.randrange(len(table))
    table[x] = rng.randrange(rs.poset_of(pair[0]).n)
    transforms = dict(rs.transforms)
    transforms[pair] = tuple(table)
    return RepresentationSystem(rs.views, rs.posets, transforms)


def reverify_rs_witness(rs, verdict):
    """Check a transformation-law witness by direct formula evaluation."""
    code, w = verdict.code, verdict.witness
    if code == "identity":
        i, x = w
        p = rs.poset_of(i)
        return rs.transforms[(i, i)][p.idx(x)] != p.idx(x)
    if code == "monotony":
        i, j, x, y = w
        src, dst = rs.poset_of(j), rs.poset_of(i)
        t = rs.transforms[(i, j)]
        return src.le(src.idx(x), src.idx(y)) and not dst.le(t[src.idx(x)], t[src.idx(y)])
    if code == "composition":
        i, j, k, x = w
        src, dst = rs.poset_of(k), rs.poset_of(i)
        xi = src.idx(x)
        direct = rs.transforms[(i, k)][xi]
        routed = rs.transforms[(i, j)][rs.transforms[(j, k)][xi]]
        return not dst.le(direct, routed)
    return False


def brute_force_subalgebras(o):
    """Every carrier that passes the subalgebra laws, by filtering all
    element subsets. Only usable for small hosts."""
    n = o.n
    leq = o.poset.leq
    out = set()
    for mask in range(1 << n):
        sub = [i for i in range(n) if mask >> i & 1]
        inside = set(sub)
        if o.least not in inside or o.greatest not in inside:
            continue
        if any(o.ortho[i] not in inside for i in sub):
            continue
        ok = True
        for i in sub:
            for j in sub:
                jn, mt = oracle_join(leq, i, j), oracle_meet(leq, i, j)
                if jn is None or mt is None or jn not in inside or mt not in inside:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        induced = leq[np.ix_(sub, sub)]
        if not oracle_distributive(induced):
            continue
        out.add(frozenset(sub))
    return out
