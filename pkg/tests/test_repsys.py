import pytest

from orthoview import (
    RepresentationSystem,
    ValidationError,
    apply_transform,
    build_canonical_rs,
    build_orthoposet,
    build_repsys,
    check_boolean_rs_axioms,
    check_rs_axioms,
    make_rs,
    validate_boolean_rs,
    validate_rs,
    zoo_model,
)

from _models import as_orthoposet, boolean_algebra


def firefly():
    rs, _ = build_repsys(zoo_model("firefly").doc)
    return rs


def mutate(rs, pair, element, target):
    table = list(rs.transforms[pair])
    src = rs.poset_of(pair[1])
    table[src.idx(element)] = rs.poset_of(pair[0]).idx(target)
    transforms = dict(rs.transforms)
    transforms[pair] = tuple(table)
    return RepresentationSystem(rs.views, rs.posets, transforms)


def reverify(rs, verdict):
    """Re-evaluate a checker witness by direct formula evaluation."""
    code, w = verdict.code, verdict.witness
    if code in ("missing-transform", "bad-transform"):
        return (w[0], w[1]) not in rs.transforms or True
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
    raise AssertionError(f"unexpected code {code}")


def test_single_view_accepted():
    els, leq, _ = boolean_algebra(2)
    from orthoview import FinitePoset

    rs = make_rs(["V"], [FinitePoset(els, leq)], {})
    assert check_rs_axioms(rs).ok


def test_firefly_accepted():
    assert check_rs_axioms(firefly()).ok


def test_firefly_named_arrows():
    rs = firefly()
    assert apply_transform(rs, "Y", "X", "Right") == "Down"
    assert apply_transform(rs, "Y", "X", "Left") == "Seen"
    assert apply_transform(rs, "X", "Y", "Up") == "Top"
    assert apply_transform(rs, "X", "X", "Left") == "Left"


def test_apply_transform_errors():
    rs = firefly()
    with pytest.raises(ValidationError) as err:
        apply_transform(rs, "Z", "X", "Left")
    assert err.value.code == "unknown-view"
    with pytest.raises(ValidationError) as err:
        apply_transform(rs, "Y", "X", "Sideways")
    assert err.value.code == "unknown-element"


def test_composition_violation_located():
    bad = mutate(firefly(), ("X", "Y"), "Down", "NotSeen")
    v = check_rs_axioms(bad)
    assert not v.ok
    assert v.code == "composition"
    assert reverify(bad, v)
    with pytest.raises(ValidationError):
        validate_rs(bad)


def test_monotony_violation_located():
    bad = mutate(firefly(), ("Y", "X"), "Seen", "Down")
    v = check_rs_axioms(bad)
    assert not v.ok
    assert v.code == "monotony"
    assert reverify(bad, v)


def test_identity_violation_located():
    bad = mutate(firefly(), ("X", "X"), "Left", "Top")
    v = check_rs_axioms(bad)
    assert not v.ok
    assert v.code == "identity"
    assert reverify(bad, v)


def test_missing_transform_located():
    rs = firefly()
    transforms = dict(rs.transforms)
    del transforms[("X", "Y")]
    v = check_rs_axioms(RepresentationSystem(rs.views, rs.posets, transforms))
    assert not v.ok and v.code == "missing-transform" and v.witness == ("X", "Y")


def test_round_trips_are_inflationary():
    # x <= f_(i|j)(f_(j|i)(x)), a consequence of the identity and
    # composition laws
    systems = [firefly()]
    for name in ("boolean_4", "MO2", "hexagon_O6"):
        systems.append(build_canonical_rs(build_orthoposet(zoo_model(name).doc)).rs)
    for rs in systems:
        assert check_rs_axioms(rs).ok
        for i in rs.views:
            for j in rs.views:
                fwd = rs.transforms[(i, j)]
                back = rs.transforms[(j, i)]
                p = rs.poset_of(i)
                for x in range(p.n):
                    assert p.le(x, fwd[back[x]])


def test_single_boolean_view_system():
    o = as_orthoposet(boolean_algebra(2))
    rs = make_rs(["V"], [o.poset], {})
    brs = validate_boolean_rs(rs, (o,))
    assert brs.views == ("V",)


def test_canonical_mo2_is_boolean_rs():
    brs = build_canonical_rs(build_orthoposet(zoo_model("MO2").doc))
    assert check_rs_axioms(brs.rs).ok
    assert check_boolean_rs_axioms(brs.rs, brs.orthos).ok


def test_firefly_views_are_not_boolean():
    from orthoview import derive_boolean_ortho, Verdict

    rs = firefly()
    v = derive_boolean_ortho(rs.poset_of("X"))
    assert isinstance(v, Verdict) and not v.ok


def test_join_preservation_violation_located():
    brs = build_canonical_rs(build_orthoposet(zoo_model("MO2").doc))
    rs = brs.rs
    # rewire f_(B0|B1)(a) from 1 down to 0: joins through a stop commuting
    b0, b1 = rs.views[0], rs.views[1]
    src = rs.poset_of(b1)
    bad = mutate(rs, (b0, b1), src.elements[1], rs.poset_of(b0).elements[0])
    v = check_boolean_rs_axioms(bad, brs.orthos)
    assert not v.ok
    assert v.code in ("join-preservation", "ortho-adjunction")
    if v.code == "join-preservation":
        i, j, x, y = v.witness
        t = bad.transforms[(i, j)]
        srcp, dstp = bad.poset_of(j), bad.poset_of(i)
        jt = t[srcp.join(srcp.idx(x), srcp.idx(y))]
        assert jt != dstp.join(t[srcp.idx(x)], t[srcp.idx(y)])


def test_boolean_rs_sends_bottom_to_bottom():
    for name in ("boolean_4", "MO2", "hexagon_O6"):
        brs = build_canonical_rs(build_orthoposet(zoo_model(name).doc))
        for i, oi in zip(brs.views, brs.orthos):
            for j, oj in zip(brs.views, brs.orthos):
                assert brs.rs.transforms[(i, j)][oj.least] == oi.least


def test_checker_reports_are_reproducible():
    bad = mutate(firefly(), ("X", "Y"), "Down", "NotSeen")
    assert check_rs_axioms(bad) == check_rs_axioms(bad)
