import random

import pytest

from euclid_kernel.errors import ContractError, HypothesisViolated
from euclid_kernel.field.backend import CONSTRUCTIBLE, get_backend
from euclid_kernel.geometry.primitives import Point, line
from euclid_kernel.postulates import (
    MEETS,
    MEETS_WITH_BETWEENNESS,
    MEETS_WRONG_SIDE,
    UNDEFINED,
    check_aie,
    check_playfair,
    dehn_instance,
    dehn_playfair,
    load_instance,
    playfair_family,
    random_instance,
    try_euclid5,
    try_strong_parallel,
)
from euclid_kernel.script import corpus_path

from helpers import ln, pt

F = CONSTRUCTIBLE


def test_aie_witness():
    p, q = pt(F, 0, 1), pt(F, 0, 0)
    L = ln(F, (1, 0), (0, 0))
    K = ln(F, (0, 1), (-1, 1))
    r, t, s = check_aie(p, q, L, K)
    assert t == pt(F, 0, "1/2")
    assert r != s
    with pytest.raises(ContractError):
        check_aie(p, pt(F, 0, 5), L, K)


def test_aie_rejects_non_alternate_lines():
    p, q = pt(F, 0, 1), pt(F, 0, 0)
    L = ln(F, (1, 0), (0, 0))
    K = ln(F, (0, 1), (1, 2))
    assert check_aie(p, q, L, K).reason == "not-alternate"


def test_dehn_instance_on_both_backends():
    Bd = get_backend("puiseux-bounded", 16)
    rep = try_euclid5(dehn_instance(Bd))
    assert rep.verdict == UNDEFINED and rep.undefined.reason == "out-of-ring"
    x, y = rep.escape
    assert x.startswith("-t^-1 ") and y.startswith("0 ")
    assert try_strong_parallel(dehn_instance(Bd)).verdict == UNDEFINED
    c = try_euclid5(dehn_instance(F))
    assert c.verdict == MEETS_WITH_BETWEENNESS
    assert c.point == pt(F, -1000, 0)


def test_dehn_instance_with_standard_slope_meets():
    Bd = get_backend("puiseux-bounded", 16)
    rep = try_euclid5(dehn_instance(Bd, Bd.one))
    assert rep.verdict == MEETS_WITH_BETWEENNESS
    assert rep.point == Point(-Bd.one, Bd.zero)


def test_truncation_order_4_gives_the_same_verdicts():
    Bd = get_backend("puiseux-bounded", 4)
    assert try_euclid5(dehn_instance(Bd)).verdict == UNDEFINED
    assert all(r.holds for _, _, r in playfair_family(Bd))


def test_playfair_holds_on_the_bounded_family():
    Bd = get_backend("puiseux-bounded", 16)
    fam = playfair_family(Bd)
    assert len(fam) == 64
    assert all(r.holds for _, _, r in fam)
    d = dehn_playfair(Bd)
    assert not d.m_parallel and d.holds
    assert d.m_meets_l.reason == "out-of-ring"


def test_playfair_contract():
    L = ln(F, (0, 0), (1, 0))
    with pytest.raises(ContractError):
        check_playfair(L, pt(F, 0, 0), L, L)


def test_hypotheses_are_checked():
    inst = dehn_instance(F)
    bad = type(inst)(inst.p, inst.q, inst.r, inst.s, inst.t, inst.p, name="a on K")
    with pytest.raises(HypothesisViolated):
        try_euclid5(bad)


def test_random_instances_meet_on_the_right_side():
    rng = random.Random(3)
    for _ in range(40):
        inst = random_instance(rng, F)
        rep = try_euclid5(inst)
        assert rep.verdict == MEETS_WITH_BETWEENNESS
        assert rep.verdict != MEETS_WRONG_SIDE
        if inst.spp_hyp:
            assert try_strong_parallel(inst).verdict == MEETS


@pytest.mark.parametrize("name,verdicts", [
    ("dehn_bounded", {"euclid5": UNDEFINED}),
    ("dehn_constructible", {"euclid5": MEETS_WITH_BETWEENNESS}),
    ("euclid5_transversal", {"euclid5": MEETS_WITH_BETWEENNESS, "spp": MEETS}),
    ("spp_other_side", {"spp": MEETS}),
])
def test_bundled_instances(name, verdicts):
    inst = load_instance(corpus_path("instances") / f"{name}.json")
    attempts = {"euclid5": try_euclid5, "spp": try_strong_parallel}
    for post, want in verdicts.items():
        assert attempts[post](inst).verdict == want


def test_spp_instance_fails_euclid5_hypotheses():
    inst = load_instance(corpus_path("instances") / "spp_other_side.json")
    assert inst.spp_hyp and not inst.euclid5_hyp
    assert try_strong_parallel(inst).point == pt(F, 1, 1)


def test_report_json_shape():
    Bd = get_backend("puiseux-bounded", 16)
    d = try_euclid5(dehn_instance(Bd)).to_dict(Bd)
    assert d["verdict"] == UNDEFINED and d["field"] == "puiseux-bounded"
    assert d["undefined"]["reason"] == "out-of-ring"
    assert "full_field_point" in d and all(d["hypotheses"].values())
