from euclid_kernel.field.backend import CONSTRUCTIBLE, get_backend
from euclid_kernel.geometry import primitives as pr
from euclid_kernel.geometry.partial import Undefined
from euclid_kernel.selftest import SUITES, SuiteContext, run_suites, suite_orientation


def flipped_intersect_circles(C, K):
    """A deliberately defective build: components swapped."""
    pair = pr.intersect_circles(C, K)
    return pair if isinstance(pair, Undefined) else (pair[1], pair[0])


def test_all_suites_pass_at_default_seed():
    results = run_suites(SuiteContext(CONSTRUCTIBLE, scale=0.5))
    assert [r.name for r in results] == list(SUITES)
    assert all(r.passed for r in results), "\n".join(r.line() for r in results)


def test_orientation_flipped_build_is_caught():
    ctx = SuiteContext(CONSTRUCTIBLE)
    res = suite_orientation(ctx, intersect_circles=flipped_intersect_circles)
    assert not res.passed
    assert "first circle-circle component is not the left turn" in res.failures
    overridden = run_suites(ctx, ["orientation"],
                            {"orientation": lambda c: suite_orientation(c, flipped_intersect_circles)})
    assert not overridden[0].passed


def test_puiseux_suites_are_qualified():
    ctx = SuiteContext(get_backend("puiseux", 8), scale=0.3)
    for r in run_suites(ctx, ["field-axioms", "field-identities", "orientation"]):
        assert r.passed and r.qualifier == "up to truncation"


def test_suites_are_deterministic_per_seed():
    a = run_suites(SuiteContext(CONSTRUCTIBLE, seed=9, scale=0.2), ["euclid-i2", "inner-pasch"])
    b = run_suites(SuiteContext(CONSTRUCTIBLE, seed=9, scale=0.2), ["euclid-i2", "inner-pasch"])
    assert [r.to_dict() for r in a] == [r.to_dict() for r in b]


def test_a_crashing_suite_is_reported_not_raised():
    def boom(ctx):
        raise ValueError("kaput")

    (r,) = run_suites(SuiteContext(), ["euclid-i2"], {"euclid-i2": boom})
    assert not r.passed and "kaput" in r.failures[0]
