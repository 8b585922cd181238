import pytest

from euclid_kernel.field.axioms import AXIOMS, check_ef_axioms, default_samples
from euclid_kernel.field.backend import get_backend


@pytest.mark.parametrize("name", ["constructible", "puiseux"])
def test_euclidean_fields_satisfy_all_axioms(name):
    report = check_ef_axioms(get_backend(name, 8))
    assert report.all_hold(), report.to_text()
    assert set(report.results) == set(AXIOMS)


def test_bounded_ring_fails_only_ef1_at_t():
    B = get_backend("puiseux-bounded", 8)
    report = check_ef_axioms(B)
    assert report.failing() == ["EF1"]
    witness = report.results["EF1"].counterexample
    assert witness is not None and witness[0] == B.t
    assert report.holds("EF7") and report.holds("EF8")


def test_report_serializes():
    B = get_backend("puiseux-bounded", 8)
    d = check_ef_axioms(B).to_dict()
    assert d["up_to_truncation"] is True
    ef1 = next(a for a in d["axioms"] if a["axiom"] == "EF1")
    assert ef1["verdict"] == "fails"
    assert ef1["counterexample"] == ["t + O(t^8)"]
    assert "EF1  FAILS" in check_ef_axioms(B).to_text()


def test_samples_must_lie_in_the_ring():
    B = get_backend("puiseux-bounded", 8)
    with pytest.raises(ValueError):
        check_ef_axioms(B, default_samples(B) + [B.leaf_recip(B.t)])
