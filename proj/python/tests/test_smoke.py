import pytest

import sufficientarian as sf


def test_fixtures_and_counts():
    assert {"B2", "C3", "G2", "G3", "D12", "U5", "U9"} <= set(sf.fixture_names())
    assert [sf.ordered_bell(k) for k in range(5)] == [1, 1, 3, 13, 75]


def test_leximin():
    assert sf.leximin_compare(["1", "3"], ["2", "2"]) == -1
    assert sf.leximin_compare(["1/2", "1"], ["1", "1/2"]) == 0
    assert sf.leximin_compare(["2", "2"], ["3", "1"]) == 1


def test_check_exit_codes():
    code, report = sf.check("B2", {"type": "sufficientarian", "S": ["1"]})
    assert code == 0
    assert report["holds"] is True

    code, report = sf.check("U5", {"type": "example2", "tau": "1/2"}, axioms=["separability"])
    assert code == 1
    witness = report["verdicts"][0]["witness"]
    assert len(witness["profiles"]) == 4

    code, report = sf.check("NoSuchSpace", {"type": "min"})
    assert code == 2
    assert report["error"]["code"] == "InvalidInput"


def test_derive_threshold():
    code, report = sf.derive("G2", {"type": "sufficientarian", "S": ["(1,0)", "(1,1)"]})
    assert code == 0
    assert report["classification"]["threshold"]["beta"] == "(1,0)"


def test_enumerate_and_search():
    code, report = sf.enumerate("B2", mode="direct")
    assert code == 0
    assert (report["count"], report["symmetric"]) == (75, 13)

    code, report = sf.search("B2", ["weak_order", "symmetry", "separability", "sj"])
    assert code == 0
    assert report["count"] == 3

    code, report = sf.search("B2", ["weak_order"], violate=["weak_order"])
    assert code == 1
    assert report["count"] == 0
    assert report["first"] is None


@pytest.mark.parametrize("target", ["independence", "thm2", "prop4", "example3"])
def test_reproduce(target):
    code, report = sf.reproduce(target, workers=2)
    assert code == 0
    assert report["ok"] is True
