from fractions import Fraction

import pytest

import ezdlab


def test_hilbert_complete_intersection():
    h = ezdlab.hilbert("x1^3, x2^3", nvars=2, bound=5)
    assert h["values"] == [1, 2, 3, 2, 1, 0]
    assert h["artinian_within_bound"] is True
    assert h["kind"] == "Monomial"


def test_hilbert_binomial_ideal():
    h = ezdlab.hilbert("x1^2, x1*x2 + x2^2", bound=3)
    assert h["values"] == [1, 2, 1, 0]
    assert h["kind"] == "MonomialPlusOneBinomial"


def test_generic_ezd_monomial_is_exact():
    v = ezdlab.generic_ezd("x1^2, x2^2", nvars=2)
    assert v["decision"] == "GenericallyYes"
    assert v["exact"] is True
    assert v["witness_q"] == "x1 - x2"


def test_generic_ezd_no():
    v = ezdlab.generic_ezd("x1^2, x1*x3, x2^2, x2*x3, x3^2")
    assert v["decision"] == "No"


def test_sampled_decision_is_reproducible():
    a = ezdlab.generic_ezd("x1^2, x1*x2 + x2^2", trials=5, seed=9)
    b = ezdlab.generic_ezd("x1^2, x1*x2 + x2^2", trials=5, seed=9)
    assert a == b
    assert a["decision"] == "GenericallyYes"
    assert a["exact"] is False
    assert len(a["outcomes"]) == 5


def test_ezd_pair_and_complement():
    ring = "x1^2, x2^2, x2*x3, x3^2"
    r = ezdlab.ezd_pair(ring, "x1 + x2 + x3", "x1 - x2 - x3")
    assert r["verdict"] == "ExactPair"
    assert all(row["ann_x_equals_ideal_y"] and row["ann_y_equals_ideal_x"] for row in r["table"])
    c = ezdlab.ezd_complement(ring, "x1 + x2 + x3")
    assert c["q"] == "x1 - x2 - x3"
    assert ezdlab.ezd_pair("x1^2, x2^2", "x1 + x2", "x1 + x2")["verdict"] == "NotPair"


def test_wlp_socle_yoshino():
    assert ezdlab.wlp("x1^3, x2^3")["holds"] is True
    s = ezdlab.socle("x1^2, x1*x2, x2^2")
    assert s["dims"] == [0, 2]
    assert s["gorenstein"] is False
    y = ezdlab.yoshino("x1^2, x2^2, x2*x3, x3^2")
    assert (y["c1"], y["c2"], y["gorenstein"]) == (True, True, False)
    assert y["N"] == y["minimal_generators"] == 4
    assert ezdlab.generator_count_N(2) == 2


def test_example_family():
    ex = ezdlab.example(2, 3)
    assert ex["Q"] == "x1^2 - x1*x2 + x2^2"
    assert ex["report"]["verdict"] == "ExactPair"
    assert ex["q_matches_canonical"] is True
    with pytest.raises(ValueError):
        ezdlab.example(1, 2)


def test_scans():
    mono = ezdlab.scan("monomial", nvars=2, max_degree=2, full=True)
    assert mono["examined"] == 2
    assert mono["counterexamples"] == []
    assert len(mono["instances"]) == 2
    binom = ezdlab.scan("binomial", nvars=3, trials=5)
    assert binom["passed"] is True
    assert ezdlab.scan("monomial", nvars=3, max_degree=3, workers=1) == \
        ezdlab.scan("monomial", nvars=3, max_degree=3, workers=4)


def test_errors():
    with pytest.raises(ezdlab.ParseError):
        ezdlab.hilbert("x1^2,, x2^2")
    with pytest.raises(ezdlab.NonHomogeneousError):
        ezdlab.hilbert("x1 + x2^2")
    with pytest.raises(ValueError):
        ezdlab.scan("cubic")


def test_rank_and_normalization():
    assert ezdlab.rank([[1, 2], [2, 4]]) == 1
    assert ezdlab.rank([[Fraction(1, 2), 1], [1, Fraction(-3, 4)]]) == 2
    n = ezdlab.normalize_ideal("x1^2, 3*x1*x2 + 3*x3^2")
    assert n["ideal"] == "x1^2, x1*x2 + x3^2"
    assert n["kind"] == "MonomialPlusOneBinomial"
