import json

import pytest

import fideal


def test_parse_and_round_trip():
    ideal = fideal.parse_ideal("n=3; x1*x2, x2*x3")
    assert ideal.n == 3
    assert ideal.generators == [[1, 2], [2, 3]]
    assert str(ideal) == "n=3; x1*x2, x2*x3"
    assert fideal.parse_ideal(json.dumps(ideal.to_json())) == ideal
    assert fideal.Ideal(3, [[2, 3], [1, 2], [1, 2, 3]]) == ideal


def test_errors_carry_codes():
    with pytest.raises(fideal.FidealError, match="IndexOutOfRange"):
        fideal.parse_ideal("n=3; x1*x9")
    with pytest.raises(ValueError, match="ParseError"):
        fideal.parse_ideal("n=2; x1*x1")
    with pytest.raises(fideal.FidealError, match="EmptyIdeal"):
        fideal.nonface_ideal(fideal.SimplicialComplex(3, [[1, 2, 3]]))


def test_complexes_of_support_deficient_ideal():
    ideal = fideal.parse_ideal("n=4; x2*x3, x2*x4, x3*x4")
    assert fideal.facet_complex(ideal).facets == [[2, 3], [2, 4], [3, 4]]
    nonface = fideal.nonface_complex(ideal)
    assert nonface.facets == [[1, 2], [1, 3], [1, 4]]
    assert fideal.f_vector(nonface) == [4, 3]
    assert fideal.nonface_ideal(nonface) == ideal
    assert fideal.stats(ideal)["pure_of_degree"] is None


def test_path_ideal_is_f_ideal():
    ideal = fideal.parse_ideal("n=4; x1*x2, x2*x3, x3*x4")
    verdict, f_facet, f_nonface = fideal.is_f_ideal(ideal)
    assert verdict and f_facet == f_nonface == [4, 3]
    report = fideal.theorem_classify(ideal)
    assert report == {
        "pure_degree2": True, "cond_i": True, "cond_ii": True, "cond_iii": True,
        "f_ideal": True, "f_facet": [4, 3], "f_nonface": [4, 3],
        "height": 2, "unmixed": True,
    }
    covers = fideal.minimal_vertex_covers(ideal)
    assert covers["covers"] == [[1, 3], [2, 3], [2, 4]]
    assert fideal.height(ideal) == 2
    assert fideal.check_lemma_binomial(ideal)
    assert fideal.check_lemma_dimension(ideal)


def test_census(tmp_path):
    assert fideal.count_pure(4, 2) == 41
    row = fideal.run_census(4, 2, generator_count=3, catalog=tmp_path / "c.jsonl")
    assert row["total_pure"] == 16
    assert row["f_ideal_count"] == 12
    assert row["mismatches"] == []
    lines = (tmp_path / "c.jsonl").read_text().splitlines()
    assert len(lines) == 16
    assert sum(json.loads(l)["report"]["f_ideal"] for l in lines) == 12
    sampled = fideal.run_census(8, 2, sample=200, seed=3)
    assert sampled["total_pure"] == 200 and sampled["mode"] == "sampled"
