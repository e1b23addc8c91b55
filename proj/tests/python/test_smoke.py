from fractions import Fraction

import pytest

import compmat


def member(verdicts, name):
    return next(v for v in verdicts if v["class"] == name)["member"]


def test_classify_returns_fractions_and_witnesses():
    verdicts = compmat.classify([[2, -1], [-4, 2]])
    assert member(verdicts, "ColumnCompetent")
    assert member(verdicts, "P0")
    r0 = next(v for v in verdicts if v["class"] == "R0")
    assert not r0["member"]
    assert r0["witness_vector"] == [Fraction(1), Fraction(2)]


def test_competence_witness():
    v = compmat.is_column_competent([[1, 4, 3], [2, 1, 5], [3, 2, 0]])
    assert not v["member"]
    assert v["witness_vector"] == [0, 0, 1]


def test_accepts_strings_and_fractions():
    v = compmat.is_column_competent([["1/2", Fraction(1, 3)], [0, "0"]])
    assert not v["member"]
    with pytest.raises(TypeError):
        compmat.classify([["1/0", 1], [0, 1]])


def test_enumerate_ray_instance():
    pieces = compmat.enumerate([[-1, 3], [2, -6]], [1, -2])
    assert len(pieces) == 1
    p = pieces[0]
    assert p["particular"]["z"] == [1, 0]
    assert p["ray_basis"] == [[3, 1]]
    assert p["w_constant"]
    w = compmat.w_solutions([[-1, 3], [2, -6]], [1, -2])
    assert w["finite"] and w["w_values"] == [[0, 0]]


def test_lemke_identity():
    r = compmat.lemke([[1, 0], [0, 1]], [-1, -2])
    assert r["status"] == "solved"
    assert r["solution"]["z"] == [1, 2]
    assert r["solution"]["w"] == [0, 0]


def test_degree_minus_identity():
    d = compmat.degree([[-1, 0], [0, -1]], [1, 1])
    assert d["value"] == 0
    assert [c["index"] for c in d["contributions"]] == [1, -1, -1, 1]
    with pytest.raises(compmat.DegenerateQ):
        compmat.degree([[1, 0], [0, 1]], [0, 1])


def test_ppt_and_wcheck():
    p = compmat.ppt([[2, 1], [1, -1]], [0, 1])
    assert p["pivot_det_sign"] == -1
    assert p["transformed"] == [[Fraction(1, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(-2, 3)]]
    with pytest.raises(compmat.SingularPivot):
        compmat.ppt([[2, -1], [-4, 2]], [0, 1])

    c = compmat.wcheck([[-1, 3], [2, -6]], [1, -2], [4, 1])
    assert c["alpha"] == [] and c["beta"] == [0, 1]
    assert not c["certificate_holds"]
    assert c["violating_pair"]["z_beta"] == [3, 1]
    with pytest.raises(compmat.InvalidSolution):
        compmat.wcheck([[-1, 3], [2, -6]], [1, -2], [1, 1])


def test_parse():
    d = compmat.parse('{"n": 2, "A": [["1/2", "0"], ["0", "1"]], "q": ["1", "-1"]}')
    assert d["n"] == 2
    assert d["A"][0][0] == Fraction(1, 2)
    with pytest.raises(compmat.ParseError):
        compmat.parse('{"n": 1, "A": [["1/0"]]}')
