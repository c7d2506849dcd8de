import pytest

from shadowed_ahp.errors import ParseError
from shadowed_ahp.granular import GFN, IFN, TFN, Crisp, Family, Interval
from shadowed_ahp.problem import (format_entry, format_problem, parse_entry, parse_number,
                                  parse_problem_file, parse_scale_file, with_overrides)
from shadowed_ahp.sfn import SFN

SMALL = """\
problem: tiny
criteria: C1 C2
alternatives: A1 A2  # trailing comment
matrix criteria:
  C1 C2 iv(1, 5)
matrix C1:
  A1 A2 gfn(1/7, 0.9)
matrix C2:
  A2 A1 tfn(1, 3, 5)
"""


def test_numbers():
    assert parse_number("1/7") == 1 / 7
    assert parse_number("0.25") == 0.25
    assert parse_number("1/9.5") == pytest.approx(1 / 9.5, rel=1e-15)
    assert parse_number("-2e-3") == -0.002
    for bad in ("", "1/", "x", "1/0", "1//2"):
        with pytest.raises(ParseError):
            parse_number(bad)


class TestEntries:
    @pytest.mark.parametrize("text, value", [
        ("crisp(1)", Crisp(1)),
        ("iv(1,5)", Interval(1, 5)),
        ("tfn(1/7, 1/5, 1/3)", TFN(1 / 7, 1 / 5, 1 / 3)),
        ("GFN(3, 0.9)", GFN(3, 0.9)),
        ("ifn(4,5,6; 3,5,7)", IFN(TFN(4, 5, 6), TFN(3, 5, 7))),
        ("sfn(0, 0, 0.87, 1.81)", SFN(0, 0, 0.87, 1.81)),
    ])
    def test_kinds(self, text, value):
        assert parse_entry(text) == value

    def test_arity(self):
        with pytest.raises(ParseError, match="tfn takes 3"):
            parse_entry("tfn(1,3)", line=4, column=9)

    @pytest.mark.parametrize("text", ["tfn 1,2,3", "wedge(1,2)", "ifn(1,2,3)", "iv(5,1)",
                                      "crisp()", "ifn(4,5,6; 3,5)"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_entry(text)

    def test_position(self):
        with pytest.raises(ParseError) as ei:
            parse_entry("tfn(1,3)", line=4, column=9)
        assert ei.value.line == 4 and ei.value.column is not None

    @pytest.mark.parametrize("e", [Crisp(1 / 3), Interval(0.2, 1), TFN(1 / 7, 1 / 5, 1 / 3),
                                   GFN(1 / 7, 0.9), IFN(TFN(4, 5, 6), TFN(3, 5, 7)),
                                   SFN(0.1, 0.2, 0.3, 0.4)])
    def test_format_round_trip(self, e):
        assert parse_entry(format_entry(e)) == e


class TestProblemFile:
    def test_small(self):
        p = parse_problem_file(SMALL)
        assert p.name == "tiny" and p.criteria == ("C1", "C2") and p.alternatives == ("A1", "A2")
        m = p.criteria_matrix
        assert m[0, 1] == Interval(1, 5)
        assert m[1, 0] == Interval(1 / 5, 1)
        assert m[0, 0] == Crisp(1)
        assert p.alternative_matrices[0][0, 1] == GFN(1 / 7, 0.9)
        # lower cell given: upper filled from it
        c2 = p.alternative_matrices[1]
        assert c2[1, 0] == TFN(1, 3, 5)
        assert c2[0, 1].params() == pytest.approx((1 / 5, 1 / 3, 1))
        assert p.mode == "formula" and p.cr_policy == "error" and p.cr_threshold == 0.1

    def test_fixtures_parse(self, formula_text, replay_text):
        f = parse_problem_file(formula_text)
        r = parse_problem_file(replay_text)
        assert f.mode == "formula" and r.mode == "replay"
        assert f.criteria == r.criteria == ("C1", "C2", "C3", "C4")
        assert f.criteria_matrix[1, 2] == IFN(TFN(4, 5, 6), TFN(3, 5, 7))
        assert r.alternative_matrices[0][0, 1] == SFN(0, 0, 0.87, 1.81)

    def test_both_cells_given(self):
        text = SMALL.replace("  C1 C2 iv(1, 5)\n", "  C1 C2 iv(1, 5)\n  C2 C1 iv(0.2, 1)\n")
        assert parse_problem_file(text).criteria_matrix[1, 0] == Interval(0.2, 1)

    @pytest.mark.parametrize("fixture", ["formula_text", "replay_text"])
    def test_round_trip(self, fixture, request):
        p = parse_problem_file(request.getfixturevalue(fixture))
        assert parse_problem_file(format_problem(p)) == p

    def test_round_trip_small(self):
        p = parse_problem_file(SMALL)
        assert parse_problem_file(format_problem(p)) == p

    def test_mode_override(self, replay_text):
        with pytest.raises(ParseError, match="formula mode"):
            parse_problem_file(replay_text, mode="formula")

    @pytest.mark.parametrize("old, new, match", [
        ("A2 A1 tfn", "A2 A9 tfn", "undeclared label 'A9'"),
        ("matrix C2:", "matrix C7:", "undeclared criterion"),
        ("  C1 C2 iv(1, 5)\n", "  C1 C2 iv(1, 5)\n  C1 C2 iv(1, 3)\n", "duplicate cell"),
        ("matrix C2:\n  A2 A1 tfn(1, 3, 5)\n", "", "missing matrix"),
        ("  A1 A2 gfn(1/7, 0.9)\n", "", "no comparison"),
        ("  C1 C2 iv(1, 5)", "  C1 C2 tfn(1,3)", "tfn takes 3"),
        ("  C1 C2 iv(1, 5)", "  C1 C2", "ROW COL value"),
        ("criteria: C1 C2", "criteria: C1 C1 C2", "duplicate label"),
        ("problem: tiny", "problem: tiny\noptions:\n  colour: red", "unknown option"),
        ("problem: tiny", "problem: tiny\noptions:\n  mode: sideways", "unknown mode"),
        ("problem: tiny", "problem: tiny\noptions:\n  cr-policy: shrug", "cr-policy"),
        ("problem: tiny", "problem: tiny\nstray words", "unexpected line"),
        ("  C1 C2 iv(1, 5)", "  C1 C2 sfn(1, 1, 5, 5)", "formula mode takes"),
    ])
    def test_errors(self, old, new, match):
        assert old in SMALL
        with pytest.raises(ParseError, match=match):
            parse_problem_file(SMALL.replace(old, new))

    def test_error_line_number(self):
        with pytest.raises(ParseError) as ei:
            parse_problem_file(SMALL.replace("A2 A1 tfn", "A2 A9 tfn"))
        assert ei.value.line == 9

    def test_replay_needs_full_matrix(self):
        text = """\
criteria: C1
alternatives: A1 A2
options:
  mode: replay
matrix criteria:
matrix C1:
  A1 A2 sfn(1, 2, 3, 4)
"""
        with pytest.raises(ParseError, match="mirror"):
            parse_problem_file(text)

    def test_options(self):
        text = SMALL.replace("problem: tiny", "problem: tiny\noptions:\n  cr-threshold: 0.2\n"
                             "  cr-policy: warn\n  quad-tol: 1e-10")
        p = parse_problem_file(text)
        assert (p.cr_threshold, p.cr_policy, p.quad_tol) == (0.2, "warn", 1e-10)
        q = with_overrides(p, cr_threshold=0.05, cr_policy=None)
        assert q.cr_threshold == 0.05 and q.cr_policy == "warn"
        assert with_overrides(p) is p


class TestScaleFile:
    def test_overrides(self):
        s = parse_scale_file("# custom\n4 tfn(3.5, 4, 4.5)\n6 gfn(6, 0.5)\n")
        assert s.lookup(4, Family.TFN) == TFN(3.5, 4, 4.5)
        assert s.lookup(6, Family.GFN) == GFN(6, 0.5)
        assert s.lookup(5, Family.TFN) == TFN(3, 5, 7)

    @pytest.mark.parametrize("text", ["10 tfn(1,2,3)", "x tfn(1,2,3)", "4",
                                      "4 sfn(1,2,3,4)", "4 tfn(1,2,3)\n4 tfn(1,2,4)"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_scale_file(text)
