import io
import json

import pytest

from orbidim.cli import main, parse_bounds, UsageError
from orbidim.covers import hyperelliptic_action


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


class TestExamples:
    def test_hitchin_triangle(self):
        assert run_json("hitchin", "--n", "6", "o0b1d:2,3,7") == {"dim": 1}

    def test_hitchin_genus_three(self):
        assert run_json("hitchin", "--n", "6", "o3") == {"dim": 140}

    def test_chi(self):
        assert run_json("chi", "o0c:2,3,7") == {"chi": "-1/42"}

    def test_chi_integer_is_still_a_fraction(self):
        assert run_json("chi", "o2") == {"chi": "-2/1"}

    def test_teich(self):
        assert run_json("teich", "o2") == {"dim": 6}

    def test_exponents(self):
        assert run_json("hitchin", "--exponents", "G2", "o2") == {"dim": 28}
        assert run_json("hitchin", "--exponents", "1,2,3,4,5", "o3") == {"dim": 140}


class TestErrors:
    def test_syntax_error(self):
        code, out, err = run("chi", "o0d:2,3,7")
        assert code == 2 and out == ""
        payload = json.loads(err)
        assert payload["offset"] == 2

    def test_garbage(self):
        code, _, err = run("chi", "q2")
        assert code == 2
        assert set(json.loads(err)["expected"]) == {"o", "n"}

    def test_domain_error(self):
        code, _, err = run("teich", "o0c:2,3,6")
        assert code == 3
        assert json.loads(err)["kind"] == "DomainError"

    def test_missing_signature(self):
        assert run("chi")[0] == 2

    def test_unknown_command(self, capsys):
        assert run("frobnicate")[0] == 2


class TestRiemannRoch:
    def test_canonical_power(self):
        doc = run_json("rr", "--canonical-power", "6", "o0c:2,3,7")
        assert doc["chi"] == doc["coarse_chi"] == 1
        assert doc["h0"] == 1
        assert doc["isotropies"] == [0, 0, 1]

    def test_bundle(self):
        doc = run_json("rr", "--bundle", '{"coarse_degree": -2, "isotropies": [1, 2, 6]}',
                       "o0c:2,3,7")
        assert doc["degree"] == "1/42"
        assert doc["chi"] == -1

    def test_real(self):
        doc = run_json("rr", "--canonical-power", "2", "o0b1d:2,3,7")
        assert doc["field"] == "real" and doc["chi"] == 0

    def test_misaligned_bundle(self):
        code, _, err = run("rr", "--bundle", '{"coarse_degree": 0, "isotropies": [1]}',
                           "o0c:2,3,7")
        assert code == 3


class TestCovers:
    def test_action_file(self, tmp_path):
        _, action = hyperelliptic_action()
        path = tmp_path / "action.json"
        path.write_text(json.dumps(action.to_json()))
        doc = run_json("cover", "--action", str(path), "o0c:2,2,2,2,2,2")
        assert doc == {"cover": "o2", "degree": 2, "chi_cover": "-2/1",
                       "chi_base_times_degree": "-2/1", "multiplicative": True}

    def test_invalid_action(self):
        code, _, err = run("cover", "--action", '{"degree": 2, "c": [[2,1],[1,2],[1,2]]}',
                           "o0c:2,3,7")
        assert code == 3 and json.loads(err)["kind"] == "InvalidActionError"

    def test_double_cover(self):
        assert run_json("double-cover", "o0b1d:2,3,7") == {"cover": "o0c:2,3,7",
                                                             "chi": "-1/42"}


class TestPresentation:
    def test_text(self):
        code, out, _ = run("presentation", "--text", "o0c:2,3,7")
        assert code == 0 and out == "<a, b, c | a^2, b^3, c^7, abc>\n"

    def test_triangle_is_coxeter(self):
        doc = run_json("presentation", "o0b1d:2,3,7")
        assert doc["generators"] == ["x", "y", "z"]


class TestBatchAndCsv:
    def test_batch_json_lines(self, tmp_path):
        path = tmp_path / "sigs.txt"
        path.write_text("o0c:2,3,7\no2\n\n")
        code, out, _ = run("chi", "--batch", str(path))
        assert code == 0
        assert [json.loads(line) for line in out.splitlines()] == [
            {"signature": "o0c:2,3,7", "chi": "-1/42"}, {"signature": "o2", "chi": "-2/1"}]

    def test_batch_stdin_csv(self):
        code, out, _ = run("teich", "--batch", "-", "--csv", stdin="o2\no3\n")
        assert code == 0
        assert out == "signature,dim\no2,6\no3,12\n"

    def test_batch_error_row(self):
        code, out, _ = run("teich", "--batch", "-", stdin="o2\no0c:2,3,6\n")
        assert code == 3
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows[0]["dim"] == 6 and rows[1]["kind"] == "DomainError"

    def test_csv_single(self):
        assert run("chi", "--csv", "o0c:2,3,7")[1] == "chi\n-1/42\n"


class TestRigid:
    def test_small_sweep(self):
        rows = run_json("rigid", "--n", "4", "--bounds", "genus=0,points=3..3,order=9,orientable")
        assert [r["signature"] for r in rows] == ["o0c:2,3,7", "o0c:2,3,8", "o0c:2,3,9"]
        assert all(r["dim"] == 0 for r in rows)

    def test_empty_csv_keeps_header(self):
        code, out, _ = run("rigid", "--n", "4", "--csv", "--bounds", "genus=0,points=3..3,order=6")
        assert code == 0 and out == "signature,chi,dim\n"

    def test_parse_bounds(self):
        b = parse_bounds("genus=1,points=2..3,order=7,corners=2,mirrors=0..1,orientable")
        assert (b.max_genus, b.min_points, b.max_points, b.max_order) == (1, 2, 3, 7)
        assert (b.max_corners, b.min_mirrors, b.max_mirrors, b.orientable_only) == (2, 0, 1, True)

    @pytest.mark.parametrize("text", ["genus", "colour=2", "order=2..5", "genus=-1"])
    def test_bad_bounds(self, text):
        with pytest.raises(UsageError):
            parse_bounds(text)
