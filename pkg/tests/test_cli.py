import json

import pytest

from grassperm import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCount:
    @pytest.mark.parametrize(
        "argv,value",
        [
            (("count", "--quantity", "B", "--k", "3", "--m", "4"), "2"),
            (("count", "--quantity", "A", "--k", "3", "--m", "3"), "4"),
            (("count", "--quantity", "O", "--k", "4", "--m", "4"), "6"),
            (("count", "--quantity", "E", "--k", "4", "--m", "4"), "5"),
            (("count", "--quantity", "total-perms", "--k", "3"), "10"),
            (("count", "--quantity", "total-words", "--k", "3"), "13"),
            (("count", "--quantity", "total-words", "--k", "3", "--j", "2"), "5"),
            (("count", "--quantity", "total-odd", "--k", "4"), "16"),
            (("count", "--quantity", "fixed", "--n", "4", "--k", "4"), "1"),
            (("count", "--quantity", "bigrass", "--m", "3"), "5"),
            (("count", "--quantity", "bigrass", "--k", "3", "--m", "4"), "1"),
            (("count", "--quantity", "bigrass-odd", "--m", "4"), "5"),
            (("count", "--quantity", "invol", "--k", "3", "--m", "4"), "1"),
            (("count", "--quantity", "invol-odd", "--m", "4"), "3"),
        ],
    )
    def test_values(self, capsys, argv, value):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out.strip() == value

    def test_missing_flag_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["count", "--quantity", "B", "--k", "3"])
        assert exc.value.code == 2

    def test_unknown_quantity_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["count", "--quantity", "nope", "--k", "3"])
        assert exc.value.code == 2

    def test_domain_error_exits_3(self, capsys):
        code, _, err = run(capsys, "count", "--quantity", "fixed", "--n", "2", "--k", "5")
        assert code == 3
        assert "error" in err


class TestTable:
    def test_csv_header_and_spot_row(self, capsys):
        code, out, _ = run(capsys, "table", "--quantity", "B", "--k-max", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,m,value"
        assert "4,4,11" in lines
        # no row ever reaches m = 2k - 1
        for line in lines[1:]:
            k, m, _ = (int(v) for v in line.split(","))
            assert m <= 2 * k - 2

    def test_json_round_trips_to_csv(self, capsys):
        code, csv_out, _ = run(capsys, "table", "--quantity", "B", "--k-max", "5")
        code2, json_out, _ = run(
            capsys, "table", "--quantity", "B", "--k-max", "5", "--format", "json"
        )
        assert code == code2 == 0
        rows = json.loads(json_out)
        rebuilt = ["k,m,value"] + [
            f"{r['k']},{r['m']},{r['value']}" for r in rows
        ]
        assert rebuilt == csv_out.strip().splitlines()

    def test_parity_table_columns(self, capsys):
        code, out, _ = run(capsys, "table", "--quantity", "parity", "--k-max", "3")
        lines = out.strip().splitlines()
        assert lines[0] == "k,m,B,O,E"
        for line in lines[1:]:
            _, _, b, o, e = (int(v) for v in line.split(","))
            assert b == o + e

    def test_classes_table(self, capsys):
        code, out, _ = run(capsys, "table", "--quantity", "classes", "--m-max", "4")
        lines = out.strip().splitlines()
        assert lines[0] == "class,m,value"
        assert "bigrass,3,5" in lines
        assert "invol_odd,4,3" in lines

    def test_gf_table(self, capsys):
        code, out, _ = run(capsys, "table", "--quantity", "gf", "--n-max", "3")
        lines = out.strip().splitlines()
        assert lines[0] == "n,i,count"
        assert "3,1,2" in lines

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "table", "--quantity", "parity", "--k-max", "6")
        _, second, _ = run(capsys, "table", "--quantity", "parity", "--k-max", "6")
        assert first == second


class TestEnumerate:
    def test_words(self, capsys):
        code, out, _ = run(capsys, "enumerate", "words", "--k", "3", "--m", "4")
        assert code == 0
        assert out.strip().splitlines() == ["1010", "1100"]

    def test_words_with_stats(self, capsys):
        _, out, _ = run(
            capsys, "enumerate", "words", "--k", "3", "--m", "4", "--stats", "inversions"
        )
        assert out.strip().splitlines() == ["1010 inversions=3", "1100 inversions=4"]

    def test_avoiders(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "avoiders", "--n", "3", "--pattern", "123"
        )
        assert out.strip().splitlines() == ["1,3,2", "2,1,3", "2,3,1", "3,1,2"]

    def test_avoiders_fixed_point_stats(self, capsys):
        _, out, _ = run(
            capsys,
            "enumerate",
            "avoiders",
            "--n",
            "3",
            "--pattern",
            "1,2,3",
            "--stats",
            "fixed-points",
        )
        assert "1,3,2 fixed-points=1" in out.strip().splitlines()

    def test_dyck(self, capsys):
        code, out, _ = run(capsys, "enumerate", "dyck", "--n", "3")
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert lines == sorted(lines)

    def test_over_cap_exits_3(self, capsys):
        code, _, err = run(capsys, "enumerate", "dyck", "--n", "13")
        assert code == 3
        assert "cap" in err


class TestBiject:
    def test_word_to_dyck(self, capsys):
        code, out, _ = run(
            capsys, "biject", "word-to-dyck", "--k", "3", "--input", "1100"
        )
        lines = out.strip().splitlines()
        assert "word=1100" in lines
        assert "a=0,0,2" in lines
        assert "dyck=UDUUDDUD" in lines
        assert "peak_sum=2" in lines

    def test_word_to_lattice_figure_pair(self, capsys):
        code, out, _ = run(
            capsys, "biject", "word-to-lattice", "--k", "5", "--input", "110011"
        )
        lines = out.strip().splitlines()
        assert "lattice=DDUUDD" in lines
        assert "floor=-2" in lines
        assert "toggle=DUDUDD" in lines
        assert "toggle_word=110101" in lines

    def test_toggle_twice_is_identity(self, capsys):
        _, out1, _ = run(capsys, "biject", "toggle", "--input", "UDUUDUDD")
        toggled = next(
            line.split("=", 1)[1]
            for line in out1.strip().splitlines()
            if line.startswith("toggled=")
        )
        assert toggled == "UUDUDUDD"
        _, out2, _ = run(capsys, "biject", "toggle", "--input", toggled)
        assert "toggled=UDUUDUDD" in out2

    def test_toggle_reports_position_and_kind(self, capsys):
        _, out, _ = run(capsys, "biject", "toggle", "--input", "UDUUDUDD")
        assert "position=2 kind=valley height=0" in out

    def test_halve(self, capsys):
        code, out, _ = run(capsys, "biject", "halve", "--input", "UUUDDD")
        assert "halved=UD" in out

    def test_domain_error_names_precondition(self, capsys):
        code, _, err = run(capsys, "biject", "halve", "--input", "UUDD")
        assert code == 3
        assert "even height" in err

    def test_outside_image_exits_3(self, capsys):
        code, _, err = run(capsys, "biject", "word-to-dyck", "--k", "2", "--input", "01")
        assert code == 3
        assert "avoiding" in err

    def test_svg_output(self, capsys, tmp_path):
        target = tmp_path / "path.svg"
        code, out, _ = run(
            capsys,
            "biject",
            "word-to-dyck",
            "--k",
            "3",
            "--input",
            "1100",
            "--svg",
            str(target),
        )
        assert code == 0
        assert target.read_text().startswith("<svg")


class TestVerify:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "identities", "--k-max", "12"
        )
        assert code == 0
        assert "FAIL" not in out
        assert "PASS identities.ballot_catalan_alternating_sum" in out

    def test_json_report_schema(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "identities",
            "--k-max",
            "5",
            "--format",
            "json",
        )
        assert code == 0
        report = json.loads(out)
        assert [r["suite"] for r in report] == ["identities"]
        for check in report[0]["checks"]:
            assert set(check) == {"name", "params", "expected", "actual", "pass"}
            assert check["pass"] is True

    def test_fault_injection_fails_and_names_cell(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "counting",
            "--k-max",
            "4",
            "--inject-fault",
            "3,4",
        )
        assert code == 1
        assert "FAIL counting.recurrence_vs_word_oracle" in out
        assert "k=3 m=4" in out
        assert "expected 2, actual 3" in out

    def test_fault_injection_json_names_cell(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "counting",
            "--k-max",
            "4",
            "--format",
            "json",
            "--inject-fault",
            "3,4",
        )
        assert code == 1
        report = json.loads(out)
        failing = [c for c in report[0]["checks"] if not c["pass"]]
        assert failing
        mismatch = failing[0]["params"]["first_mismatch"]
        assert (mismatch["k"], mismatch["m"]) == (3, 4)

    def test_raised_caps_flow_through(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "counting",
            "--k-max",
            "7",
            "--word-cap",
            "24",
        )
        assert code == 0
        assert "FAIL" not in out

    def test_bad_fault_spec_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--inject-fault", "oops"])
        assert exc.value.code == 2

    def test_unknown_suite_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--suite", "nope"])
        assert exc.value.code == 2
