"""CLI surface: formats, schemas, exit codes, determinism."""

import json

import pytest

from mediant.census import CAP_ENV
from mediant.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


def test_census_table1(capsys):
    code, out, _ = run_cli(capsys, "census", "--kappa", "10", "--top", "4", "--table1")
    assert code == 0
    assert out.splitlines() == [
        "p,q,P_pct",
        "1,1,15.3846",
        "1,2,7.6923",
        "1,3,4.6154",
        "1,4,3.0769",
    ]


def test_census_table2_head(capsys):
    code, out, _ = run_cli(capsys, "census", "--kappa", "4000", "--table2", "--top", "5")
    assert code == 0
    assert out.splitlines() == [
        "p,q,T,RNF",
        "0,1,4000,1",
        "1,1,4000,1",
        "1,2,2000,1/2",
        "1,3,1333,1/3",
        "2,3,1333,1/3",
    ]


def test_census_csv_full(capsys):
    code, out, _ = run_cli(capsys, "census", "--kappa", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,q,x,T,P,Tnorm,RNF"
    assert lines[1].startswith("0,1,0,3,")
    assert len(lines) == 1 + 5  # header + F(3)


def test_census_row_count_matches_distinct_count(capsys):
    from mediant.census import distinct_count

    code, out, _ = run_cli(capsys, "census", "--kappa", "40")
    assert code == 0
    assert len(out.splitlines()) == 1 + distinct_count(40)


def test_census_json_schema(capsys):
    code, out, _ = run_cli(capsys, "census", "--kappa", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["kappa"] == 3
    assert [set(r) for r in doc["records"]] == [
        {"p", "q", "t", "p_pct", "t_norm", "rnf"}
    ] * 5
    first = doc["records"][0]
    assert first == {
        "p": 0,
        "q": 1,
        "t": 3,
        "p_pct": "1/3",
        "t_norm": "1/1",
        "rnf": "1/1",
    }


def test_census_kappa_one_degenerate_normalization(capsys):
    code, out, _ = run_cli(capsys, "census", "--kappa", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert all(r["t_norm"] is None for r in doc["records"])
    code, out, _ = run_cli(capsys, "census", "--kappa", "1")
    row = out.splitlines()[1].split(",")
    assert row[5] == ""  # empty Tnorm column


def test_census_cap_exceeded_exit_code(capsys, monkeypatch):
    monkeypatch.setenv(CAP_ENV, "100")
    code, out, err = run_cli(capsys, "census", "--kappa", "101")
    assert code == 1
    assert out == ""
    assert "cap" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["census"])  # --kappa missing
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["census", "--kappa", "0"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["bogus-verb"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["census", "--kappa", "5", "--unknown-flag"])
    assert info.value.code == 2


# ---------------------------------------------------------------------------
# farey / fib
# ---------------------------------------------------------------------------


def test_farey_plain_line(capsys):
    code, out, _ = run_cli(capsys, "farey", "--order", "3")
    assert code == 0
    assert out == "0/1,1/3,1/2,2/3,1/1\n"


def test_farey_json(capsys):
    code, out, _ = run_cli(capsys, "farey", "--order", "2", "--format", "json")
    doc = json.loads(out)
    assert doc == {"order": 2, "fractions": ["0/1", "1/2", "1/1"]}


def test_fib_track(capsys):
    code, out, _ = run_cli(capsys, "fib", "--seed", "0/1,1/1", "--steps", "5")
    assert code == 0
    assert out == "0/1,1/1,1/2,2/3,3/5,5/8,8/13\n"


def test_fib_rejects_non_neighbour_seed(capsys):
    with pytest.raises(SystemExit) as info:
        main(["fib", "--seed", "1/4,2/5", "--steps", "3"])
    assert info.value.code == 2


# ---------------------------------------------------------------------------
# approx / compare
# ---------------------------------------------------------------------------


def test_approx_both_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "approx",
        "--target",
        "0.6180339887",
        "--epsilon",
        "0.0001",
        "--method",
        "both",
        "--format",
        "json",
    )
    assert code == 0
    farey_doc, cf_doc = json.loads(out)
    assert farey_doc["method"] == "farey"
    assert farey_doc["steps"][:4] == ["1/2", "2/3", "3/5", "5/8"]
    assert farey_doc["target"] == "6180339887/10000000000"
    assert farey_doc["epsilon"] == "1/10000"
    assert cf_doc["method"] == "cf"
    assert set(cf_doc["coefficients"]) == {1}
    assert cf_doc["loop"] == cf_doc["steps"].__len__() + 1


def test_approx_csv(capsys):
    code, out, _ = run_cli(
        capsys, "approx", "--target", "0.5", "--epsilon", "0.1", "--method", "farey"
    )
    assert out.splitlines() == ["method,step,fraction,loop", "farey,1,1/2,1"]


def test_approx_rejects_bad_decimal(capsys):
    with pytest.raises(SystemExit) as info:
        main(["approx", "--target", "x", "--epsilon", "0.1"])
    assert info.value.code == 2


def test_compare_single_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "compare",
        "--target",
        "0.28125",  # 9/32 exactly
        "--epsilon",
        "1e-25",
        "--format",
        "json",
    )
    doc = json.loads(out)
    assert doc["subsequence_ok"] is True
    assert doc["farey"]["loop"] >= 1
    assert doc["cf"]["loop"] - doc["farey"]["loop"] == doc["loop_difference"]


def test_compare_fuzz_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "compare",
        "--fuzz",
        "10",
        "--max-q",
        "60",
        "--epsilon",
        "1e-12",
        "--seed",
        "0",
    )
    lines = out.splitlines()
    assert lines[0].startswith("target,epsilon,farey_loop,cf_loop")
    assert len(lines) == 11
    for line in lines[1:]:
        cells = line.split(",")
        assert cells[5] == "true"
        assert int(cells[4]) == 2


def test_compare_fuzz_seed_changes_targets(capsys):
    _, out0, _ = run_cli(
        capsys, "compare", "--fuzz", "5", "--epsilon", "1e-12", "--seed", "0"
    )
    _, out0_again, _ = run_cli(
        capsys, "compare", "--fuzz", "5", "--epsilon", "1e-12", "--seed", "0"
    )
    _, out1, _ = run_cli(
        capsys, "compare", "--fuzz", "5", "--epsilon", "1e-12", "--seed", "1"
    )
    assert out0 == out0_again
    assert out0 != out1


def test_compare_requires_target_or_fuzz(capsys):
    code, _, err = run_cli(capsys, "compare", "--epsilon", "1e-12")
    assert code == 1
    assert "target" in err


# ---------------------------------------------------------------------------
# colinear / extended
# ---------------------------------------------------------------------------


def test_colinear_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "colinear", "--kappa", "10", "--anchor", "1,1", "--format", "json"
    )
    doc = json.loads(out)
    assert doc["anchor"] == [1, 1]
    slope_two = next(g for g in doc["groups"] if g["slope"] == "2/1")
    assert slope_two["members"][0] == {
        "fraction": "5/9",
        "x": "5/9",
        "y": "1/9",
    }
    assert "integer_slope_forms" in doc


def test_colinear_origin_csv(capsys):
    code, out, _ = run_cli(capsys, "colinear", "--kappa", "5", "--anchor", "0,0")
    lines = out.splitlines()
    assert lines[0] == "slope,p,q,x,y"
    assert any(line.startswith("1/1,1,5,") for line in lines)


def test_colinear_bad_anchor(capsys):
    with pytest.raises(SystemExit) as info:
        main(["colinear", "--kappa", "5", "--anchor", "2,2"])
    assert info.value.code == 2


def test_extended_census_csv(capsys):
    code, out, _ = run_cli(capsys, "extended", "--kappa", "2")
    lines = out.splitlines()
    assert lines[0] == "p,q,x,T,P,Tnorm,RNF"
    # 0/1, 1/2, 1/1, 2/1 in value order; 6 pairs total
    assert [line.split(",")[:2] for line in lines[1:]] == [
        ["0", "1"],
        ["1", "2"],
        ["1", "1"],
        ["2", "1"],
    ]


def test_extended_top_ranks_by_limiting_frequency(capsys):
    code, out, _ = run_cli(
        capsys, "extended", "--kappa", "30", "--top", "5", "--format", "json"
    )
    doc = json.loads(out)
    heads = [(r["p"], r["q"]) for r in doc["records"]]
    assert heads == [(0, 1), (1, 1), (1, 2), (2, 1), (1, 3)]


# ---------------------------------------------------------------------------
# output file and determinism
# ---------------------------------------------------------------------------


def test_output_file(tmp_path, capsys):
    path = tmp_path / "farey.csv"
    code, out, _ = run_cli(capsys, "farey", "--order", "4", "--output", str(path))
    assert code == 0
    assert out == ""
    assert path.read_text() == "0/1,1/4,1/3,1/2,2/3,3/4,1/1\n"


def test_byte_identical_reruns(capsys):
    first = run_cli(capsys, "census", "--kappa", "30", "--format", "json")
    second = run_cli(capsys, "census", "--kappa", "30", "--format", "json")
    assert first == second


def test_backend_does_not_change_output(capsys, monkeypatch):
    from mediant import kernels

    outputs = []
    for backend in ("numba", "numpy"):
        monkeypatch.setattr(kernels, "_backend", backend)
        outputs.append(run_cli(capsys, "census", "--kappa", "25"))
    assert outputs[0] == outputs[1]
