import json

from click.testing import CliRunner

from curvesing.cli import main


def _run(args):
    return CliRunner().invoke(main, args)


def test_catalog_json():
    result = _run(["--json", "--max-tau", "3", "catalog"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["seed"] == 0
    names = [e["name"] for e in payload["entries"]]
    assert "A1" in names and "B3" in names
    assert all(e["tau"] <= 3 for e in payload["entries"])


def test_tjurina_command():
    result = _run(["--json", "tjurina", "C:1,1,1"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["tau"] == 4 and payload["match"]


def test_usage_error_exit_code():
    assert _run(["tjurina", "Q7"]).exit_code == 2
    assert _run(["ll-degree"]).exit_code == 2


def test_milnor_and_conjecture():
    payload = json.loads(_run(["--json", "milnor", "B3"]).output)
    assert payload["mu"] == payload["tau"] == 3
    result = _run(["--json", "verify-conjecture", "--entry", "E6"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["results"][0]["status"] == "mu not computed"


def test_ll_degree_entry():
    payload = json.loads(_run(["--json", "ll-degree", "--entry", "E8"]).output)
    assert payload["results"][0]["degree"] == 3888


def test_free_divisor_delta():
    result = _run(["--json", "free-divisor", "--entry", "A2",
                   "--mode", "delta", "--samples", "5"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["axis_identity"]
    assert payload["samples_vanishing"] == "5/5"


def test_free_divisor_sigma():
    result = _run(["--json", "free-divisor", "--entry", "C:1,1,1",
                   "--mode", "sigma", "--samples", "4"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["row_degrees"] == [1, 2, 3]
    assert payload["euler_row"] and payload["det_matches_branch_equation"]
    assert payload["samples_vanishing"] == "12/12"


def test_sample_sigma_deterministic():
    a = _run(["sample-sigma", "-n", "4", "--component", "all"])
    b = _run(["sample-sigma", "-n", "4", "--component", "all"])
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output
    header = a.output.splitlines()[0]
    assert header == "component,l1,l2,l3"
    components = {line.split(",")[0] for line in a.output.splitlines()[1:]}
    assert components == {"nonsmooth", "degenerate", "level"}


def test_emit_figure(tmp_path):
    out = tmp_path / "fig.csv"
    result = _run(["emit-figure", "--out", str(out), "-n", "6"])
    assert result.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "component,l1,l2,l3" and len(lines) == 19
    assert (tmp_path / "fig.png").exists()
    # the three nonsmooth plane traces are all present
    zeros = set()
    for line in lines[1:]:
        component, l1, l2, l3 = line.split(",")
        if component == "nonsmooth":
            zeros.add((l1 == "0", l2 == "0", l3 == "0").index(True))
    assert zeros == {0, 1, 2}


def test_emit_figure_empty_budget(tmp_path):
    out = tmp_path / "empty.csv"
    result = _run(["emit-figure", "--out", str(out), "-n", "0"])
    assert result.exit_code == 0
    assert out.read_text().splitlines() == ["component,l1,l2,l3"]


def test_ll_check_small():
    result = _run(["--json", "ll-check", "--entry", "C:1,1,1",
                   "--off-draws", "3", "--on-draws", "2", "--fiber-draws", "50"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["off_sigma_nonsingular"] == "3/3"
    assert payload["on_sigma_singular"] == "2/2"
    assert payload["cofactor_identity"] and payload["fiber_degree_ok"]


def test_verify_all_deterministic():
    a = _run(["--json", "--max-tau", "4", "verify-all"])
    b = _run(["--json", "--max-tau", "4", "verify-all"])
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output
    payload = json.loads(a.output)
    assert payload["status"] == "PASS"
