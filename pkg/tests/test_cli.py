import json

from p3ext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tower(capsys):
    code, out, _ = run(capsys, "tower", "--p", "3", "--r", "7")
    assert code == 0 and json.loads(out)["m"] == 21


def test_criterion_exit_codes(capsys):
    assert run(capsys, "criterion", "--p", "3", "--r", "7", "--x", "d + z")[0] == 0
    assert run(capsys, "criterion", "--p", "3", "--r", "19", "--sigma", "6", "--x", "d + z + 1")[0] == 1
    code, _, err = run(capsys, "criterion", "--p", "3", "--r", "7", "--x", "d + + z")
    assert code == 2 and "offset 4" in err


def test_usage_errors(capsys):
    assert run(capsys, "tower", "--p", "3")[0] == 2
    assert run(capsys, "tower", "--p", "3", "--r", "11")[0] == 2
    assert run(capsys, "ramify", "--poly", "not-a-file")[0] == 2


def test_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--p", "3", "--r", "19", "--sigma", "6", "--e", "-1",
                       "--x", "d + z + 1", "--group", "heisenberg")
    assert code == 0
    cfile = tmp_path / "c.json"
    cfile.write_text(out)
    code, out, _ = run(capsys, "minpoly", "--construction", str(cfile), "--numeric")
    assert code == 0
    poly = json.loads(out)
    assert poly["numeric_crosscheck"] and len(poly["coeffs"]) == 10
    pfile = tmp_path / "f.json"
    pfile.write_text(out)
    code, out, _ = run(capsys, "ramify", "--poly", str(pfile))
    assert code == 0 and json.loads(out)["ram_set"] == [3, 7, 19]
    code, out, _ = run(capsys, "verify", "--poly", str(pfile), "--group", "h", "--prime-bound", "2000")
    assert code == 0 and json.loads(out)["passed"]


def test_construct_refusal(capsys):
    code, _, err = run(capsys, "construct", "--p", "3", "--zeta-p2", "--x", "1", "--group", "h")
    assert code == 1 and "force" in err


def test_search_and_reproduce(capsys):
    code, out, _ = run(capsys, "search", "--p", "3", "--r", "7", "--support", "d,z,1")
    assert code == 0 and "d + z" in [h["x"] for h in json.loads(out)]
    code, out, err = run(capsys, "reproduce", "ex_r7")
    assert code == 0 and json.loads(out)["passed"] and "PASS" in err


def test_plain_coefficient_list(capsys):
    code, out, _ = run(capsys, "ramify", "--poly", "[-2, 0, 1]")
    assert code == 0 and json.loads(out)["ram_set"] == [2]
