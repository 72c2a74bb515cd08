import json

import pytest

from braidhoms.cli import COUNTEREXAMPLE, MALFORMED, OK, UNDECIDED, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_standard_cabling(capsys):
    code, out, _ = run(capsys, "standard", "--kind", "cabling", "--k", "2", "--n", "5")
    assert code == OK
    h = json.loads(out)
    assert h["images"][0] == [1, 1, 2, 3, 1, 2]
    assert list(h) == ["images", "source_strands", "target_strands"]


def test_standard_inner_and_bad_kind(capsys):
    code, out, _ = run(capsys, "standard", "--kind", "inner", "--n", "4", "--conjugator", "B4: 2")
    assert code == OK and json.loads(out)["images"][0] == [2, 1, -2]
    assert run(capsys, "standard", "--kind", "nonsense", "--n", "4")[0] == MALFORMED


def test_screen_table(capsys):
    code, out, _ = run(capsys, "screen", "--n", "5", "--m-max", "10")
    assert code == OK
    assert "5 10 false" in out.splitlines()
    code, out, _ = run(capsys, "screen", "--n", "5", "--m-max", "6", "--format", "json")
    assert json.loads(out)["rows"][-1] == [5, 6, False]


def test_screen_range_check_reports_the_arithmetic_exceptions(capsys):
    code, out, _ = run(capsys, "screen", "--corollary", "--n-max", "10", "--format", "json")
    assert code == COUNTEREXAMPLE
    assert json.loads(out)["failures"] == [[6, 10]]
    assert run(capsys, "screen", "--corollary", "--n-max", "5")[0] == OK


def test_word_actions(capsys):
    assert run(capsys, "word", "trivial", "B3: 1 2 1 -2 -1 -2")[1].strip() == "true"
    assert run(capsys, "word", "compare", "B3: 1 2 1", "B3: 2 1 2")[0] == OK
    assert run(capsys, "word", "commute", "B3: 1", "B3: 2")[0] == COUNTEREXAMPLE
    code, out, _ = run(capsys, "word", "reduce", "B3: 1 -1 2", "--format", "json")
    assert code == OK and json.loads(out)["reduced"] == [2]


@pytest.mark.parametrize("argv", [
    ("word", "reduce", "B3: 1 7"),
    ("word", "compare", "B3: 1"),
    ("word", "trivial", "B3: 1", "--fuel", "10"),
    ("nosuchcommand",),
    ("hom", "verify", "/no/such/file.json"),
    ("hom", "verify", "{not json"),
    ("suite", "prop31", "--max-conj", "0"),
])
def test_malformed_inputs(capsys, argv):
    assert run(capsys, *argv)[0] == MALFORMED


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDHOMS_FUEL", "5")
    assert run(capsys, "word", "trivial", "B3: 1")[0] == MALFORMED
    monkeypatch.setenv("BRAIDHOMS_FUEL", "many")
    assert run(capsys, "word", "trivial", "B3: 1")[0] == MALFORMED


def test_undecided_exit(capsys, monkeypatch):
    import braidhoms.cli as cli

    def exhausted(*_, **__):
        from braidhoms.braid import UndecidedError
        raise UndecidedError(1, 1)
    monkeypatch.setattr(cli, "is_trivial", exhausted)
    code, _, err = run(capsys, "word", "trivial", "B3: 1")
    assert code == UNDECIDED and "undecided" in err


def test_hom_make_verify_apply(capsys, tmp_path):
    code, out, _ = run(capsys, "hom", "make", "--source", "4", "--target", "4", "--images", "1; 1; 2")
    assert code == OK
    path = tmp_path / "bad.json"
    path.write_text(out)
    code, out, _ = run(capsys, "hom", "verify", str(path))
    assert code == COUNTEREXAMPLE and "sigma_1 and sigma_3" in out

    code, out, _ = run(capsys, "standard", "--kind", "exceptional", "--n", "4")
    path.write_text(out)
    assert run(capsys, "hom", "verify", str(path))[0] == OK
    code, out, _ = run(capsys, "hom", "apply", str(path), "--word", "1 -3")
    assert code == OK and out.strip() == "B3:"


def test_hom_transvect_and_compose(capsys):
    inc = run(capsys, "standard", "--kind", "inclusion", "--n", "5")[1]
    code, out, _ = run(capsys, "hom", "transvect", inc, "--by", "B10: 9")
    assert code == OK and json.loads(out)["images"][1] == [2, 9]
    code, _, err = run(capsys, "hom", "transvect", inc, "--by", "B10: 5")
    assert code == COUNTEREXAMPLE and "4" in err
    inv = run(capsys, "standard", "--kind", "inversion", "--n", "10")[1]
    code, out, _ = run(capsys, "hom", "compose", inv, inc)
    assert code == OK and json.loads(out)["images"][0] == [-1]


def test_hom_fingerprint_matches(capsys):
    h = run(capsys, "standard", "--kind", "cabling", "--k", "-1", "--n", "5")[1]
    code, out, _ = run(capsys, "hom", "fingerprint", h, "--format", "json")
    assert code == OK and json.loads(out)["matches"] == ["cabling(k=-1)"]


def test_classify_cabling(capsys):
    h = run(capsys, "standard", "--kind", "cabling", "--k", "3", "--n", "3")[1]
    code, out, _ = run(capsys, "classify-cabling", h, "--format", "json")
    assert code == OK and json.loads(out)["k_canonical"] == 3
    d = run(capsys, "standard", "--kind", "diagonal", "--n", "3")[1]
    assert run(capsys, "classify-cabling", d)[0] == COUNTEREXAMPLE


def test_enumerate_sym(capsys):
    code, out, _ = run(capsys, "enumerate-sym", "--n", "3", "--k", "3", "--format", "json")
    assert code == OK and json.loads(out)["noncyclic_count"] == 6


def test_verify_round_trip_command(capsys):
    code, out, _ = run(capsys, "verify-lemma61", "--samples", "20", "--format", "json")
    assert code == OK and json.loads(out)["failures"] == 0


def test_verify_rotation_single_curve(capsys):
    code, out, _ = run(capsys, "verify-prop31", "--curve", "C5: 1 | 4 3", "--k", "1")
    assert code == OK and "no counterexample found" in out


def test_verify_multicurve_short(capsys):
    code, out, _ = run(capsys, "verify-prop32", "--max-conj", "2", "--format", "json")
    assert code == OK and json.loads(out)["counterexamples"] == []


def test_json_is_identical_across_job_counts(capsys):
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = run(capsys, "verify-prop31", "--n", "5", "--max-conj", "2", "--jobs", jobs,
                           "--format", "json")
        assert code == OK
        outs.append(out)
    assert outs[0] == outs[1]
    assert not has_float(json.loads(outs[0]))


def has_float(obj):
    if isinstance(obj, float):
        return True
    if isinstance(obj, dict):
        return any(has_float(v) for v in obj.values())
    if isinstance(obj, list):
        return any(has_float(v) for v in obj)
    return False


def test_suite_exit_codes_match_report(capsys):
    code, out, _ = run(capsys, "suite", "b4", "--format", "json")
    assert code == OK and json.loads(out)["failures"] == 0
    code, out, _ = run(capsys, "suite", "screen", "--format", "json")
    assert code == COUNTEREXAMPLE and json.loads(out)["failures"] > 0


@pytest.mark.slow
def test_rotation_suite_n5(capsys):
    code, out, _ = run(capsys, "suite", "prop31", "--n", "5", "--max-conj", "4", "--jobs", "1")
    assert code == OK
    assert "[PASS]" in out
