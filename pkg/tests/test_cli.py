"""Command-line interface: exit codes, output shapes, interactive sessions."""

import io

import pytest

from coinweigh.cli import main
from coinweigh import parse_scheme


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_bounds_table(capsys):
    code, out, err = run(capsys, "bounds", "--k", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert lines[0] == "P1 9"
    assert lines[6] == "P7 3"
    assert lines[11] == "P12 3"


def test_bounds_single_variant(capsys):
    code, out, _ = run(capsys, "bounds", "--k", "3", "--variant", "P7")
    assert code == 0
    assert out == "P7 12\n"


def test_build_writes_and_verify_accepts(tmp_path, capsys):
    target = tmp_path / "scheme.txt"
    code, out, _ = run(capsys, "build", "--variant", "P8", "--n", "4", "--k", "2",
                       "--out", str(target))
    assert code == 0
    text = target.read_text()
    scheme = parse_scheme(text)
    assert (scheme.variant.name, scheme.n, scheme.k) == ("P8", 4, 2)

    code, out, _ = run(capsys, "verify", str(target))
    assert code == 0
    assert out.startswith("pass (8 configurations")


def test_build_unsolvable_instance(capsys):
    code, out, err = run(capsys, "build", "--variant", "P5", "--n", "5", "--k", "2")
    assert code == 1
    assert "unsolvable" in err


def test_build_adaptive_only_emits_tree(capsys):
    code, out, _ = run(capsys, "build", "--variant", "P4", "--n", "7", "--k", "2")
    assert code == 0
    assert out.splitlines()[0] == "variant=P4 n=7 k=2 adaptive"
    assert "weigh 1 2 3 | 4 5 6" in out


def test_verify_rejects_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("variant=P8 n=2 k=2 genuine=none\nnl\nxx\n")
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 2
    assert "line 3" in err


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "/no/such/file")
    assert code == 2
    assert "cannot read" in err


def test_verify_flags_broken_scheme(tmp_path, capsys):
    bad = tmp_path / "opposites.txt"
    bad.write_text("variant=P8 n=2 k=2 genuine=none\nnl\nnr\n")
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert out.startswith("FAIL")


def test_search_outputs_scheme(capsys):
    code, out, _ = run(capsys, "search", "--variant", "P8", "--n", "4", "--k", "2")
    assert code == 0
    scheme = parse_scheme(out)
    assert scheme.n == 4


def test_search_exhausts_adaptive_window(capsys):
    code, _, err = run(capsys, "search", "--variant", "P4", "--n", "7", "--k", "2")
    assert code == 1
    assert "no scheme" in err


def test_search_budget_exit_code(capsys):
    code, _, err = run(capsys, "search", "--variant", "P12", "--n", "12", "--k", "3",
                       "--budget", "5")
    assert code == 2
    assert "budget" in err or "exceeded" in err


def test_feasible_exit_codes(capsys):
    code, out, _ = run(capsys, "feasible", "--variant", "P5", "--n", "13", "--k", "3")
    assert (code, out) == (0, "feasible\n")
    code, out, _ = run(capsys, "feasible", "--variant", "P5", "--n", "14", "--k", "3")
    assert (code, out) == (1, "infeasible\n")


def test_bad_variant_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["bounds", "--k", "2", "--variant", "P99"])
    assert e.value.code == 2


def interact(monkeypatch, capsys, feed, *args):
    monkeypatch.setattr("sys.stdin", io.StringIO(feed))
    return run(capsys, "interact", *args)


def test_interact_balanced_twice_means_no_fake(monkeypatch, capsys):
    code, out, _ = interact(monkeypatch, capsys, "b\nb\n",
                            "--variant", "P4", "--n", "7", "--k", "2")
    assert code == 0
    assert "verdict: no fake" in out


def test_interact_reprompts_on_garbage(monkeypatch, capsys):
    code, out, _ = interact(monkeypatch, capsys, "x\nl\nb\n",
                            "--variant", "P4", "--n", "7", "--k", "2")
    assert code == 0
    assert "invalid outcome 'x'" in out
    assert "verdict: fake" in out


def test_interact_contradiction_aborts(monkeypatch, capsys):
    code, _, err = interact(monkeypatch, capsys, "b\nr\n",
                            "--variant", "P4", "--n", "7", "--k", "2")
    assert code == 2
    assert "contradicts" in err


def test_interact_end_of_input(monkeypatch, capsys):
    code, _, err = interact(monkeypatch, capsys, "",
                            "--variant", "P4", "--n", "7", "--k", "2")
    assert code == 2
    assert "input ended" in err


def test_interact_p3_brings_reference_coin(monkeypatch, capsys):
    # with one suspect the only sensible weighing pits it against the
    # known-genuine extra coin (id n+1)
    code, out, _ = interact(monkeypatch, capsys, "l\n",
                            "--variant", "P3", "--n", "1", "--k", "1")
    assert code == 0
    assert "weigh 1 | 2" in out
    assert "verdict: fake 1" in out


def test_selftest_smoke(capsys):
    code, out, _ = run(capsys, "selftest", "--max-k", "2")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("criterion")]
    assert len(lines) == 9
    assert all(": pass" in l for l in lines)
