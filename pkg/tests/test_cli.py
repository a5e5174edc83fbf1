import json

import pytest

import topcent.cli as cli


def run_cli(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("a b\nb c\nc d\n")
    return str(path)


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star.txt"
    path.write_text("s a\ns b\ns c\n")
    return str(path)


def test_top1_tie_output(p4_file, capsys):
    code, out, err = run_cli(["--input", p4_file, "--k", "1", "--variant", "nbcut"], capsys)
    assert code == 0
    assert out.splitlines() == ["1\tb\t0.75", "1\tc\t0.75"]


def test_textbook_star_ranks(star_file, capsys):
    code, out, _ = run_cli(["--input", star_file, "--variant", "textbook", "--k", "3"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("1\ts\t")
    assert all(line.split("\t")[0] == "2" for line in lines[1:])


def test_k_zero_usage_error(p4_file, capsys):
    code, _, _ = run_cli(["--input", p4_file, "--k", "0"], capsys)
    assert code == 2


def test_threads_zero_usage_error(p4_file, capsys):
    code, _, _ = run_cli(["--input", p4_file, "--threads", "0"], capsys)
    assert code == 2


def test_unknown_variant_usage_error(p4_file, capsys):
    code, _, _ = run_cli(["--input", p4_file, "--variant", "warpdrive"], capsys)
    assert code == 2


def test_missing_file_io_error(capsys):
    code, _, err = run_cli(["--input", "/definitely/not/here.txt"], capsys)
    assert code == 1
    assert "cannot read" in err


def test_malformed_input_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("a b\nc\n")
    code, _, err = run_cli(["--input", str(path)], capsys)
    assert code == 1
    assert "line 2" in err


def test_stats_json_on_stderr(p4_file, capsys):
    code, out, err = run_cli(
        ["--input", p4_file, "--k", "2", "--variant", "degcut", "--stats"], capsys)
    assert code == 0
    stats = json.loads(err)
    assert stats["n"] == 4 and stats["m"] == 3 and stats["k"] == 2
    assert stats["variant"] == "degcut" and stats["measure"] == "closeness"
    assert stats["m_vis"] > 0 and stats["n_pruned"] >= 0
    assert stats["improvement_factor"] >= 1.0
    assert stats["wall_ms"] >= 0


def test_json_output(p4_file, capsys):
    code, out, _ = run_cli(
        ["--input", p4_file, "--k", "1", "--output", "json", "--measure", "harmonic"],
        capsys)
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"rank": 1, "label": "b", "score": 2.5},
                    {"rank": 1, "label": "c", "score": 2.5}]


def test_directed_flag(tmp_path, capsys):
    path = tmp_path / "arc.txt"
    path.write_text("u v\n")
    code, out, _ = run_cli(["--input", str(path), "--directed", "--k", "1"], capsys)
    assert code == 0
    assert out.splitlines() == ["1\tu\t1"]


def test_all_variants_print_identical_rankings(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("a b\nb c\nc d\nd e\nb e\nc f\n")
    outputs = set()
    for variant in ("textbook", "degcut", "degbound", "nbcut", "nbbound"):
        code, out, _ = run_cli(
            ["--input", str(path), "--k", "3", "--variant", variant], capsys)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_thread_count_does_not_change_stdout(p4_file, capsys):
    outs = set()
    for t in ("1", "2", "4"):
        code, out, _ = run_cli(
            ["--input", p4_file, "--k", "2", "--threads", t], capsys)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
