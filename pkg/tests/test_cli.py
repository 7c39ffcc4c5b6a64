import csv
import json

import pytest

from rsht.cli import cli_main, load_complex


def run(capsys, *argv):
    code = cli_main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fvector_of_generator(capsys):
    code, out, _ = run(capsys, "fvector", "abalone")
    assert code == 0 and out.strip() == "15 50 36"


def test_fvector_of_file(capsys, tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("1 2 3\n2 3 4\n")
    code, out, _ = run(capsys, "fvector", str(path))
    assert code == 0 and out.strip() == "4 5 2"


def test_generate_bing_house_four_rooms(capsys, tmp_path):
    path = tmp_path / "bh4.txt"
    code, _, _ = run(capsys, "generate", "bing-house", "--rooms", "4",
                     "--out", str(path))
    assert code == 0
    assert len(path.read_text().splitlines()) == 144


def test_generate_to_stdout(capsys):
    code, out, _ = run(capsys, "generate", "dunce-hat")
    assert code == 0 and len(out.splitlines()) == 17


def test_rsht_csv_has_one_row_per_round(capsys):
    code, out, _ = run(capsys, "rsht", "dunce-hat", "--rounds", "10",
                       "--seed", "7", "--max-step", "5", "--cap", "500")
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert len(rows) == 10
    assert all(r["reduced_to_point"] == "True" for r in rows)


def test_rsht_seed_replay_is_byte_identical(capsys):
    argv = ["rsht", "dunce-hat", "--rounds", "5", "--seed", "3",
            "--max-step", "5", "--cap", "500"]
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_rsht_summary_matches_csv(capsys, tmp_path):
    out_csv = tmp_path / "r.csv"
    out_json = tmp_path / "r.json"
    code, _, _ = run(capsys, "rsht", "dunce-hat", "--rounds", "8",
                     "--seed", "1", "--max-step", "5", "--cap", "500",
                     "--out", str(out_csv), "--summary", str(out_json))
    assert code == 0
    rows = list(csv.DictReader(out_csv.open()))
    summary = json.loads(out_json.read_text())
    counts = [int(r["expansions"]) for r in rows]
    assert summary["min_expansions"] == min(counts)
    assert summary["mean_expansions"] == sum(counts) / len(counts)


def test_rsht_trace_goes_to_stderr(capsys):
    code, _, err = run(capsys, "rsht", "dunce-hat", "--rounds", "1",
                       "--seed", "1", "--max-step", "5", "--cap", "500",
                       "--trace")
    assert code == 0
    assert any(line.split()[1] == "E" for line in err.splitlines())


def test_homology_json(capsys):
    code, out, _ = run(capsys, "homology", "torus")
    assert code == 0
    assert json.loads(out) == {"betti": [0, 2, 1], "torsion": [[], [], []]}


def test_product_and_delete_facet(capsys, tmp_path):
    prod = tmp_path / "p.txt"
    code, _, _ = run(capsys, "product", "sphere:2", "circle:3",
                     "--out", str(prod))
    assert code == 0
    assert load_complex(str(prod)).f_vector() == (12, 48, 72, 36)
    code, out, _ = run(capsys, "delete-facet", str(prod))
    assert code == 0
    assert len(out.splitlines()) == 35


def test_connsum(capsys):
    code, out, _ = run(capsys, "connsum", "torus", "torus")
    assert code == 0
    assert len(out.splitlines()) == 26  # 2*14 - 2 shared facets


def test_flip_roundtrip(capsys, tmp_path):
    octa = tmp_path / "o.txt"
    octa.write_text("".join(f"{a} {b} {c}\n" for a in (1, 2) for b in (3, 4)
                            for c in (5, 6)))
    code, out, _ = run(capsys, "flip", str(octa), "--r", "1 3",
                       "--complement", "5 6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8 and "1 5 6" in lines


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli_main(["frobnicate"])
    assert exc.value.code == 2


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli_main(["fvector", "abalone", "--bogus"])
    assert exc.value.code == 2


def test_load_complex_error():
    with pytest.raises(ValueError):
        load_complex("no-such-generator")


def test_preset_runs_and_writes_outputs(capsys, tmp_path):
    prefix = tmp_path / "dh"
    log = tmp_path / "dh.ndjson"
    code, out, _ = run(capsys, "preset", "dunce-hat", "--rounds", "15",
                       "--out-prefix", str(prefix), "--log", str(log))
    assert code == 0
    summary = json.loads(out)
    assert summary["success_rate"] == 1.0
    rows = list(csv.DictReader((tmp_path / "dh.csv").open()))
    assert len(rows) == 15
    entries = [json.loads(line) for line in log.read_text().splitlines()]
    assert len(entries) == 15
    assert entries[0]["preset"] == "dunce-hat"
