import io
import json
from dataclasses import replace

import pytest

from wsat.constructions import gnt
from wsat.graph import complement, graph6_encode, path_graph
from wsat.percolation import (
    extract_certificate,
    read_certificates,
    write_certificates,
)
from wsat.scripts.wsat_cli import main, parse_range
from wsat.search import read_run_records


@pytest.fixture(autouse=True)
def isolated_run(monkeypatch, tmp_path, results_log):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("WSAT_RESULTS_LOG", results_log)


def run(capsys, command):
    main(command.split())
    return capsys.readouterr().out.splitlines()


def exit_code(command):
    with pytest.raises(SystemExit) as excinfo:
        main(command.split())
    return excinfo.value.code


def test_parse_range():
    assert parse_range(5) == (5, 5)
    assert parse_range("5..7") == (5, 7)
    assert parse_range((3, 4)) == (3, 4)
    with pytest.raises(ValueError):
        parse_range("7..5")
    with pytest.raises(ValueError):
        parse_range("a..b")


def test_construct_prints_graph6(capsys):
    lines = run(capsys, "construct --family complement-path --s 2 --t 3")
    assert lines == [graph6_encode(complement(path_graph(5)))]


def test_construct_with_order_and_certificate(capsys, tmp_path):
    cert = tmp_path / "cp.jsonl"
    lines = run(
        capsys,
        f"construct --family complement-path --s 2 --t 3 "
        f"--emit_order --cert {cert}",
    )
    assert lines[1] == "order: 1-2 2-3 3-4 0-1"
    assert len(read_certificates(str(cert))[0]) == 4
    assert run(capsys, f"verify --in {cert}") == ["VALID"]


def test_construct_appends_to_out_file(capsys, tmp_path):
    out = tmp_path / "graphs.g6"
    run(capsys, f"construct --family gnt --n 7 --t 3 --out {out}")
    run(capsys, f"construct --family complement-path --s 2 --t 3 --out {out}")
    assert out.read_text().splitlines() == [
        graph6_encode(gnt(7, 3).graph),
        graph6_encode(complement(path_graph(5))),
    ]


def test_construct_json(capsys):
    lines = run(capsys, "construct --family gnt --n 7 --t 3 --json")
    data = json.loads(lines[0])
    assert data["family"] == "gnt"
    assert data["edges"] == 8
    assert data["params"] == {"n": 7, "t": 3}


def test_closure_of_gnt(capsys, tmp_path):
    path = tmp_path / "gnt.g6"
    path.write_text(graph6_encode(gnt(7, 3).graph) + "\n")
    lines = run(capsys, f"closure --in {path} --s 2 --t 3")
    assert lines[:6] == [
        "pattern: K_{2,3}",
        "edges: 8",
        "final edges: 21",
        "pattern-free: true",
        "complete: true",
        "steps: 13",
    ]
    assert len(lines) == 6 + 13


def test_closure_reads_stdin(capsys, monkeypatch, tmp_path):
    text = graph6_encode(complement(path_graph(5)))
    monkeypatch.setattr("sys.stdin", io.StringIO(text + "\n"))
    cert = tmp_path / "closure.jsonl"
    lines = run(capsys, f"closure --s 2 --t 3 --cert {cert}")
    assert "steps: 4" in lines
    assert lines[6].strip() == "1. 1-2 side_s=[0, 1] side_t=[2, 3, 4]"
    assert run(capsys, f"verify --in {cert}") == ["VALID"]


def test_closure_json_of_stuck_graph(capsys, tmp_path):
    path = tmp_path / "p5.g6"
    path.write_text(graph6_encode(path_graph(5)))
    cert = tmp_path / "none.jsonl"
    command = f"closure --in {path} --s 2 --t 3 --json --cert {cert}"
    lines = run(capsys, command)
    data = json.loads(lines[0])
    assert data["complete"] is False
    assert data["steps"] == []
    assert not cert.exists()


def test_verify_reports_invalid_certificates(
    capsys, tmp_path, complement_p5, k23
):
    good = extract_certificate(complement_p5, k23)
    bad = replace(good, steps=good.steps[:-1])
    path = tmp_path / "mixed.jsonl"
    write_certificates(str(path), [good, bad])
    assert exit_code(f"verify --in {path}") == 1
    assert capsys.readouterr().out.splitlines() == [
        "VALID",
        "INVALID: closure incomplete",
    ]


def test_verify_malformed_certificate_exits_with_two(
    tmp_path, complement_p5, k23
):
    data = extract_certificate(complement_p5, k23).to_dict()
    data["steps"][1]["edge"] = [2, 3, 4]
    path = tmp_path / "bad.jsonl"
    path.write_text(json.dumps(data) + "\n")
    assert exit_code(f"verify --in {path}") == 2


def test_partial_settings_file(capsys, tmp_path):
    settings = tmp_path / "partial.yaml"
    settings.write_text("workers: 2\n")
    command = f"--config_path {settings} search --n 5 --s 2 --t 3"
    assert run(capsys, command + " --independent")[0] == "wsat = 6"


def test_unreadable_settings_file_exits_with_two(tmp_path):
    settings = tmp_path / "broken.yaml"
    settings.write_text("workers: [2\n")
    assert exit_code(f"--config_path {settings} table --t 3 --n 5") == 2


def test_search_writes_run_records(capsys, results_log):
    lines = run(capsys, "search --n 5 --s 2 --t 3 --independent")
    assert lines[0] == "wsat = 6"
    assert lines[1].startswith("witness: ")
    assert lines[-1].startswith("graphs tested: ")
    records = read_run_records(results_log)
    levels = [r.level["m"] for r in records if r.level is not None]
    assert levels == list(range(0, 7))
    assert records[-1].result["value"] == 6
    assert records[-1].params["independent"] is True


def test_search_resumes_from_log(capsys):
    command = "search --n 5 --s 2 --t 3 --independent --json"
    first = json.loads(run(capsys, command)[0])
    second = json.loads(run(capsys, command)[0])
    assert first["start_m"] == 0
    assert second["start_m"] == 6
    assert second["value"] == first["value"] == 6
    assert second["graphs_tested"] == first["graphs_tested"]
    fresh = json.loads(run(capsys, command + " --noresume")[0])
    assert fresh["start_m"] == 0


def test_search_fast_mode(capsys, tmp_path):
    log = tmp_path / "fast.log"
    lines = run(capsys, f"search --n 4 --s 1 --t 3 --log {log}")
    assert lines[0] == "wsat = 3"
    assert read_run_records(str(log))[-1].result["start_m"] == 3


def test_search_clique_pattern(capsys):
    lines = run(capsys, "search --n 5 --kind clique --t 3")
    assert lines[0] == "wsat = 4"


def test_search_with_certificate(capsys, tmp_path):
    cert = tmp_path / "search.jsonl"
    run(capsys, f"search --n 4 --s 2 --t 2 --cert {cert}")
    assert run(capsys, f"verify --in {cert}") == ["VALID"]


def test_table(capsys, results_log):
    lines = run(capsys, "table --t 3 --n 5")
    assert "PASS" in lines[1]
    assert read_run_records(results_log)[-1].command == "table"


def test_table_json(capsys):
    lines = run(capsys, "table --t 3 --n 5..6 --json")
    rows = [json.loads(line) for line in lines]
    assert [(r["n"], r["exact"], r["status"]) for r in rows] == [
        (5, 6, "PASS"),
        (6, 7, "PASS"),
    ]


@pytest.mark.parametrize(
    "command",
    [
        "search --n 4 --s 2 --t 3",
        "construct --family petersen",
        "construct --family gnt --n 7 --t 3 --emit_order",
        "verify --in missing.jsonl",
        "closure --in graph.g6 --s 2 --t 3 --bogus 1",
        "table --t 4 --n 5",
    ],
)
def test_usage_errors_exit_with_two(command):
    assert exit_code(command) == 2
