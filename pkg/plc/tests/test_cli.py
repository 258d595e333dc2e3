import csv
import json
import os

import pytest

from plc.engine.configuration import ParallelPolicy
from plc.scripts.cli import main, EXIT_OK, EXIT_INVALID_INPUT, EXIT_BUDGET, EXIT_IO
from plc.scripts.config import RunConfig, parse_key_values, parse_start, resolve_run_config
from plc.scripts.export import STATS_COLUMNS


def first_stdout_line(capsys) -> str:
    return capsys.readouterr().out.splitlines()[0]


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.reader(f))


def test_oracle_grid_cover(capsys):
    assert main(["oracle", "grid-cover", "--n", "3", "--spacing", "arithmetic"]) == EXIT_OK
    assert first_stdout_line(capsys) == "5"


def test_oracle_sumset(capsys):
    assert main(["oracle", "sumset", "--a", "0,1,2", "--b", "0,1,2"]) == EXIT_OK
    assert first_stdout_line(capsys) == "5"


def test_oracle_incidence(capsys):
    assert main(["oracle", "incidence", "--families", "4", "--lines", "2", "--seed", "7"]) == EXIT_OK
    assert int(first_stdout_line(capsys)) >= 4


def test_oracle_rejects_bad_input():
    assert main(["oracle", "sumset", "--a", "0,0", "--b", "1"]) == EXIT_INVALID_INPUT
    assert main(["oracle", "grid-cover", "--n", "1"]) == EXIT_INVALID_INPUT


def test_iterate_canonical(tmp_path):
    out = tmp_path / "run"
    assert main(["iterate", "--max-stage", "3", "--output-dir", str(out), "--omit-timings"]) == EXIT_OK
    rows = read_csv(out / "stats.csv")
    assert rows[0] == STATS_COLUMNS
    assert rows[1][:9] == ["1", "4", "6", "3", "3", "2", "2", "0", rows[1][8]]
    assert rows[1][9] == ""
    assert rows[2][:7] == ["2", "7", "9", "3", "4", "2", "3"]
    assert rows[2][9] == "3"
    assert rows[3][:2] == ["3", "13"]
    assert rows[3][10:] == ["", ""]
    for k in (1, 2, 3):
        assert os.path.exists(out / f"stage_{k}.plc")
    with open(out / "bounds.json") as f:
        bounds = json.load(f)
    assert len(bounds["stages"]) == 3


def test_iterate_growth_plot(tmp_path):
    out = tmp_path / "run"
    assert main(["iterate", "--max-stage", "2", "--output-dir", str(out), "--growth-plot", "growth.png"]) == EXIT_OK
    assert os.path.exists(out / "growth.png")


def test_square_start_under_error_policy(tmp_path):
    args = ["iterate", "--start", "0,0; 1,0; 0,1; 1,1", "--policy", "error", "--output-dir", str(tmp_path)]
    assert main(args) == EXIT_INVALID_INPUT


def test_square_start_needs_an_explicit_policy(tmp_path):
    args = ["iterate", "--start", "0,0; 1,0; 0,1; 1,1", "--max-stage", "3", "--output-dir", str(tmp_path)]
    assert main(args) == EXIT_INVALID_INPUT
    assert not os.path.exists(tmp_path / "stage_1.plc")

    # accepted under an explicit policy; the stalled growth is reported, not raised
    assert main(args + ["--policy", "skip"]) == EXIT_OK
    assert [row[1] for row in read_csv(tmp_path / "stats.csv")[1:]] == ["4", "5", "5"]
    with open(tmp_path / "bounds.json") as f:
        stages = json.load(f)["stages"]
    assert stages[1]["prop2_ok"] is False
    assert stages[2]["prop1_ok"] is False
    assert main(["verify", str(tmp_path / "stage_3.plc")]) == EXIT_OK


def test_point_budget_leaves_a_resumable_snapshot(tmp_path):
    args = ["iterate", "--max-stage", "3", "--max-points", "10", "--output-dir", str(tmp_path)]
    assert main(args) == EXIT_BUDGET
    assert os.path.exists(tmp_path / "stage_2.plc")
    assert not os.path.exists(tmp_path / "stage_3.plc")
    assert len(read_csv(tmp_path / "stats.csv")) == 3


def test_resume_matches_uninterrupted_run(tmp_path):
    direct, partial, resumed = tmp_path / "direct", tmp_path / "partial", tmp_path / "resumed"
    assert main(["iterate", "--max-stage", "3", "--output-dir", str(direct), "--omit-timings"]) == EXIT_OK
    assert main(["iterate", "--max-stage", "2", "--output-dir", str(partial)]) == EXIT_OK
    assert main(["resume", str(partial / "stage_2.plc"), "--max-stage", "3", "--output-dir", str(resumed),
                 "--omit-timings"]) == EXIT_OK
    for k in (2, 3):
        assert (resumed / f"stage_{k}.plc").read_bytes() == (direct / f"stage_{k}.plc").read_bytes()
    assert read_csv(resumed / "stats.csv")[-1] == read_csv(direct / "stats.csv")[-1]


def test_resume_rejects_corrupted_snapshot(tmp_path):
    assert main(["iterate", "--max-stage", "1", "--output-dir", str(tmp_path)]) == EXIT_OK
    path = tmp_path / "stage_1.plc"
    path.write_text(path.read_text().replace("K 1", "K 2"))
    assert main(["resume", str(path), "--output-dir", str(tmp_path / "out")]) == EXIT_IO
    assert main(["verify", str(path)]) == EXIT_IO


def test_verify_and_render(tmp_path, capsys):
    assert main(["iterate", "--max-stage", "2", "--output-dir", str(tmp_path)]) == EXIT_OK
    capsys.readouterr()
    assert main(["verify", str(tmp_path / "stage_2.plc")]) == EXIT_OK
    assert first_stdout_line(capsys) == "ok"
    svg = tmp_path / "stage_2.svg"
    assert main(["render", str(tmp_path / "stage_2.plc"), "--viewport=-1,3,-1,8", "--output", str(svg)]) == EXIT_OK
    assert svg.read_text().count("<circle") == 5
    assert main(["render", str(tmp_path / "stage_2.plc"), "--viewport", "0,0,0,1",
                 "--output", str(svg)]) == EXIT_INVALID_INPUT


def test_run_config_layers(tmp_path):
    config_file = tmp_path / "run.cfg"
    config_file.write_text("# canonical start, shifted\n"
                           "start = 1,0; 2,0; 1,1; 6,7\n"
                           "max_stage = 4\n"
                           "policy = projective\n"
                           "workers = 2\n")
    cfg = resolve_run_config(str(config_file), environ={}, max_stage=2)
    assert cfg.max_stage == 2
    assert cfg.policy == ParallelPolicy.PROJECTIVE
    assert cfg.workers == 2
    assert str(cfg.start) == "1,0; 2,0; 1,1; 6,7"
    assert resolve_run_config(str(config_file), environ={"PLC_WORKERS": "3"}).workers == 3


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(max_stage=0)
    with pytest.raises(ValueError):
        RunConfig(max_points=-1)
    with pytest.raises(ValueError):
        parse_key_values("colour = blue\n")
    with pytest.raises(ValueError):
        parse_key_values("max_stage 3\n")
    with pytest.raises(ValueError):
        parse_start("0,0; 1,0; 0,1")
    with pytest.raises(ValueError):
        resolve_run_config(environ={"PLC_WORKERS": "many"})


@pytest.mark.slow
def test_worker_counts_give_identical_outputs(tmp_path):
    outputs = []
    for workers in (1, 2, 8):
        out = tmp_path / f"w{workers}"
        assert main(["iterate", "--max-stage", "4", "--workers", str(workers), "--output-dir", str(out),
                     "--omit-timings"]) == EXIT_OK
        outputs.append(out)
    for name in ["stats.csv", "bounds.json"] + [f"stage_{k}.plc" for k in range(1, 5)]:
        reference = (outputs[0] / name).read_bytes()
        assert all((out / name).read_bytes() == reference for out in outputs[1:])
