import json

import pytest
from click.testing import CliRunner

from qhecke.cli import cli


@pytest.fixture
def runner(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("QHECKE_CACHE", raising=False)
    return CliRunner()


def _payload(result):
    return json.loads(result.output[result.output.index("{"):])


def test_qdim_edim(runner):
    result = runner.invoke(cli, ["qdim", "--shape", "[1]", "--rank", "2", "--which", "edim"])
    assert result.exit_code == 0
    payload = _payload(result)
    assert payload["value"] == "q^-2 + q^-1"
    assert payload["mode"] == "exact"


def test_qdim_routes_agree(runner):
    values = set()
    for route in ("closed", "combinatorial", "det"):
        result = runner.invoke(cli, ["qdim", "--shape", "[2,1]", "--rank", "2", "--route", route])
        assert result.exit_code == 0
        values.add(_payload(result)["value"])
    assert len(values) == 1


def test_qdim_z_partition(runner):
    result = runner.invoke(cli, ["qdim", "--shape", "[0,-1]", "--rank", "2", "--which", "normalized"])
    assert result.exit_code == 0
    assert _payload(result)["shape"] == "[0,-1]"


def test_invalid_route_is_a_usage_error(runner):
    result = runner.invoke(cli, ["qdim", "--shape", "[1]", "--rank", "2", "--which", "edim", "--route", "det"])
    assert result.exit_code == 2


def test_bad_shape_is_a_usage_error(runner):
    result = runner.invoke(cli, ["qdim", "--shape", "[1,2]", "--rank", "2"])
    assert result.exit_code == 2


def test_domain_error_is_reported_as_json(runner):
    result = runner.invoke(cli, ["qdim", "--shape", "[1,1,1]", "--rank", "2"])
    assert result.exit_code == 1
    assert _payload(result)["error"] == "LengthExceedsRank"


def test_numeric_mode_needs_a_valid_point(runner):
    result = runner.invoke(cli, ["--mode", "numeric", "--v0", "1", "qdim", "--shape", "[1]", "--rank", "2"])
    assert result.exit_code == 2


def test_numeric_mode(runner):
    result = runner.invoke(cli, ["--mode", "numeric", "--v0", "2", "qdim", "--shape", "[1]", "--rank", "2", "--which", "edim"])
    assert result.exit_code == 0
    assert _payload(result)["value"] == "5/16"


def test_fuse(runner):
    result = runner.invoke(cli, ["fuse", "--a", "[1]", "--b", "[1]", "--rank", "2"])
    assert result.exit_code == 0
    assert _payload(result)["terms"] == [
        {"shape": "[2,0]", "multiplicity": 1},
        {"shape": "[1,1]", "multiplicity": 1},
    ]


def test_certify_builtin(runner):
    result = runner.invoke(cli, ["certify"])
    assert result.exit_code == 0
    payload = _payload(result)
    assert payload["passed"] is True
    assert payload["rank"] == 2


def test_certify_failure_exits_one(runner, tmp_path):
    path = tmp_path / "one.json"
    path.write_text(json.dumps({"d": 1, "entries": [{"k": 1, "l": 1, "i": 1, "j": 1, "c": 1}]}))
    result = runner.invoke(cli, ["certify", "--rmatrix", str(path)])
    assert result.exit_code == 1
    assert _payload(result)["passed"] is False


def test_rank_of_odd_symmetry(runner):
    result = runner.invoke(cli, ["--rank-cutoff", "4", "rank", "--rmatrix", "builtin:super1_1"])
    assert result.exit_code == 0
    assert _payload(result)["rank"] == "NotEvenUpTo(4)"


def test_unknown_builtin(runner):
    result = runner.invoke(cli, ["rank", "--rmatrix", "builtin:e8"])
    assert result.exit_code == 1
    assert _payload(result)["error"] == "ParseError"


def test_shr_integral(runner):
    result = runner.invoke(cli, ["integral", "--group", "shr", "--indices", "I=1,2;J=1,2"])
    assert result.exit_code == 0
    assert _payload(result)["value"] == "(1)/(1 + q)"


def test_hr_integral_degree_one(runner):
    result = runner.invoke(cli, ["integral", "--indices", "I=1;J=1;K=1;L=1"])
    assert result.exit_code == 0
    assert _payload(result)["value"] == "(1)/(1 + q)"


def test_integral_needs_one_request(runner):
    result = runner.invoke(cli, ["integral", "--group", "shr"])
    assert result.exit_code == 2


def test_integral_shr_rejects_k(runner):
    result = runner.invoke(cli, ["integral", "--group", "shr", "--indices", "I=1;J=1;K=1;L=1"])
    assert result.exit_code == 2


def test_integral_verify_degree_cap(runner):
    result = runner.invoke(cli, ["integral", "--verify", "3"])
    assert result.exit_code == 1
    payload = _payload(result)
    assert payload["error"] == "CapExceeded"
    assert payload["limit"] == 2


def test_idempotent(runner):
    result = runner.invoke(cli, ["idempotent", "--shape", "[2]"])
    assert result.exit_code == 0
    payload = _payload(result)
    assert payload["tableau"] == [[1, 2]]
    assert len(payload["element"]["terms"]) == 2
    assert payload["trace"]["value"] == "(1)/(1 + q)"


def test_central_cross_check(runner):
    result = runner.invoke(cli, ["central", "--shape", "[2,1]", "--cross-check"])
    assert result.exit_code == 0
    assert _payload(result)["cross_checked"] is True


def test_trace_to_scalar(runner):
    result = runner.invoke(cli, ["trace", "--shape", "[2]", "--rank", "1"])
    assert result.exit_code == 0
    payload = _payload(result)
    assert payload["steps"] == 2
    assert payload["value"] == "q^-2"


def test_trace_steps_out_of_range(runner):
    result = runner.invoke(cli, ["trace", "--shape", "[2]", "--rank", "1", "--steps", "3"])
    assert result.exit_code == 1


def test_table_format(runner):
    result = runner.invoke(cli, ["--format", "table", "fuse", "--a", "[1]", "--b", "[1]", "--rank", "2"])
    assert result.exit_code == 0
    assert "multiplicity" in result.output
    assert "[2,0]" in result.output


def test_output_file(runner, tmp_path):
    target = tmp_path / "out.json"
    result = runner.invoke(cli, ["--output", str(target), "fuse", "--a", "[1]", "--b", "[1]", "--rank", "2"])
    assert result.exit_code == 0
    assert json.loads(target.read_text())["rank"] == 2


def test_cache_dir_from_environment(runner, tmp_path):
    cache_dir = tmp_path / "cache"
    result = runner.invoke(cli, ["idempotent", "--shape", "[1,1]"], env={"QHECKE_CACHE": str(cache_dir)})
    assert result.exit_code == 0


@pytest.mark.slow
def test_selftest(runner):
    result = runner.invoke(cli, ["selftest"])
    assert result.exit_code == 0
    assert _payload(result)["passed"] is True
