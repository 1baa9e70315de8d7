import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from gridknot.cli import main
from gridknot.family import g1, g2

GRIDS = FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out) if out.strip() else None


@pytest.fixture
def grid_file(tmp_path):
    def make(G, name="g.json"):
        p = tmp_path / name
        p.write_text(json.dumps(G.to_json()))
        return str(p)

    return make


class TestGridCommands:
    def test_validate_ok(self, capsys):
        assert run(capsys, "grid", "validate", str(GRIDS / "g2_1_1.json"))[0] == 0

    def test_validate_shared_square(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"n": 2, "X": [1, 2], "O": [1, 2]}))
        code, data = run_json(capsys, "grid", "validate", str(p))
        assert code == 1 and data["error"] == "SharedSquare"

    def test_missing_file(self, capsys):
        assert run(capsys, "grid", "validate", "/nonexistent.json")[0] == 2

    def test_xplus(self, capsys):
        code, data = run_json(capsys, "grid", "xplus", str(GRIDS / "g1_1_1.json"))
        assert code == 0 and data["x_plus"] == [1, 6, 5, 7, 8, 9, 3, 2, 4, 10, 11, 12, 13]

    def test_front(self, capsys):
        code, data = run_json(capsys, "grid", "front", str(GRIDS / "g2_1_1.json"))
        assert code == 0 and (data["tb"], data["r"], data["sl"]) == (2, -1, 3)

    def test_to_braid_prime(self, capsys):
        code, data = run_json(capsys, "grid", "to-braid", "--prime", str(GRIDS / "g1_1_1.json"))
        assert data["sigma"] == "s3^5 s2 s3^-1 s1^-2 s2^3 s1 s2^-1 s1"

    def test_move_effect(self, capsys):
        code, data = run_json(capsys, "grid", "move", str(GRIDS / "unknot_2.json"), "--kind", "stab:SW", "--at", "1")
        assert code == 0 and data["effect"] == "NegativeStab"
        assert data["grid"]["n"] == 3

    def test_illegal_commutation(self, capsys, grid_file):
        from gridknot.grid import GridDiagram

        path = grid_file(GridDiagram([1, 2, 3, 4], [3, 4, 1, 2]))
        assert run(capsys, "grid", "move", path, "--kind", "commutation", "--at", "1")[0] == 1

    def test_mirror_show_planar(self, capsys):
        for action in ("mirror", "show", "planar"):
            assert run(capsys, "grid", action, str(GRIDS / "trefoil_5.json"))[0] == 0


class TestBraidCommands:
    def test_equal(self, capsys):
        assert run(capsys, "braid", "equal", "3 | 1 2 1", "3 | 2 1 2")[0] == 0
        assert run(capsys, "braid", "equal", "3 | 1 2", "3 | 2 1")[0] == 1

    def test_sl(self, capsys):
        code, data = run_json(capsys, "braid", "sl", "s3 s2^-2 s3^2 s2 s3^-1 s1^-1 s2 s1^2", "--strands", "4")
        assert data["sl"] == -1

    def test_exchange(self, capsys):
        code, data = run_json(capsys, "braid", "exchange", "4 | 3 2 -1 2 1 -2", "--gen", "1")
        assert code == 0 and data["braid"] == "4 | 3 2 1 2 -1 -2"

    def test_exchange_refused(self, capsys):
        assert run(capsys, "braid", "exchange", "4 | 1 2 -1 1", "--gen", "1", "--site", "0", "2")[0] == 1
        assert run(capsys, "braid", "exchange", "4 | 1 2 1", "--gen", "1")[0] == 1

    def test_destabilize_refused(self, capsys):
        assert run(capsys, "braid", "stabilize", "--inverse", "3 | 2 2")[0] == 1

    def test_bad_braid(self, capsys):
        assert run(capsys, "braid", "nf", "3 | 5")[0] == 2

    def test_to_grid_and_front(self, capsys):
        assert run(capsys, "braid", "to-grid", "3 | 1 -2 1 -2")[0] == 0
        code, data = run_json(capsys, "braid", "front", "3 | 1 -2 1 -2")
        assert data["tb"] - data["r"] == 0 - 3


class TestFloerCommands:
    def test_theta_g1(self, capsys, tmp_path):
        cert = tmp_path / "c.json"
        code, out, _ = run(
            capsys, "floer", "theta", str(GRIDS / "g1_1_1.json"), "--expect", "vanishing", "--emit-certificate", str(cert)
        )
        assert code == 0 and out.startswith("NullChain")
        assert run(capsys, "floer", "verify", str(GRIDS / "g1_1_1.json"), str(cert))[0] == 0
        # the same certificate does not prove anything about G2
        assert run(capsys, "floer", "verify", str(GRIDS / "g2_1_1.json"), str(cert))[0] == 1

    def test_theta_g2(self, capsys):
        code, data = run_json(capsys, "floer", "theta", str(GRIDS / "g2_1_1.json"))
        assert code == 0 and data["kind"] == "NonVanishing" and data["rank"] == 8
        assert run(capsys, "floer", "theta", str(GRIDS / "g2_1_1.json"), "--expect", "vanishing")[0] == 1

    def test_oracle(self, capsys):
        code, data = run_json(capsys, "floer", "theta", str(GRIDS / "trefoil_5.json"), "--oracle")
        assert code == 0 and data["oracle_agrees"]

    def test_oracle_too_large(self, capsys):
        assert run(capsys, "floer", "theta", str(GRIDS / "g1_1_1.json"), "--oracle")[0] == 3

    def test_state_cap(self, capsys):
        assert run(capsys, "--state-cap", "3", "floer", "theta", str(GRIDS / "g2_1_1.json"))[0] == 3


class TestHomflyCommands:
    def test_trefoil_z0(self, capsys):
        code, data = run_json(capsys, "homfly", "braid", "2 | 1 1 1", "--eval", "z0")
        assert code == 0 and "z0" in data

    def test_grid(self, capsys):
        assert run(capsys, "homfly", "grid", str(GRIDS / "figure_eight_6.json"))[0] == 0

    def test_cap(self, capsys):
        assert run(capsys, "--crossing-cap", "2", "homfly", "braid", "2 | 1 1 1")[0] == 3


class TestFamilyCommands:
    def test_grids(self, capsys):
        code, data = run_json(capsys, "family", "g1", "--a", "1", "--b", "1")
        assert data == g1(1, 1).to_json()
        code, data = run_json(capsys, "family", "g2", "--a", "1", "--b", "1")
        assert data == g2(1, 1).to_json()

    def test_words(self, capsys):
        code, out, _ = run(capsys, "family", "b1", "--a", "0", "--b", "0")
        assert out.splitlines()[1] == "s3 s2^-2 s3^2 s2 s3^-1 s1^-1 s2 s1^2"
        assert run(capsys, "family", "conjectured", "--a", "0", "--b", "0", "--c", "1", "--d", "1")[0] == 0

    def test_negative(self, capsys):
        assert run(capsys, "family", "b1", "--a", "-1", "--b", "0")[0] == 2

    def test_primality(self, capsys):
        assert run(capsys, "family", "primality", "--a", "2", "--b", "3")[0] == 0

    def test_reproduce(self, capsys, tmp_path):
        rep = tmp_path / "r.json"
        code, out, _ = run(capsys, "family", "reproduce", "--a", "0", "--b", "0", "--report", str(rep))
        assert code == 0 and out.rstrip().endswith("verdict: transversely nonsimple pair certified")
        assert json.loads(rep.read_text())["verdict"] == "transversely nonsimple pair certified"

    def test_reproduce_budget(self, capsys):
        assert run(capsys, "--state-cap", "4", "family", "reproduce", "--a", "0", "--b", "0")[0] == 3


class TestConfig:
    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"output_format": "json", "homfly_crossing_cap": 2}))
        assert run(capsys, "--config", str(cfg), "homfly", "braid", "2 | 1 1 1")[0] == 3
        code, out, _ = run(capsys, "--config", str(cfg), "braid", "sl", "2 | 1 1 1")
        assert json.loads(out)["sl"] == 1

    def test_env_var(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"output_format": "json"}))
        monkeypatch.setenv("GRIDKNOT_CONFIG", str(cfg))
        code, out, _ = run(capsys, "braid", "sl", "2 | 1 1 1")
        assert json.loads(out)["sl"] == 1

    def test_bad_config(self, capsys, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"nonsense": 1}))
        assert run(capsys, "--config", str(cfg), "braid", "sl", "2 | 1")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gridknot.cli", "braid", "sl", "2 | 1 1 1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
