import importlib.util
from pathlib import Path

import pytest

from coxref.config import LIMITS, Limits, VerifyConfig
from coxref.core.group import BALL_CAP
from coxref.core.words import CLOSURE_CAP
from coxref.spaces.geometry import DESCENT_CAP

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_default_limits_feed_the_modules():
    assert (BALL_CAP, CLOSURE_CAP, DESCENT_CAP) == (10**5, 10**6, 10**4)
    assert LIMITS == Limits()
    assert LIMITS.with_overrides(ball_elements=7, braid_closure=None).ball_elements == 7
    with pytest.raises(Exception):
        LIMITS.ball_elements = 3


def test_verify_config_radius():
    cfg = VerifyConfig()
    assert cfg.radius_for("line") == 8 and cfg.radius_for("236") == 6


def test_growth_script(capsys):
    load("growth_series").main(["--radius", "3", "A2", "Dinf"])
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "A2,1,2,2,1,6" and out[2] == "Dinf,1,2,2,2,7"


def test_verify_script(capsys, tmp_path):
    code = load("verify_models").main(["--models", "line", "cayley:A2", "--checks", "1", "6",
                                       "--radius", "3", "--json", str(tmp_path / "r.json")])
    assert code == 0 and (tmp_path / "r.json").exists()


def test_render_script(tmp_path, capsys):
    load("render_tilings").main(["--kinds", "244", "--radius", "2", "--out-dir", str(tmp_path)])
    assert (tmp_path / "tri244_r2.svg").exists() and (tmp_path / "tri244_r2.json").exists()


def test_recognize_script(capsys):
    assert load("recognize_suite").main(["--max-entry", "3", "--max-order", "30"]) == 0
    assert "MISMATCH" not in capsys.readouterr().out
