import pytest

from jacobi_interlace import config


def test_defaults():
    s = config.get_settings()
    assert s.coincidence_tol == 1e-9 and s.newton_tol == 1e-14 and s.newton_maxiter == 50


def test_using_restores():
    before = config.get_settings()
    with config.using(coincidence_tol=1e-3) as s:
        assert s.coincidence_tol == 1e-3
    assert config.get_settings() == before


def test_parse_config():
    text = "# tolerances\ncoincidence_tol = 1e-8\nquasi_grid_start=2048  # finer\n\n"
    assert config.parse_config(text) == {"coincidence_tol": 1e-8, "quasi_grid_start": 2048}


def test_parse_config_rejects_unknown_and_malformed():
    with pytest.raises(KeyError):
        config.parse_config("tolerance = 1")
    with pytest.raises(ValueError):
        config.parse_config("coincidence_tol")


def test_load_config(tmp_path):
    p = tmp_path / "run.cfg"
    p.write_text("table_tol_3dp = 0.002\n")
    assert config.load_config(p) == {"table_tol_3dp": 0.002}
