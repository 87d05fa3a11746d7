import pytest

from p3ext.config import DEFAULT_SETTINGS, load_settings


def test_defaults_and_overrides():
    assert load_settings() == DEFAULT_SETTINGS
    assert load_settings(height=3).height == 3
    assert load_settings(height=None) == DEFAULT_SETTINGS


def test_file(tmp_path):
    path = tmp_path / "bounds.cfg"
    path.write_text("prime-bound = 20_000\nwitness_nmax = 40\n")
    s = load_settings(path)
    assert s.prime_bound == 20000 and s.witness_nmax == 40
    path.write_text("bogus = 1\n")
    with pytest.raises(ValueError):
        load_settings(path)
