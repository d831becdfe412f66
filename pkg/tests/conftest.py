import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # keep tests away from the user's real Kostka cache
    monkeypatch.setenv("JANSUM_CACHE", str(tmp_path / "kostka-cache.json"))
