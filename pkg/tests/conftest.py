from __future__ import annotations

from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def fixtures_dir(repo_root: Path) -> Path:
    path = repo_root / "fixtures"
    if not path.is_dir():
        pytest.skip("bundled fixtures directory is missing")
    return path
