from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def golden():
    """Read a frozen golden file; bytes for binary suffixes, text otherwise."""

    def read(name: str):
        path = GOLDEN_DIR / name
        if path.suffix in (".pgm", ".svg"):
            return path.read_bytes()
        return path.read_text(encoding="utf-8")

    return read
