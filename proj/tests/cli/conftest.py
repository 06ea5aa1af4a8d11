import json
import os
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


def pytest_addoption(parser):
    parser.addoption("--cli", action="store", default=os.environ.get("IWTOWER_CLI", str(ROOT / "build/tools/iwtower")))


@pytest.fixture(scope="session")
def fixtures_dir():
    return Path(os.environ.get("IWTOWER_FIXTURES", ROOT / "tests/fixtures"))


@pytest.fixture(scope="session")
def schemas_dir():
    return Path(os.environ.get("IWTOWER_SCHEMAS", ROOT / "schemas"))


@pytest.fixture(scope="session")
def run(request):
    exe = request.config.getoption("--cli")

    def go(*args, check=None):
        proc = subprocess.run([exe, *map(str, args)], capture_output=True, text=True, timeout=300)
        if check is not None:
            assert proc.returncode == check, proc.stderr
        return proc

    return go


@pytest.fixture(scope="session")
def run_json(run):
    def go(*args, check=0):
        return json.loads(run(*args, "--format", "json", check=check).stdout)

    return go
