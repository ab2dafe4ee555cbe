# SPDX-License-Identifier: Apache-2.0
import os
import pathlib
import subprocess

import pytest

DATA = pathlib.Path(os.environ.get("COQA_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


@pytest.fixture
def data():
    return DATA


@pytest.fixture
def cli():
    exe = os.environ.get("COQA_BIN")
    if not exe or not os.path.exists(exe):
        pytest.skip("COQA_BIN not set")

    def run(*args, check=None):
        proc = subprocess.run([exe, *map(str, args)], capture_output=True, text=True)
        if check is not None:
            assert proc.returncode == check, proc.stderr
        return proc

    return run
