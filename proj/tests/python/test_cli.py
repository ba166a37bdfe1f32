# Copyright 2026 The ogc authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess

import pytest

CLI = os.environ.get("OGC_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="OGC_CLI not set")


def run(*args, cwd, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, cwd=cwd)
    assert proc.returncode == expect, proc.stderr
    return proc


def test_code_report_and_generator_file(tmp_path):
    gen = tmp_path / "gen.txt"
    out = tmp_path / "report.json"
    run(
        "--json", str(out), "code", "--n", "2", "--k", "2", "--q", "3",
        "--mindist", "exact", "--emit-generator", str(gen),
        cwd=tmp_path,
    )
    rep = json.loads(out.read_text())
    assert rep["schema"] == 1
    res = rep["results"]
    assert (res["N"], res["K"], res["d_exact"]) == (40, 10, 18)

    lines = gen.read_text().splitlines()
    assert lines[0] == "3 40 10"
    assert len(lines) == 11
    assert all(len(line.split()) == 40 for line in lines[1:])
    assert all(int(x) in (0, 1, 2) for line in lines[1:] for x in line.split())


def test_enum_cache_roundtrip(tmp_path):
    env_dir = tmp_path / "cache"
    env = dict(os.environ, OGC_CACHE=str(env_dir))

    first = subprocess.run(
        [CLI, "enum", "--n", "2", "--k", "2", "--q", "2"],
        capture_output=True, text=True, cwd=tmp_path, env=env,
    )
    assert first.returncode == 0
    rep1 = json.loads(first.stdout)
    assert rep1["results"]["count"] == 15
    assert rep1["cache_hits"] == 0

    second = subprocess.run(
        [CLI, "enum", "--n", "2", "--k", "2", "--q", "2"],
        capture_output=True, text=True, cwd=tmp_path, env=env,
    )
    rep2 = json.loads(second.stdout)
    assert rep2["cache_hits"] == 1
    assert rep2["results"]["points"] == rep1["results"]["points"]

    # fresh enumeration must agree with the cached payload
    third = subprocess.run(
        [CLI, "--no-cache", "enum", "--n", "2", "--k", "2", "--q", "2"],
        capture_output=True, text=True, cwd=tmp_path, env=env,
    )
    rep3 = json.loads(third.stdout)
    assert rep3["results"]["cache_checksum_ok"] is True


def test_deterministic_payloads(tmp_path):
    runs = [
        run("quadrics", "--n", "1", "--q", "3", "--mode", "all", cwd=tmp_path).stdout
        for _ in range(2)
    ]
    results = [json.loads(r)["results"] for r in runs]
    assert results[0] == results[1]
    assert results[0]["max"] == 12 and results[0]["match"] is True


def test_exit_codes(tmp_path):
    run("hadamard", "--r", "9999", cwd=tmp_path, expect=1)
    # the tabulated family at k = n fails the line check, a real mismatch
    run("cap", "--n", "2", "--q", "3", "--J", "1,3", "--verify", cwd=tmp_path, expect=2)
    run("hadamard", "--r", "3", "--check", "sylvester,design,rm,hadamard", cwd=tmp_path)
    run("spread", "--m", "1", "--q", "3", "--method", "greedy", cwd=tmp_path)
