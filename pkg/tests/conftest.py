from __future__ import annotations

import os
import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypocubic.pipeline import PipelineConfig, process_stream  # noqa: E402
from hypocubic.plantri import find_plantri, generate_census  # noqa: E402

CRITERIA = {
    1: "published census rows n=20..40 (C4, N4, C5, N5, H exact)",
    2: "published census rows n=44, 46, 48 (exact)",
    3: "rows n>=50 out of scope; covered by 4-8",
    4: "find_hamiltonian == reference oracle (exhaustive n<=10, 10^4 random n<=16)",
    5: "fixture classifications (Petersen, dodecahedron, K4, prism)",
    6: "cherry-pair cyclic connectivity == brute force (all cubic n<=14, 100 random n<=20)",
    7: "planar_code round trip + face identities (random and census inputs)",
    8: "three 76-vertex graphs (optional external data)",
    9: "jobs=1 vs jobs=8 on n=44: identical counters and survivor bytes",
}

_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_runtest_logreport(report):
    k = getattr(report, "criterion", None)
    if k is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[k].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, text in CRITERIA.items():
        results = _outcomes.get(k)
        if not results:
            status = "NOT RUN"
        elif "failed" in results:
            status = "FAIL"
        elif all(r == "skipped" for r in results):
            status = "SKIP"
        else:
            status = "PASS"
        detail = f"{results.count('passed')} passed, {results.count('failed')} failed, {results.count('skipped')} skipped" if results else ""
        tr.write_line(f"criterion {k}: {status:7} {text} [{detail}]")


@pytest.fixture(scope="session")
def census_dir(request) -> Path:
    """Directory holding plantri census inputs ``n{N}.pc``.

    ``$HYPOCUBIC_CENSUS_DIR`` takes pre-generated files; otherwise they are
    generated once into the pytest cache.
    """
    env = os.environ.get("HYPOCUBIC_CENSUS_DIR")
    if env:
        return Path(env)
    return Path(request.config.cache.mkdir("census"))


@pytest.fixture(scope="session")
def census_file(census_dir):
    def get(n: int) -> Path:
        path = census_dir / f"n{n}.pc"
        if not path.exists():
            exe = find_plantri()
            if exe is None:
                pytest.skip("plantri not available (set $PLANTRI or install passagemath-plantri)")
            tmp = path.with_suffix(".part")
            generate_census(n, tmp, plantri=exe)
            tmp.rename(path)
        return path

    return get


@pytest.fixture(scope="session")
def census_run(census_file, tmp_path_factory):
    """Memoized pipeline run: ``census_run(n, jobs)`` -> (counters, survivor bytes)."""
    runs: dict[tuple[int, int], tuple] = {}

    def run(n: int, jobs: int = 1):
        key = (n, jobs)
        if key not in runs:
            out = tmp_path_factory.mktemp(f"run{n}_{jobs}") / "survivors.pc"
            cfg = PipelineConfig(inputs=[census_file(n)], jobs=jobs, survivors=out, orders=(n,))
            counters = process_stream(cfg)
            runs[key] = (counters, out.read_bytes())
        return runs[key]

    return run
