"""Locate and drive the external plantri generator.

Census input (reconstructed recipe): planar cubic graphs of girth 5 with
cyclic connectivity at least 4 on ``n`` vertices are the duals of
4-connected plane triangulations with minimum degree 5 on ``n/2 + 2``
vertices::

    plantri -m5c4d <n/2 + 2> [res/mod] out.pc

``-d`` writes the dual (the cubic graph) in planar_code.  ``res/mod``
splits one order into ``mod`` independent parts.  The pipeline re-checks
cubicity, girth and cyclic connectivity itself instead of trusting the flags.
"""

from __future__ import annotations

import os
import shutil
import subprocess
from importlib.util import find_spec
from pathlib import Path


def find_plantri() -> str | None:
    """Path of a plantri executable: ``$PLANTRI``, then ``PATH``, then the passagemath-plantri wheel."""
    env = os.environ.get("PLANTRI")
    if env and os.access(env, os.X_OK):
        return env
    found = shutil.which("plantri")
    if found:
        return found
    try:
        spec = find_spec("sage_wheels")
    except (ImportError, ValueError):
        spec = None
    if spec is not None and spec.submodule_search_locations:
        for root in spec.submodule_search_locations:
            candidate = Path(root) / "bin" / "plantri"
            if candidate.is_file() and os.access(candidate, os.X_OK):
                return str(candidate)
    return None


def census_arguments(n: int, part: tuple[int, int] | None = None) -> list[str]:
    if n % 2 or n < 4:
        raise ValueError(f"cubic graphs need an even order >= 4, got {n}")
    args = ["-m5c4d", str(n // 2 + 2)]
    if part is not None:
        args.append(f"{part[0]}/{part[1]}")
    return args


def generate_census(n: int, out: Path, *, plantri: str | None = None, part: tuple[int, int] | None = None) -> Path:
    """Write the order-``n`` census input to ``out`` (planar_code with header)."""
    exe = plantri or find_plantri()
    if exe is None:
        raise FileNotFoundError("plantri not found; set $PLANTRI or install passagemath-plantri")
    subprocess.run([exe, *census_arguments(n, part), str(out)], check=True, capture_output=True)
    return out
