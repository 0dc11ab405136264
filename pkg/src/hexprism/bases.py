"""Loaders for the bundled search-derived base designs.

Each file under data/ was found once by the search engine and frozen so
builds never pay the search cost.  Designs are verified the first time they
are requested and cached; a failing file is a packaging defect and raises.
"""

from __future__ import annotations

import threading
from importlib import resources

from .core import Design
from .designfile import loads_design
from .verifier import verify_design

DERIVED_NAMES = (
    "k9_hexagons",
    "k10_prisms",
    "b46_hexagons",
    "b66_hexagons",
)

_cache: dict[str, Design] = {}
_lock = threading.Lock()


def load_data_design(name: str, verify: bool = True, require_both_types: bool = True) -> Design:
    """Load data/<name>.json, verifying on first access; results are cached."""
    with _lock:
        hit = _cache.get(name)
        if hit is not None:
            return hit
        text = (
            resources.files("hexprism").joinpath("data", f"{name}.json").read_text()
        )
        design = loads_design(text)
        if verify:
            report = verify_design(design, require_both_types=require_both_types)
            if not report.valid:
                raise RuntimeError(
                    f"bundled design {name!r} failed verification: "
                    + "; ".join(f.code for f in report.failures)
                )
        _cache[name] = design
        return design


def load_base(name: str) -> Design:
    """One of the four derived bases, by data-file name."""
    if name not in DERIVED_NAMES:
        raise KeyError(f"unknown base design {name!r}; choose from {DERIVED_NAMES}")
    return load_data_design(name, require_both_types=False)
