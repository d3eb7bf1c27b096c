#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Build the extension first, then run this script:

    cargo build -p antiramsey-python --release
    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path


def locate_extension() -> Path:
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libantiramsey_py.so", "antiramsey_py.so", "libantiramsey_py.dylib")
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    sys.exit("extension not built; run: cargo build -p antiramsey-python --release")


def import_module():
    source = locate_extension()
    staging = Path(tempfile.mkdtemp(prefix="antiramsey-py-"))
    shutil.copy(source, staging / "antiramsey_py.so")
    sys.path.insert(0, str(staging))
    import antiramsey_py

    return antiramsey_py


def main() -> None:
    ar = import_module()

    # construction and structural queries
    petersen = ar.Graph.named("petersen")
    assert petersen.vertex_count == 10 and petersen.edge_count == 15
    assert petersen.girth() == 5
    assert petersen.structure()["is_regular_of"] == 3
    assert ar.chromatic_index(petersen) == 4

    k24 = ar.Graph.gadget(4, 2)
    assert (k24.vertex_count, k24.edge_count) == (6, 8)

    # the two-hub gadget forces a rainbow 4-cycle
    c4 = ar.Graph.named("c_4")
    cert = ar.forces(k24, c4)
    assert cert["verdict"] == "forces", cert

    # the plain 4-cycle does not force itself; the witness is proper
    cert = ar.forces(c4, c4)
    assert cert["verdict"] == "witness_found"
    assert ar.is_proper(c4, cert["witness"])

    # gadget multiplicity thresholds
    assert ar.smallest_forcing_multiplicity_py(3, 2) == 1
    assert ar.smallest_forcing_multiplicity_py(4, 3) == 2

    # rainbow detection on a forced triangle
    triangle = ar.Graph.named("c_3")
    found = ar.find_rainbow_copy(triangle, triangle, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    assert found is not None

    # cubic colouring scheme stays proper and uses at most 4 colours
    colouring = ar.avoid_rainbow_c4(petersen)
    assert ar.is_proper(petersen, colouring)
    assert len({c for (_, _, c) in colouring}) <= 4

    # exact fractional width of {a, b}, {b, c}
    width = Fraction(ar.fractional_width([["c1", "c2"], ["c2", "c3"]]))
    assert width == Fraction(2, 3)

    # disjoint representatives
    system = ar.disjoint_representatives([["c1"], ["c2"]], [[0], [1]])
    assert system == [0, 1]
    clash = ar.disjoint_representatives([["c1"], ["c1"]], [[0], [1]])
    assert clash is None

    # bound table
    lower, upper, _ = ar.bounds(c4)
    assert (lower, upper) == (4, 4)

    # host for a path-forest, built through the induction
    forest = ar.Graph.named("p_4")
    host = ar.Graph.forest_host(forest)
    assert host.max_degree() <= forest.edge_count - 1

    print("smoke test passed:", ar.__version__)


if __name__ == "__main__":
    main()
