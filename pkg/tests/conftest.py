from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from lorenz_fiber.braid import build_braid  # noqa: E402
from lorenz_fiber.diagram import YoungDiagram  # noqa: E402
from lorenz_fiber.homology import monodromy_seifert_route, monodromy_twist_route  # noqa: E402
from lorenz_fiber.surface import cycle_basis, seifert_matrix  # noqa: E402


@lru_cache(maxsize=None)
def pipeline(columns: tuple[int, ...]):
    """(D, B, S, twist M, Seifert M) for a diagram, cached across tests."""
    D = YoungDiagram(columns)
    B = build_braid(D)
    S = seifert_matrix(B, cycle_basis(B, D))
    return D, B, S, monodromy_twist_route(D, S), monodromy_seifert_route(S)
