"""Lorenz links from hanging Young diagrams and their fiber monodromies."""
from .braid import LorenzBraid, build_braid, closure_components
from .diagram import (CellClass, FamilyDecomposition, YoungDiagram, classify_cells, decompose,
                      enumerate_all, enumerate_family, from_columns)
from .dynamics import (BoundReport, OrbitTrace, external_lemma_check, growth_rate,
                       internal_lemma_check, orbit_trace, theorem_bound_check)
from .homology import (MonodromyMatrix, alexander_polynomial, char_poly,
                       monodromy_seifert_route, monodromy_twist_route)
from .polynomial import IntPolynomial
from .spectra import SpectrumReport, cyclotomic_test, mahler_measure, spectral_radius, spectrum
from .surface import SeifertData, SurfaceStats, cycle_basis, seifert_data, seifert_matrix, surface_stats

__version__ = "0.1.0"
