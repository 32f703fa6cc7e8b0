"""Digital topology on finite lattice images: continuity, fixed points, homology."""

from .core import (BudgetExceeded, Cu, DigitalImage, Explicit, InputError, InvariantViolation,
                   are_adjacent, closed_neighborhood, components, read_image, write_image)
from .maps import (DigitalMap, Homotopy, approximate_fixed_points, compose, fixed_points,
                   identity_map, is_continuous, is_isomorphism, is_retraction, read_map,
                   verify_homotopy)
from .search import (MapSearchProblem, SearchOutcome, bounded_contractibility, has_afpp,
                     has_fpp, is_dominating, is_universal, solve)
from .homology import (boundary_matrix, dimension, euler_characteristic, homology,
                       simplices, smith_normal_form)
from .invariants import degree, induced_chain_map, induced_homology_map, lefschetz_number
from .constructions import antipode_map, cube, interval, product, scc, sphere, wedge

__version__ = "0.1.0"
