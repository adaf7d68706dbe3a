"""coniccount: exact counting and certification of conics through two
general points of a complete intersection on the boundary line
d_1 + ... + d_r = (n+1)/2 + r.

The package is organized along the pipeline:

* ``fields``, ``multipoly``, ``unipoly``, ``linalg``, ``groebner``,
  ``resultant`` -- the exact algebra core,
* ``conic_system`` -- random instances, the plane-family restriction and
  the elimination cascade producing the derived system,
* ``counting`` -- solution counting with certificates and the closed
  formula (1/2) prod (d_i-1)! d_i!,
* ``splitting`` -- splitting types of restricted tangent bundles and the
  quasi-line test,
* ``characters`` -- the Schur-functor vanishing grid behind the
  irreducibility of the space of conics,
* ``quantum`` -- the structure-constant and closed-form conic counts for
  degree-n hypersurfaces in P^n,
* ``cli`` -- the command line front end.
"""

from .fields import QQ, PrimeField, ExtensionField
from .conic_system import (MultiDegree, dimension_from_degrees,
                           random_ci_through_pq, random_ci,
                           restrict_to_plane_family, cascade_solve,
                           reconstruct_conic, DegenerateInstance)
from .counting import (count_conics, expected_count, bezout_number,
                       verify_conic, solve_and_verify,
                       expected_dimension_hypersurface, CountReport,
                       InconsistentCounts)
from .splitting import (splitting_type, is_quasi_line, hypercohomology_dims,
                        conic_to_map, find_line_through_point)
from .characters import (symmetric_power_char, wedge_char, sym_char,
                         schur_decompose, check_star_star,
                         bott_nonvanishing_case, vanishing_verdict,
                         vanishing_grid)
from .quantum import (structure_constants_d1, structure_constants_d2,
                      conic_count_closed_form,
                      conic_count_via_structure_constants)

__version__ = "0.1.0"

__all__ = [
    "QQ", "PrimeField", "ExtensionField",
    "MultiDegree", "dimension_from_degrees", "random_ci_through_pq",
    "random_ci", "restrict_to_plane_family", "cascade_solve",
    "reconstruct_conic", "DegenerateInstance",
    "count_conics", "expected_count", "bezout_number", "verify_conic",
    "solve_and_verify", "expected_dimension_hypersurface", "CountReport",
    "InconsistentCounts",
    "splitting_type", "is_quasi_line", "hypercohomology_dims",
    "conic_to_map", "find_line_through_point",
    "symmetric_power_char", "wedge_char", "sym_char", "schur_decompose",
    "check_star_star", "bott_nonvanishing_case", "vanishing_verdict",
    "vanishing_grid",
    "structure_constants_d1", "structure_constants_d2",
    "conic_count_closed_form", "conic_count_via_structure_constants",
]
