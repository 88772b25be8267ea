"""Looseness decisions for maps between manifolds, with citable rule traces."""

__version__ = "0.1.0"

from .abelian import Divides, Exact, FgAbGroup, GroupElement, TriBool  # noqa: E402
from .bundles import PlaneBundleInput, decide_cp_tensor, decide_plane_bundle  # noqa: E402
from .grassmann import euler_grassmann, euler_schubert_oracle, in_stable_range, stiefel_dims  # noqa: E402
from .spheres import SphereMapInput, decide_sphere_map, omega_class  # noqa: E402
from .stems import becker_schultz_constraint, refine, so_class_order, stem_group  # noqa: E402
from .stiefel import corollary_sweep, decide_stiefel  # noqa: E402
from .verdict import Outcome, RuleApplication, Verdict  # noqa: E402
