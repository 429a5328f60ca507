"""convexdist: mixed-volume distances between convex bodies.

An exact rational kernel for polytopes in the plane and in space (hulls,
volumes, Minkowski sums, Hausdorff distance, caps and slices), the
mixed-volume and Minkowski-sum quasi-metrics relative to a reference body
with their two-sided Hausdorff comparison bounds, the worst-case families
realizing the extremal exponents, and a seeded Monte Carlo estimator for
higher dimensions.
"""

from .bodies import (
    RawBody,
    hyperbox,
    max_sagitta,
    inscribed_ngon,
    octahedron,
    proxy_fit_window,
    random_body_in,
    random_point_in,
    circumscribed_ngon,
    unit_cube,
    unit_simplex,
    unit_square,
)
from .caps import (
    Cap,
    ConstantsReport,
    FamilyPoint,
    cap,
    cap_slice_family,
    dyadic_schedule,
    farthest_vertex_direction,
    geometric_schedule,
    scaling_family,
    slice_at,
    spherical_cap_volume,
    theoretical_constants,
    vertex_cap_threshold,
)
from .estimator import (
    BallOracle,
    BoxOracle,
    DistanceEstimate,
    HalfspaceOracle,
    MinkowskiSumOracle,
    SphericalCapOracle,
    VolumeEstimate,
    mc_mixed_distance,
    mc_volume,
    mc_volume_distance,
    member_minkowski,
)
from .fitting import SlopeFit, fit_power_law
from .geometry import (
    EMPTY,
    DimensionError,
    EmptyBodyError,
    Halfspace,
    HausdorffWitness,
    InradiusResult,
    KernelError,
    LowerDimensionalError,
    VPolytope,
    convex_hull,
    hausdorff,
    join,
)
from .metrics import (
    ContainmentError,
    pair_distances,
    MetricReport,
    metric_report,
    mixed_distance,
    quasi_triangle_probe,
    sandwich_factor,
    volume_distance,
)
from .minkowski import minkowski_sum, volume_of_sum, volume_polynomial
from .mixed_volume import (
    SteinerProfile,
    mixed_volume_full,
    mv1_ball,
    steiner_profile,
    steiner_profile_fast,
)
from .scalar import Interval, SqrtSum, as_fraction, fraction_str

__version__ = "0.1.0"
