"""Translational C-space mapping for planar polygonal objects.

Compute signed translational distances between polygons, build the parametric
families of translations bounded by those distances, and evaluate Boolean
placement constraints into explicit feasible regions, with brute-force
oracles to cross-check everything.
"""

from .distances import (
    DistanceKind,
    SignedDistance,
    d1,
    d2,
    delta,
    dstar,
    eta,
    gamma1,
    gamma2,
    hausdorff,
    mu,
    penetration_depth,
)
from .errors import (
    CspaceError,
    EmptyInputError,
    InvalidRingError,
    MixedSubjectsError,
    OracleMismatchError,
    ParseError,
    SceneError,
    UndefinedDistanceError,
    UnknownGroupError,
    UnknownObjectError,
)
from .families import (
    DiskConfig,
    FamilyKind,
    FamilySlice,
    PairCache,
    delta_family,
    extreme_lambda,
    gamma1_family,
    gamma2_family,
    h_family,
    m_family,
)
from .geom import (
    BoolOp,
    MultiPolygon,
    Point,
    PointClass,
    Ring,
    Transform,
    boolean_reg,
    classify_point,
    convex_hull,
    extreme_points,
    inradius,
    reflect,
    regularize,
    smallest_enclosing_circle,
)
from .minkowski import (
    ApproxDisk,
    DiskMode,
    MinkResult,
    cspace_obstacle,
    dilate_disk,
    erode_disk,
    erosion,
    mink_sum,
)
from .oracle import Bitmap, flood_components, oracle_distance, oracle_map
from .region import (
    Flag,
    FreeFeature,
    Membership,
    RegionNR,
    nr_boundary,
    nr_classify,
    nr_closure,
    nr_complement,
    nr_curve_intersect,
    nr_interior,
    nr_intersect,
    nr_regularize,
    nr_union,
    region_from_polygon,
)
from .scene import Scene, SceneConfig, load_scene, save_map, save_scene
from .tgs import (
    eval_grid,
    eval_point,
    eval_region,
    multi_obstacle_expand,
    normalize,
    parse,
    preset_expression,
    print_expr,
)

__version__ = "0.1.0"
