"""circleproxy: approximate 2D vector shapes with a small set of sample circles.

Two sampling methods are provided. The medial-axis method selects
touching polar balls greedily by decreasing radius under a spacing
ratio; it inscribes circles and suits deformable shapes. The SEC method
runs k-means whose center-update step is the smallest enclosing circle;
it covers shapes with fewer circles and suits rigid ones. A cost-based
scan can pick the sample count automatically, and the samples can be
connected into an element graph.
"""

from .cli_app import Config, RunResult, render_svg, result_to_json, run
from .cost_model import (
    CostBreakdown,
    CountRange,
    Measures,
    Weights,
    band_normalize,
    choose_count,
    measure_adjacency,
    measure_asymmetry,
    measure_exterior,
    measure_overlap,
    optimize_sample_count,
    total_cost,
)
from .errors import (
    CircleProxyError,
    ConfigError,
    DegenerateShapeError,
    GenerationError,
    ParseError,
    ShapeInvalidError,
)
from .geom_core import (
    Circle,
    Point2,
    Triangle,
    circle_lens_area,
    circle_shape_intersection_area,
    flatten_cubic_bezier,
    point_in_shape,
    points_in_shape,
    polygon_area,
    smallest_enclosing_circle,
    triangulate,
)
from .graph_builder import ElementGraph, build_graph
from .medial_sampler import (
    PolarBall,
    compute_polar_balls,
    scale_axis_prune,
    select_touching_polar_balls,
)
from .model import SampleSet
from .sec_sampler import ClusterState, init_centers, kmeans_sec
from .shape_io import (
    ElementShape,
    Loop,
    PointSample,
    parse_shape,
    sample_boundary,
    sample_interior,
    shape_from_loops,
    shape_to_polygon_json,
)

__version__ = "0.1.0"
