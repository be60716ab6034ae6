"""Executable finite-resolution analysis of the infinite Hex winning condition."""

from .grid import (BallWindow, Direction, Line, ORIGIN, QuarterPlane, RectWindow,
                   Tile, Window, ball_window, diagonal_tile, distance, line_touch,
                   neighbors, qp_border, qp_member, rect_window, window_tiles)
from .coloring import (ColoringSource, CombParams, comb_source, diagonal_source,
                       finite_source, full_source, overlay, random_source,
                       source_from_json)
from .connectivity import (ComponentReport, Region, component, component_at_least,
                           components_meeting, full_plane, in_quarter, in_window,
                           intersect)
from .edgetrace import Edge, TraceResult, line_visits, next_edge, prev_edge, trace
from .verdict import Truth, Verdict, kleene_and, kleene_or
from .wincheck import (Resolution, crossing_oracle, depth_quarter, eval_phi1,
                       eval_phi1_primed, eval_phi2, eval_phi3, eval_phi4,
                       eval_phi4_parts, eval_psi1)
from .reduction import (BitStream, BitTestFamily, ClopenFamily, ConstFamily,
                        InstrumentedBits, PeriodicBits, PredicateFamily,
                        ReductionGeometry, ReductionState, ScheduleCache,
                        TableFamily, advance, collapsed_member, command_set,
                        default_geometry, descent_stats, failure_point,
                        initial_state, is_trajectory_sum, materialize_plan,
                        reduction_source, validate_plan)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
