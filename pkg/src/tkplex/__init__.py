"""Enumeration of maximal k-plexes in temporal graphs."""

from .graph import (
    EdgeListParseError,
    FrameDomain,
    NonNeighborhoodIndex,
    TemporalGraph,
    build_nonneighborhood_index,
    delta_slice_degeneracy,
    frames_covered,
    normalize_timestamps,
    parse_edge_list,
    plex_count_upper_bound,
    render_edge_list,
)
from .intervals import Interval, IntervalSet
from .search import (
    PlexRecord,
    RunStats,
    SearchConfig,
    collect_maximal_plexes,
    enumerate_maximal_plexes,
)

__all__ = [
    "EdgeListParseError",
    "FrameDomain",
    "Interval",
    "IntervalSet",
    "NonNeighborhoodIndex",
    "PlexRecord",
    "RunStats",
    "SearchConfig",
    "TemporalGraph",
    "build_nonneighborhood_index",
    "collect_maximal_plexes",
    "delta_slice_degeneracy",
    "enumerate_maximal_plexes",
    "frames_covered",
    "normalize_timestamps",
    "parse_edge_list",
    "plex_count_upper_bound",
    "render_edge_list",
]

__version__ = "0.1.0"
