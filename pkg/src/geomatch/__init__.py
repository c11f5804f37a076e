"""Edge-disjoint non-crossing perfect matchings with triangle-free unions."""

__version__ = "0.1.0"
