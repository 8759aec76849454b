"""deformalg: exact verification engine for deformation-ring ideal algebra
and Serre-weight combinatorics over prime fields."""

__version__ = "0.1.0"
