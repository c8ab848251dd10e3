"""Exact sign calculus for tame self-dual representations.

The package models level-one self-dual representations of the
multiplicative group of a division algebra over a non-archimedean local
field, and the Weil-group parameters attached to them, as induced
representations of finite metacyclic groups. All arithmetic is exact
(cyclotomic integers over Z), and every orthogonal/symplectic sign is
computed by at least two independent routes that are checked against
each other.
"""

from .errors import InternalConsistencyError, UsageError

__version__ = "1.0.0"

__all__ = ["InternalConsistencyError", "UsageError", "__version__"]
