"""Finite ordered semigroups: tables with a compatible partial order.

Closures, ideals, kernels, regularity classes, Green's relations, Rees
factor structures, nil extensions, complete semilattice decompositions,
and exhaustive equivalence sweeps over all small structures.
"""

from .core import (
    MAX_ORDER,
    NotAssociative,
    NotClosed,
    NotCompatible,
    NotPartialOrder,
    OrderedSemigroup,
    PowerOrbit,
    StructureError,
    are_isomorphic,
    induced_subsemigroup,
    power,
    power_orbit,
    validate,
    zero_element,
)

__version__ = "0.1.0"
