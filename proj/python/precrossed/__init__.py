"""Pre-crossed module homology, rack homology and group homology.

Objects are read from the same text format as the command-line tool::

    import precrossed
    reg = precrossed.parse_registry(open("data/fixtures.txt").read())
    print(precrossed.compare_ra(reg, "Transpositions", max_degree=2, max_length=3))
"""

from ._core import (
    PrecrossedError,
    Registry,
    Report,
    check_coskeleton,
    check_tri,
    compare_ra,
    homology,
    parse_input,
    parse_registry,
    smith_diagonal,
    sweep,
    tensor_algebra_dims,
    validate,
)

__all__ = [
    "PrecrossedError",
    "Registry",
    "Report",
    "check_coskeleton",
    "check_tri",
    "compare_ra",
    "homology",
    "parse_input",
    "parse_registry",
    "smith_diagonal",
    "sweep",
    "tensor_algebra_dims",
    "validate",
]
