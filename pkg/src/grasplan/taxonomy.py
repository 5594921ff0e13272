"""Extended grasp taxonomy: grasp types, closure dimensions, and class codes.

A grasp class code concatenates a grasp type (``w`` prefix for power,
``r`` for precision) with the object dimension letters across which the
hand closes.  Nine such combinations are physically meaningful; their
order below is canonical and is used to break argmax ties.
"""

from __future__ import annotations

from dataclasses import dataclass

GRASP_TYPES = ("wt", "wp", "wh", "wc", "rp", "rc")

GRASP_DIMS = ("a", "b", "c", "ab", "bc", "ac", "abc")

# Canonical class order.  Ties in probability resolve to the earliest entry.
GRASP_CLASS_CODES = (
    "rc.ab",
    "rc.bc",
    "rp.b",
    "rp.c",
    "wc.abc",
    "wh.bc",
    "wh.c",
    "wp.bc",
    "wt.c",
)

N_CLASSES = len(GRASP_CLASS_CODES)


class TaxonomyError(ValueError):
    """Raised for grasp class codes outside the extended taxonomy."""


@dataclass(frozen=True)
class GraspClass:
    """One of the nine extended grasp classes.

    ``code`` is always ``grasp_type + "." + grasp_dim``; the decomposition
    is bijective over the nine valid codes.
    """

    code: str

    def __post_init__(self):
        if self.code not in GRASP_CLASS_CODES:
            raise TaxonomyError(
                f"unknown grasp class {self.code!r}; expected one of {GRASP_CLASS_CODES}"
            )

    @property
    def grasp_type(self) -> str:
        return self.code.split(".", 1)[0]

    @property
    def grasp_dim(self) -> str:
        return self.code.split(".", 1)[1]

    @property
    def index(self) -> int:
        return GRASP_CLASS_CODES.index(self.code)

    @property
    def is_power(self) -> bool:
        return self.code.startswith("w")

    def __str__(self) -> str:
        return self.code


GRASP_CLASSES = tuple(GraspClass(code) for code in GRASP_CLASS_CODES)


def grasp_class(code_or_class: "str | GraspClass") -> GraspClass:
    """Coerce a code string or GraspClass to a GraspClass."""
    if isinstance(code_or_class, GraspClass):
        return code_or_class
    return GraspClass(str(code_or_class))
