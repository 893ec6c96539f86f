"""Numeric tolerances.

All comparisons in the package go through a Tolerances instance so that a
single knob (the CAYLINK_TOL environment variable) can rescale them for
ill-conditioned inputs.  Every field is relative; call sites multiply by a
local scale (bar length, frame size, squared frame size).
"""

import dataclasses
import os


@dataclasses.dataclass(frozen=True)
class Tolerances:
    length: float = 1e-9      # length comparisons, relative to the longest bar
    triangle: float = 1e-9    # triangle-inequality slack, relative to perimeter
    orientation: float = 1e-9  # collinearity threshold, relative to |a||b|
    merge: float = 1e-9       # interval endpoint merging, relative to scale

    def scaled(self, factor):
        return Tolerances(
            length=self.length * factor,
            triangle=self.triangle * factor,
            orientation=self.orientation * factor,
            merge=self.merge * factor,
        )


def _from_env():
    raw = os.environ.get("CAYLINK_TOL")
    if not raw:
        return Tolerances()
    try:
        value = float(raw)
    except ValueError:
        return Tolerances()
    return Tolerances(length=value, triangle=value, orientation=value, merge=value)


DEFAULT = _from_env()
