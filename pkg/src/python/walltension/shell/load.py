"""
LoadCase module
"""

import numpy as np

# Pressure unit conversions to MPa
UNITS = {"mmHg": 1.33322e-4, "kPa": 1e-3, "MPa": 1.0}


class LoadCase:
    """
    Uniform luminal pressure. Positive pressure pushes the wall outward.
    """

    def __init__(self, value=100.0, unit="mmHg"):
        """
        Creates a new LoadCase.

        Args:
            value: pressure value
            unit: pressure unit, one of mmHg, kPa or MPa
        """

        if unit not in UNITS:
            raise ValueError(f"Pressure unit must be one of {sorted(UNITS)}, found {unit}")
        if not np.isfinite(value):
            raise ValueError(f"Pressure must be finite, found {value}")

        self.value = float(value)
        self.unit = unit

        # Pressure in MPa
        self.pressure = self.value * UNITS[unit]

    def __repr__(self):
        return f"LoadCase({self.value:g} {self.unit} = {self.pressure:.6g} MPa)"
