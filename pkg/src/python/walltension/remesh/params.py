"""
RemeshParams module
"""


class RemeshParams:
    """
    Isotropic remeshing parameters.
    """

    def __init__(self, target, iterations=10, projection=True, preserve=True):
        """
        Creates new RemeshParams.

        Args:
            target: target edge length in mm
            iterations: number of split, collapse, flip and smooth passes
            projection: projects interior vertices back to the input surface after smoothing
            preserve: keeps boundary vertices on their input rim, must be True
        """

        if target is None or target <= 0:
            raise ValueError(f"Target edge length must be positive, found {target}")
        if int(iterations) != iterations or iterations < 1:
            raise ValueError(f"Iterations must be an integer >= 1, found {iterations}")
        if not preserve:
            raise ValueError("Boundary preservation can't be disabled, rims define the clamped boundary")

        self.target = float(target)
        self.iterations = int(iterations)
        self.projection = bool(projection)
        self.preserve = True

    def __repr__(self):
        return f"RemeshParams(target={self.target}, iterations={self.iterations}, projection={self.projection})"

    def high(self):
        """
        Edges longer than this are split.

        Returns:
            length in mm
        """

        return 4.0 / 3.0 * self.target

    def low(self):
        """
        Edges shorter than this are collapsed.

        Returns:
            length in mm
        """

        return 4.0 / 5.0 * self.target
