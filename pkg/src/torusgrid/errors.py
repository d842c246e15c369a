"""Exception types raised by torusgrid."""


class TorusGridError(Exception):
    """Base class; ``code`` is a short machine-readable tag used by the CLI."""

    code = "error"


class RankError(TorusGridError, ValueError):
    code = "bad-algebra"


class GridMismatch(TorusGridError, ValueError):
    """Sample/coefficient data does not match the expected grid."""

    code = "grid-mismatch"


class OrbitCapExceeded(TorusGridError, RuntimeError):
    code = "cap-exceeded"

    def __init__(self, weyl_order, cap):
        self.weyl_order = weyl_order
        self.cap = cap
        super().__init__(
            f"Weyl group order {weyl_order} exceeds orbit cap {cap}; "
            f"raise the cap to at least {weyl_order} to enumerate orbits"
        )


class SingularWeight(TorusGridError, ValueError):
    """A signed orbit was requested for a weight with nontrivial stabilizer."""

    code = "singular-weight"
