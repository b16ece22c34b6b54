"""Exception hierarchy shared by every module of the package."""


class PBWError(Exception):
    """Base class for all errors raised by pbwdeg."""


class InvalidRank(PBWError, ValueError):
    pass


class InvalidNode(PBWError, ValueError):
    pass


class NotDominant(PBWError, ValueError):
    pass


class DisconnectedSubdiagram(PBWError, ValueError):
    pass


class DimensionCapExceeded(PBWError):
    def __init__(self, cap, required):
        self.cap = cap
        self.required = required
        super().__init__(f"module dimension {required} exceeds cap {cap}")


class OracleCapExceeded(PBWError):
    def __init__(self, cap, required):
        self.cap = cap
        self.required = required
        super().__init__(f"brute-force oracle limited to dim <= {cap}, got {required}")


class ZeroOperator(PBWError):
    pass


class InconsistentFiltration(PBWError):
    pass


class NegativeBound(PBWError, ValueError):
    pass


class ZeroPolynomial(PBWError, ValueError):
    pass


class InvariantViolated(PBWError):
    pass


class RowNotCovered(PBWError, LookupError):
    pass


class CorruptCache(PBWError):
    pass
