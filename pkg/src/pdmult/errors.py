"""Exception hierarchy. Every error carries a short machine-readable ``code``
which the CLI reports verbatim."""


class PDMultError(Exception):
    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class MalformedInput(PDMultError, ValueError):
    code = "malformed_input"


class ZeroPolynomial(PDMultError, ValueError):
    code = "zero_polynomial"


class DegenerateLine(PDMultError, ValueError):
    code = "degenerate_line"


class NotHomogeneous(PDMultError, ValueError):
    code = "not_homogeneous"


class NotAnIntersectionPoint(PDMultError, ValueError):
    code = "not_an_intersection_point"


class CommonComponent(PDMultError, ValueError):
    code = "common_component"


class InfinityIntersection(PDMultError, ValueError):
    code = "infinity_intersection"


class PreconditionFailed(PDMultError, ValueError):
    code = "precondition_failed"


class CardinalityMismatch(PDMultError, ValueError):
    code = "cardinality_mismatch"
