"""Exception types raised across the package.

Every exception carries the concrete witness that triggered it, so callers
(and the CLI) can report *why* an input was rejected.
"""


class FangError(Exception):
    """Base class for all package errors."""


class PreconditionViolated(FangError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotReflexive(FangError, ValueError):
    def __init__(self, point):
        super().__init__(f"relation is not reflexive at point {point}")
        self.point = point


class NotTransitive(FangError, ValueError):
    def __init__(self, triple):
        x, y, z = triple
        super().__init__(f"relation is not transitive: {x}<={y}, {y}<={z} but not {x}<={z}")
        self.triple = triple


class NotAntisymmetric(FangError, ValueError):
    def __init__(self, pair):
        x, y = pair
        super().__init__(f"relation is not antisymmetric: {x}<={y} and {y}<={x}")
        self.pair = pair


class SuccessorMissing(FangError, ValueError):
    def __init__(self, point):
        super().__init__(f"point {point} has no successor")
        self.point = point


class ChainBoundExceeded(FangError, RuntimeError):
    pass


class InvalidScaling(FangError, ValueError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class NotITriangular(FangError, ValueError):
    def __init__(self, generator):
        super().__init__(f"no (j, k) makes generator {generator} triangular")
        self.generator = generator


class KindMismatch(FangError, ValueError):
    pass


class ParseError(FangError, ValueError):
    def __init__(self, message, field=None, line=None):
        where = []
        if field is not None:
            where.append(f"field {field}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.field = field
        self.line = line


class PassInapplicable(FangError, ValueError):
    pass


class UnknownCheck(FangError, ValueError):
    pass
