"""Errores del motor. Todo error de dominio hereda de LeavittError."""


class LeavittError(Exception):
    """Base de los errores de dominio (la CLI los convierte en código de salida 1)."""


# ----------------------------
# Grafos
# ----------------------------
class GraphError(LeavittError):
    pass


class GraphFormatError(GraphError):
    pass


class DuplicateIdError(GraphError):
    def __init__(self, ident):
        super().__init__(f"duplicate id: {ident}")
        self.ident = ident


class DanglingEndpointError(GraphError):
    def __init__(self, edge, vertex):
        super().__init__(f"edge {edge} has endpoint {vertex} which is not a declared vertex")
        self.edge = edge
        self.vertex = vertex


class EmptyVertexSetError(GraphError):
    def __init__(self):
        super().__init__("graph has no vertices")


class UnknownVertexError(GraphError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex: {vertex}")
        self.vertex = vertex


class UnknownEdgeError(GraphError):
    def __init__(self, edge):
        super().__init__(f"unknown edge: {edge}")
        self.edge = edge


class InvalidPathError(GraphError):
    pass


class EnumerationCapError(GraphError):
    def __init__(self, size, cap):
        super().__init__(f"graph has {size} vertices, enumeration cap is {cap}")
        self.size = size
        self.cap = cap


class GraphHasCycleError(GraphError):
    def __init__(self):
        super().__init__("graph has a cycle")


# ----------------------------
# Álgebra
# ----------------------------
class FieldError(LeavittError):
    pass


class NullFormError(LeavittError):
    def __init__(self, word):
        super().__init__(f"word {word} has empty domain (Null form)")
        self.word = word


class DomainViolation(LeavittError):
    pass


class PointNotInDomain(LeavittError):
    pass


class ExpressionSyntaxError(LeavittError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownIdError(LeavittError):
    def __init__(self, ident):
        super().__init__(f"unknown id: {ident}")
        self.ident = ident


# ----------------------------
# Ideales y certificados
# ----------------------------
class ConditionLViolated(LeavittError):
    def __init__(self, cycle=None):
        detail = f": cycle {cycle} has no exit" if cycle is not None else ""
        super().__init__(f"graph does not satisfy condition (L){detail}")
        self.cycle = cycle


class ZeroInputError(LeavittError):
    def __init__(self):
        super().__init__("input element is zero")


class CriteriaNotMet(LeavittError):
    pass


class PreconditionError(LeavittError):
    pass


class ReductionInvariantError(LeavittError):
    """Un paso de la reducción no produjo lo que la demostración garantiza."""


class CertificateFormatError(LeavittError):
    pass
