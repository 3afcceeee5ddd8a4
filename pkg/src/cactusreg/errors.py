"""Exception hierarchy shared across the package."""


class CactusRegError(Exception):
    """Base class for all package errors."""


class GraphError(CactusRegError, ValueError):
    """Malformed graph input or an operation applied to unknown vertices."""


class EdgeListError(GraphError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SpecError(GraphError):
    """Unparseable builder spec such as ``cycle:x``."""


class BlockKindUnsupported(CactusRegError, ValueError):
    def __init__(self, block):
        self.block = tuple(block)
        super().__init__(f"block {self.block} is neither an edge, a clique nor a cycle")


class NoBigCycle(CactusRegError, ValueError):
    pass


class NotAChain(CactusRegError, ValueError):
    pass


class ClassMismatch(CactusRegError, ValueError):
    pass


class NotSquarefree(CactusRegError, ValueError):
    pass


class CapExceeded(CactusRegError):
    def __init__(self, n, cap, what="oracle"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} refuses a graph with {n} vertices (cap {cap})")
