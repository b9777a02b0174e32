class PosetCMError(Exception):
    """Base class for every error raised by this package"""


class ContractViolation(PosetCMError):
    """A theorem-level implication failed; always a library bug"""


# Poset file / construction

class PosetSyntaxError(PosetCMError):
    """Malformed poset file"""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateElement(PosetSyntaxError):
    pass


class UnknownName(PosetSyntaxError):
    pass


class UnreadableInput(PosetSyntaxError):
    """Input file that cannot be read or is not UTF-8"""


class UnwritableOutput(PosetCMError):
    pass


class AntisymmetryViolation(PosetCMError):
    pass


# Order-theoretic preconditions

class NoBottom(PosetCMError):
    pass


class NoTop(PosetCMError):
    pass


class UnboundedFactor(PosetCMError):
    pass


Unbounded = UnboundedFactor


class TooFewFactors(PosetCMError):
    pass


class UnknownCatalogName(PosetCMError):
    pass


class BadParam(PosetCMError):
    pass


# Graphs and complexes

class UnknownVertex(PosetCMError):
    pass


class NotBoolean(PosetCMError):
    pass


class SizeLimitExceeded(PosetCMError):
    pass


class EmptyComplex(PosetCMError):
    pass


class NotIndependent(PosetCMError):
    pass


class EmptyGraphNoVariables(PosetCMError):
    pass


class EmptyGraph(PosetCMError):
    pass


class NotAFace(PosetCMError):
    pass


# Certificates

class FewerThanTwoAtoms(PosetCMError):
    pass


class PairsDontPartition(PosetCMError):
    pass


# Products

class FactorHasZeroDivisors(PosetCMError):
    pass


class NotAscending(PosetCMError):
    pass


class IndexOutOfRange(PosetCMError):
    pass


class IndicesNotDistinctOrOrdered(PosetCMError):
    pass


class NeedEqualSizesForTriple(PosetCMError):
    pass


class WrongArity(PosetCMError):
    pass
