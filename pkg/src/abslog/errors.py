"""Exception hierarchy shared across the kernel and its front ends.

Every error carries a stable machine ``code`` so the CLI can map it to a
diagnostic without string matching.
"""


class AbslogError(Exception):
    code = "Error"

    def __init__(self, message=""):
        super().__init__(message or self.code)
        self.message = message or self.code


# --- shapes / signatures ---

class ShapeError(AbslogError):
    code = "ShapeError"


class DegenerateShape(ShapeError):
    code = "DegenerateShape"


class IndexOutOfRange(ShapeError):
    code = "IndexOutOfRange"


class DuplicateAbstraction(AbslogError):
    code = "DuplicateAbstraction"


# --- terms ---

class TermError(AbslogError):
    code = "TermError"


class UnknownAbstraction(TermError):
    code = "UnknownAbstraction"


class ValenceMismatch(TermError):
    code = "ValenceMismatch"


class ArityMismatch(TermError):
    code = "ArityMismatch"


class DuplicateBinder(TermError):
    code = "DuplicateBinder"


# --- algebras ---

class AlgebraError(AbslogError):
    code = "AlgebraError"


class IllFormedTerm(AlgebraError):
    code = "IllFormedTerm"


class IllFormedTemplate(AlgebraError):
    code = "IllFormedTemplate"


class DuplicateName(AlgebraError):
    code = "DuplicateName"


class NotLogicSignature(AlgebraError):
    code = "NotLogicSignature"


class NotLogicAlgebra(AlgebraError):
    code = "NotLogicAlgebra"


class ArityCapExceeded(AlgebraError):
    code = "ArityCapExceeded"


# --- logics ---

class UnknownLogic(AbslogError):
    code = "UnknownLogic"


# --- kernel ---

class ProofError(AbslogError):
    """Raised by the trusted checker; ``path`` locates the offending node
    in the proof tree (tuple of child indices from the root)."""

    code = "ProofError"

    def __init__(self, message="", path=()):
        super().__init__(message)
        self.path = tuple(path)


class NotAnAxiom(ProofError):
    code = "NotAnAxiom"


class SubstMismatch(ProofError):
    code = "SubstMismatch"


class NotAnImplication(ProofError):
    code = "NotAnImplication"


class MpMismatch(ProofError):
    code = "MpMismatch"


class AllMismatch(ProofError):
    code = "AllMismatch"


class IllFormed(ProofError):
    code = "IllFormed"


class UnknownLemma(ProofError):
    code = "UnknownLemma"


class KernelPrivilege(AbslogError):
    code = "KernelPrivilege"


class PreconditionFailed(AbslogError):
    code = "PreconditionFailed"
