"""Exception hierarchy.

Every failure carries the witness that falsifies the claimed property, so
callers (and the CLI report) can print a concrete counterexample instead of
a bare boolean.
"""

from __future__ import annotations


class ImwError(Exception):
    """Base class for all workbench errors."""


class ValidationError(ImwError):
    """A structure failed one of its defining axioms."""


# --- monoid / congruence level -------------------------------------------

class NotAssociative(ValidationError):
    def __init__(self, x: int, y: int, z: int):
        self.witness = (x, y, z)
        super().__init__(f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})")


class NotIdentity(ValidationError):
    def __init__(self, id_: int, x: int):
        self.witness = x
        super().__init__(f"element {id_} is not an identity: fails on {x}")


class IndexOutOfRange(ValidationError):
    def __init__(self, where: str, value: int, n: int):
        self.value = value
        super().__init__(f"{where}: entry {value} outside 0..{n - 1}")


class NotACongruence(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"relation is not compatible with multiplication: {witness}")


class NotHomomorphism(ValidationError):
    def __init__(self, x: int, y: int | None = None, detail: str = ""):
        self.witness = (x, y)
        msg = f"map is not a homomorphism at ({x},{y})" if y is not None else \
            f"map does not preserve the identity ({x})"
        super().__init__(msg + (f": {detail}" if detail else ""))


class NotInverse(ValidationError):
    def __init__(self, x: int, direction: str):
        self.witness = x
        super().__init__(f"candidate maps are not mutually inverse ({direction} fails at {x})")


# --- inverse-monoid level --------------------------------------------------

class NoInverse(ValidationError):
    def __init__(self, x: int):
        self.witness = x
        super().__init__(f"element {x} has no generalized inverse")


class NonUniqueInverse(ValidationError):
    def __init__(self, x: int, candidates):
        self.witness = (x, tuple(candidates))
        super().__init__(f"element {x} has several generalized inverses: {sorted(candidates)}")


class NotASemilattice(ValidationError):
    def __init__(self, reason: str, witness):
        self.witness = witness
        super().__init__(f"not a semilattice monoid ({reason}): witness {witness}")


class InternalCheckFailed(ImwError):
    """A mathematically guaranteed cross-check failed; indicates a bug, not bad input."""


class IdempotentsDoNotCommute(InternalCheckFailed):
    def __init__(self, e: int, f: int):
        self.witness = (e, f)
        super().__init__(f"idempotents {e},{f} do not commute although inverses are unique")


class OrderAxiomViolation(InternalCheckFailed):
    def __init__(self, axiom: str, witness):
        self.witness = witness
        super().__init__(f"natural order failed {axiom}: {witness}")


class InternalCharacterizationFailure(InternalCheckFailed):
    def __init__(self, detail: str):
        super().__init__(detail)


class EquivalenceMismatch(InternalCheckFailed):
    def __init__(self, x: int):
        self.witness = x
        super().__init__(f"central-idempotents and x*inv(x)=inv(x)*x disagree at {x}")


class TheoremViolation(InternalCheckFailed):
    def __init__(self, detail: str):
        super().__init__(detail)


# --- extensions -------------------------------------------------------------

class KernelMismatch(ValidationError):
    def __init__(self, x: int, direction: str):
        self.witness = x
        super().__init__(f"kernel condition fails: element {x} ({direction})")


class EmptyCandidateFiber(ValidationError):
    def __init__(self, h: int, fiber):
        self.h = h
        self.fiber = tuple(fiber)
        super().__init__(
            f"no admissible section value over class {h}; fiber {sorted(fiber)}")


# --- constructions ----------------------------------------------------------

class AxiomViolation(ValidationError):
    def __init__(self, axiom: str, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom {axiom} fails at {witness}")


class ConditionViolation(ValidationError):
    def __init__(self, condition: int | str, witness):
        self.condition = condition
        self.witness = witness
        super().__init__(f"condition {condition} fails at {witness}")


class IdentityNotTop(ValidationError):
    def __init__(self, got: int):
        self.witness = got
        super().__init__(f"map must send the group identity to the top element, got {got}")


class IllDefinedMultiplication(InternalCheckFailed):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"product depends on representatives: {witness}")


class NoActionWitness(ValidationError):
    def __init__(self, h: int, n: int):
        self.witness = (h, n)
        super().__init__(f"no element solves k(n')*s({h}) = s({h})*k({n})")


class NoChiWitness(ValidationError):
    def __init__(self, h1: int, h2: int):
        self.witness = (h1, h2)
        super().__init__(f"no element solves k(n)*s({h1}*{h2}) = s({h1})*s({h2})")


class PreconditionFailed(ImwError):
    def __init__(self, requirement: str, witness=None):
        self.requirement = requirement
        self.witness = witness
        super().__init__(f"precondition not met: {requirement}"
                         + (f" (witness {witness})" if witness is not None else ""))


class IsoNotFound(InternalCheckFailed):
    def __init__(self, detail: str):
        super().__init__(f"expected isomorphism not found: {detail}")


# --- search limits -----------------------------------------------------------

class SizeLimitExceeded(ImwError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"isomorphism search on {n} elements exceeds limit {limit}")


class BoundExceeded(ImwError):
    def __init__(self, requested: int, bound: int):
        super().__init__(f"requested size {requested} exceeds enumeration bound {bound}")


class BudgetExceeded(ImwError):
    def __init__(self, space: int, budget: int):
        super().__init__(f"search space {space} exceeds budget {budget}")


# --- file formats -------------------------------------------------------------

class MtabSyntaxError(ImwError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
