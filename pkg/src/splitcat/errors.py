"""Exception hierarchy shared by every module."""


class CategoryError(Exception):
    """Base class for all errors raised by splitcat."""


class InvalidMap(CategoryError):
    pass


class DuplicateElement(CategoryError):
    pass


class CompositionMismatch(CategoryError):
    pass


class ArityMismatch(CategoryError):
    pass


class ParallelPairMismatch(CategoryError):
    pass


class CospanMismatch(CategoryError):
    pass


class NotFactorable(CategoryError):
    pass


class CodomainNotCoproduct(CategoryError):
    pass


class IndexOutOfRange(CategoryError):
    pass


class NotACategory(CategoryError):
    pass


class NotIdempotent(CategoryError):
    pass


class NotComposable(CategoryError):
    pass


class NotCanonicalSplit(CategoryError):
    pass


class SizeBudgetExceeded(CategoryError):
    def __init__(self, budget, explored, context=""):
        self.budget = budget
        self.explored = explored
        self.context = context
        msg = f"search explored {explored} candidates, budget is {budget}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class GenerationExhausted(CategoryError):
    pass


class ParseError(CategoryError):
    def __init__(self, message, line=0, column=0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateLabel(ParseError):
    pass
