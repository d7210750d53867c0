"""Exception types shared across the package."""


class CtxsemError(Exception):
    """Base class for all errors raised by this package."""


class KeyVariantMismatch(CtxsemError):
    """A product was applied to vectors with the wrong key variant."""


class NotPositive(CtxsemError):
    """An operation requiring nonnegative coefficients got a negative one."""


class ZeroAntecedent(CtxsemError):
    """Degree of entailment is undefined for a zero antecedent."""


class UnknownWord(CtxsemError):
    def __init__(self, word):
        super().__init__(f"unknown word: {word!r}")
        self.word = word


class EmptyCorpus(CtxsemError):
    """A corpus-consuming operation received no documents."""


class NotDistribution(CtxsemError):
    """The language is not a probability distribution."""


class NotInSpan(CtxsemError):
    """A vector does not lie in the span of the selected basis."""


class SpanNotReached(CtxsemError):
    """Basis selection exhausted its candidates without covering all words."""


class IndexOutOfRange(CtxsemError):
    pass


class NotSimplex(CtxsemError):
    """A topic-mixture vector is not on the probability simplex."""


class MalformedInput(CtxsemError):
    """An input file or literal failed to parse."""


class MalformedDataset(MalformedInput):
    def __init__(self, line_no, reason):
        super().__init__(f"dataset line {line_no}: {reason}")
        self.line_no = line_no
