"""Exception types. Each maps to one of the documented error kinds."""


class ChowlabError(ValueError):
    kind = "error"


class InvalidParameters(ChowlabError):
    kind = "invalid-parameters"


class UnsupportedField(ChowlabError):
    kind = "unsupported-field"


class ExchangeAxiomViolation(ChowlabError):
    kind = "exchange-axiom-violation"


class LoopDetected(ChowlabError):
    kind = "loop-detected"


class EmptyBasisList(ChowlabError):
    kind = "empty-basis-list"


class MixedCardinality(ChowlabError):
    kind = "mixed-cardinality"


class ContractByNonFlat(ChowlabError):
    kind = "contract-by-non-flat"


class EmptyMatroid(ChowlabError):
    kind = "delete-leaves-empty-matroid"


class RankTooSmall(ChowlabError):
    kind = "rank-too-small"


class NotPalindromic(ChowlabError):
    kind = "not-palindromic"


class OddMomentRejected(ChowlabError):
    kind = "odd-k-rejected"


class NotAWeakMap(ChowlabError):
    kind = "not-a-weak-map"


class DimensionTooLarge(ChowlabError):
    kind = "dimension-too-large"


class Unsupported(ChowlabError):
    kind = "unsupported"


class NoFiniteC(ChowlabError):
    kind = "no-finite-C"
