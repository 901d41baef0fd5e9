#!/usr/bin/env python
# -*- encoding: utf-8 -*-
'''Exception classes for frameforge'''


class FrameForgeError(Exception):
    '''The root frameforge exception class'''
    pass


class SchemaError(FrameForgeError):
    '''Exceptions relating to certificate schema validation'''
    pass


class ParameterError(FrameForgeError):
    '''Exceptions relating to function and method parameters'''
    pass


class InvalidShape(ParameterError):
    '''A frame or matrix does not have the required shape'''
    pass


class NotSymmetric(FrameForgeError):
    '''A matrix expected to be symmetric is not, within tolerance'''
    pass


class NotAFrame(FrameForgeError):
    '''A family of vectors does not span its ambient space'''
    pass


class NotParseval(FrameForgeError):
    '''A frame is not a Parseval frame, within tolerance'''
    pass


class NotProjector(FrameForgeError):
    '''A matrix is not an orthogonal projection, within tolerance'''
    pass


class NotEqualNorm(FrameForgeError):
    '''The vectors of a frame do not share a common norm'''
    pass


class NormBoundViolated(FrameForgeError):
    '''Some frame vector exceeds the admissible squared norm'''
    pass


class NonzeroDiagonal(FrameForgeError):
    '''A matrix handed to the paving search has a nonzero diagonal'''
    pass


class CriterionMismatch(FrameForgeError):
    '''Two equivalent numerical criteria produced different verdicts.

    This always signals a tolerance problem: the criteria agree in
    exact arithmetic.
    '''
    pass


class InternalContractViolation(FrameForgeError):
    '''A guaranteed outcome failed to materialize'''
    pass


class PreconditionViolated(FrameForgeError):
    '''The standing hypothesis of an operation does not hold'''
    pass


class FeasibleInput(FrameForgeError):
    '''A failure witness was requested for a feasible instance'''
    pass


class HypothesisFailed(FrameForgeError):
    '''A hypothesis of a partition theorem does not hold.

    Attributes
    ----------
    hypothesis : int
        The number of the failed hypothesis

    witness : object or None
        Evidence of the failure, if one was constructed
    '''

    def __init__(self, hypothesis, witness=None, message=None):
        if message is None:
            message = 'Hypothesis ({:d}) fails'.format(hypothesis)
        super(HypothesisFailed, self).__init__(message)
        self.hypothesis = hypothesis
        self.witness = witness


class SearchExhausted(FrameForgeError):
    '''A search terminated without a result and no fallback applies'''
    pass


class PavingNotFound(FrameForgeError):
    '''No paving meeting the target was found.

    This is a statement about the search, not about the instance.

    Attributes
    ----------
    result : PavingResult
        The best paving found

    certificate : PartitionCertificate or None
        Evidence for the best paving, with ``claims_hold`` false, when the
        search ran on a frame
    '''

    def __init__(self, result, message=None, certificate=None):
        if message is None:
            message = 'No paving found at r={}'.format(result.partition.part_count)
        super(PavingNotFound, self).__init__(message)
        self.result = result
        self.certificate = certificate


class BudgetExhausted(PavingNotFound):
    '''The annealing budget ran out before the target was met'''
    pass
