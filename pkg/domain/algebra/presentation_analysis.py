# domain/algebra/presentation_analysis.py
"""Abelianization of presentations and the one-relator verdict ladder.

Verdicts are conditional: apart from single-generator groups the ladder
never decides whether a group is cyclic, only what follows if it is almost
cyclic, or that it cannot be almost cyclic.
"""
import logging
from math import gcd
from typing import List

import numpy as np

from domain.algebra.free_words import (
    exponent_sums,
    format_word,
    is_proper_power,
    nielsen_zero_exponent,
)
from domain.algebra.smith_normal_form import smith_normal_form
from domain.entities.presentation import (
    AbelianInvariants,
    JustificationStep,
    OneRelatorVerdict,
    Presentation,
    VerdictClassification,
)
from domain.errors import ArityError, TooManyRelators

logger = logging.getLogger(__name__)

CITE_SINGLE_GENERATOR = "a group generated by a single element is cyclic"
CITE_FREE_GROUP = "the only almost cyclic free group is Z"
CITE_QUOTIENT = "every quotient of an almost cyclic group is almost cyclic, and an abelian almost cyclic group is cyclic"
CITE_FREE_RANK = "a one-relator almost cyclic group has at most two generators and no Z x Z quotient"
CITE_PROPER_POWER = "a one-relator group whose relator is a proper power is torsion; almost cyclic forces it finite, hence finite cyclic"
CITE_TORSION_FREE = "a one-relator group whose relator is not a proper power is torsion-free"
CITE_ZERO_SUM = "if the relator has zero exponent sum on one generator and the group is almost cyclic, the group is cyclic"
CITE_NIELSEN = "Nielsen automorphisms give an isomorphic one-relator presentation with a zero exponent sum"


def format_presentation(P: Presentation) -> str:
    """Canonical text, accepted back by the presentation parser"""
    return str(P)


def exponent_matrix(P: Presentation) -> np.ndarray:
    """Entry (i, j) is the exponent sum of generator j in relator i"""
    M = np.zeros((len(P.relators), len(P.alphabet)), dtype=object)
    for i, relator in enumerate(P.relators):
        for j, s in enumerate(exponent_sums(relator)):
            M[i, j] = s
    return M


def abelianization(P: Presentation) -> AbelianInvariants:
    snf = smith_normal_form(exponent_matrix(P))
    return AbelianInvariants(
        torsion=tuple(d for d in snf.invariants if d > 1),
        free_rank=len(P.alphabet) - snf.rank,
    )


def is_cyclic_abelianization(inv: AbelianInvariants) -> bool:
    if inv.free_rank == 1:
        return not inv.torsion
    return inv.free_rank == 0 and len(inv.torsion) <= 1


def _require_two_generator_one_relator(P: Presentation) -> None:
    if len(P.alphabet) != 2 or len(P.relators) != 1:
        raise ArityError(len(P.alphabet), len(P.relators))


def zero_exponent_rewrite(P: Presentation) -> Presentation:
    """Isomorphic presentation whose relator has zero exponent sum on one generator"""
    _require_two_generator_one_relator(P)
    reduction = nielsen_zero_exponent(P.relators[0])
    return P.with_relators((reduction.result,))


def analyze_one_relator(P: Presentation) -> OneRelatorVerdict:
    """Run the verdict ladder; each rung records the step it relied on.

    Order: single generator, free group, free rank >= 2, proper power,
    other noncyclic abelianization, zero exponent sum.
    """
    if len(P.relators) > 1:
        raise TooManyRelators(len(P.relators))
    steps: List[JustificationStep] = []
    n = len(P.alphabet)

    def verdict(classification: VerdictClassification, transformed=None) -> OneRelatorVerdict:
        logger.debug(f"Verdict for {P}: {classification.value}")
        return OneRelatorVerdict(classification, tuple(steps), transformed)

    if n <= 1:
        data = {"generators": n, **abelianization(P).to_dict()}
        steps.append(JustificationStep("abelianization", CITE_SINGLE_GENERATOR, data))
        return verdict(VerdictClassification.SINGLE_GENERATOR)

    if not P.relators:
        steps.append(JustificationStep("abelianization", CITE_FREE_GROUP,
                                       {"torsion": [], "free_rank": n}))
        return verdict(VerdictClassification.NOT_ALMOST_CYCLIC)

    relator = P.relators[0]
    invariants = abelianization(P)
    if invariants.free_rank >= 2:
        steps.append(JustificationStep("abelianization", CITE_FREE_RANK, invariants.to_dict()))
        return verdict(VerdictClassification.NOT_ALMOST_CYCLIC)

    # an empty relator has free rank n >= 2, so relator is nonempty here
    root, multiplicity = is_proper_power(relator)
    power_data = {"root": format_word(root), "multiplicity": multiplicity}
    if multiplicity > 1:
        steps.append(JustificationStep("is_proper_power", CITE_PROPER_POWER, power_data))
        return verdict(VerdictClassification.FINITE_CYCLIC_IF_ALMOST_CYCLIC)
    steps.append(JustificationStep("is_proper_power", CITE_TORSION_FREE, power_data))

    if not is_cyclic_abelianization(invariants):
        steps.append(JustificationStep("abelianization", CITE_QUOTIENT, invariants.to_dict()))
        return verdict(VerdictClassification.NOT_ALMOST_CYCLIC)

    names = P.alphabet.names
    sums = exponent_sums(relator)
    sum_data = {name: s for name, s in zip(names, sums)}
    if 0 in sums:
        zeroed = names[sums.index(0)]
        partner = names[1 - sums.index(0)]
        steps.append(JustificationStep("exponent_sum", CITE_ZERO_SUM, {
            "sums": sum_data,
            "zeroed": zeroed,
            "partner_trivial": partner,
        }))
        return verdict(VerdictClassification.CYCLIC_IF_ALMOST_CYCLIC, P)

    reduction = nielsen_zero_exponent(relator)
    rewritten = P.with_relators((reduction.result,))
    steps.append(JustificationStep("zero_exponent_rewrite", CITE_NIELSEN, {
        "sums": sum_data,
        "gcd": gcd(*sums),
        "moves": [move.describe(P.alphabet) for move in reduction.moves],
        "relator": format_word(reduction.result),
    }))
    new_sums = exponent_sums(reduction.result)
    steps.append(JustificationStep("exponent_sum", CITE_ZERO_SUM, {
        "sums": {name: s for name, s in zip(names, new_sums)},
        "zeroed": reduction.zeroed,
        "partner_trivial": names[1 - names.index(reduction.zeroed)],
    }))
    return verdict(VerdictClassification.CYCLIC_IF_ALMOST_CYCLIC, rewritten)
