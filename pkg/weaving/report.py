"""Assemble the invariant report for a weaving family member or a raw braid."""

from __future__ import annotations

import structlog

from weaving.bracket import jones_via_bracket
from weaving.braid import BraidWord, format_braid, weaving_word
from weaving.cyclotomic import (
    AT_MINUS_ONE,
    AT_OMEGA,
    abs_if_real_integerlike,
    eval_at,
    lm_decompose,
)
from weaving.laurent import LaurentPoly
from weaving.models import InvariantReport
from weaving.recurrences import (
    det_w3n,
    det_wp2,
    eval_w3n_at_w,
    eval_wp2_at_w,
    jones_w3n,
    jones_wp2,
    unknotting_sequence_w34,
    unknotting_sequence_wp2,
)

logger = structlog.get_logger()

# Standard names of small weaving knots and links
KNOT_NAMES: dict[tuple[int, int], str] = {
    (2, 2): "2_1^2",
    (3, 2): "4_1",
    (4, 2): "6_3^2",
    (5, 2): "8_12",
    (7, 2): "12a477",
    (3, 3): "6_2^3",
    (3, 4): "8_18",
    (3, 5): "10_123",
    (4, 3): "9_40",
}


def family_label(p: int, n: int) -> str:
    return f"W({p},{n})"


def _unknotting_upper(p: int, n: int) -> int | None:
    if n == 2 and p % 2 == 1:
        return unknotting_sequence_wp2((p - 1) // 2).length
    if (p, n) == (3, 4):
        return unknotting_sequence_w34().length
    return None


def invariant_report(
    source: tuple[int, int] | BraidWord,
    *,
    budget: int | None = None,
    threads: int | None = None,
    mirror: bool = False,
) -> InvariantReport:
    """
    Build the full report for W(p,n) or the closure of a braid word.

    W(3,n) and W(p,2) use the exact recurrences; every other input goes
    through the state-sum oracle.

    Args:
        source: ``(p, n)`` or a braid word
        budget: Oracle state budget
        threads: Oracle worker count
        mirror: Report the mirror image (sigma_1 negative convention)

    Returns:
        Validated InvariantReport

    Raises:
        BraidError: For (p, n) outside the family domain
        StateBudgetError: If the oracle would exceed its budget
    """
    if isinstance(source, BraidWord):
        word = source.mirror() if mirror else source
        family: tuple[int, int] | None = None
        label = format_braid(word)
        jones: LaurentPoly = jones_via_bracket(word, budget=budget, threads=threads)
        determinant = abs_if_real_integerlike(eval_at(jones, AT_MINUS_ONE))
        v_at_w = eval_at(jones, AT_OMEGA)
    else:
        p, n = source
        word = weaving_word(p, n)
        family = (p, n)
        label = family_label(p, n)
        if p == 3:
            jones, determinant, v_at_w = jones_w3n(n), det_w3n(n), eval_w3n_at_w(n)
        elif n == 2:
            jones, determinant, v_at_w = jones_wp2(p), det_wp2(p), eval_wp2_at_w(p)
        else:
            jones = jones_via_bracket(word, budget=budget, threads=threads)
            determinant = abs_if_real_integerlike(eval_at(jones, AT_MINUS_ONE))
            v_at_w = eval_at(jones, AT_OMEGA)
        if mirror:
            word = word.mirror()
            jones = jones.mirror()
            v_at_w = v_at_w.conj()

    mu = word.component_count()
    decomposition = lm_decompose(v_at_w, mu)
    lower = decomposition.n_L if mu == 1 else None
    upper = _unknotting_upper(*family) if family else None

    logger.info(
        "Invariant report built",
        label=label,
        determinant=determinant,
        mu=mu,
        n_L=decomposition.n_L,
    )
    return InvariantReport(
        label=label,
        family=family,
        braid=format_braid(word),
        knot_name=KNOT_NAMES.get(family) if family else None,
        jones=jones,
        determinant=determinant,
        v_at_w=v_at_w,
        mu=mu,
        n_L=decomposition.n_L,
        lm_sign=decomposition.sign,
        unknotting_lower=lower,
        unknotting_upper=upper,
    )
