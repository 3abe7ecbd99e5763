"""One test per acceptance criterion; each prints its PASS/FAIL line."""

import pytest

from repvar.acceptance import (
    CRITERIA,
    FOUR_VERTEX_GENERIC_SOCLE,
    FOUR_VERTEX_S,
    FOUR_VERTEX_STATED_SOCLE,
    four_vertex_example,
)
from repvar.components import generic_socle_layering, minimal_radsoc_candidates
from repvar.layers import dominance_leq
from repvar.repmod import socle_layering
from repvar.skeleta import enumerate_skeleta, first_skeleton, presentation_template

UNREACHABLE = {
    4: "the stated socle layering is not the generic one for this radical layering; see the decisions log",
}


def _param(number, fn):
    marks = [pytest.mark.xfail(reason=UNREACHABLE[number], strict=True)] if number in UNREACHABLE else []
    return pytest.param(fn, id=f"criterion_{number:02d}", marks=marks)


@pytest.mark.parametrize("criterion", [_param(k, fn) for k, fn in enumerate(CRITERIA, start=1)])
def test_criterion(criterion, acceptance_log):
    result = criterion()
    print(result.line())
    acceptance_log.append((result.number, result.line()))
    assert result.passed, result.line()


def test_four_vertex_parts_that_hold():
    alg = four_vertex_example()
    assert len(enumerate_skeleta(alg, FOUR_VERTEX_S)) == 4
    soc = generic_socle_layering(alg, FOUR_VERTEX_S, trials=25)
    assert soc == FOUR_VERTEX_GENERIC_SOCLE
    assert (FOUR_VERTEX_S, soc) in minimal_radsoc_candidates(alg, (2, 2, 4, 1), trials=25)


def test_stated_socle_is_a_special_value():
    # all scalars zero on the first skeleton attains it, and it dominates the generic value
    tpl = presentation_template(first_skeleton(four_vertex_example(), FOUR_VERTEX_S))
    special = socle_layering(tpl.realize([0] * tpl.N))
    assert special == FOUR_VERTEX_STATED_SOCLE
    assert dominance_leq(FOUR_VERTEX_GENERIC_SOCLE, special) and special != FOUR_VERTEX_GENERIC_SOCLE
