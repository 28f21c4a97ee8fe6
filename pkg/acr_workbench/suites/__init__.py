"""Verification suites, one per family of checked properties."""
from __future__ import annotations

from typing import Dict, List, Type

from acr_workbench.errors import InvalidParameterError
from acr_workbench.suites.base import Suite, SuiteContext
from acr_workbench.suites.characteristic import CharacteristicSuite
from acr_workbench.suites.companion import CompanionSuite, InvarianceSuite
from acr_workbench.suites.compiler import BoundedDegreeSuite, CompilerSuite
from acr_workbench.suites.degree_sequences import SequenceSuite
from acr_workbench.suites.family import FamilySuite
from acr_workbench.suites.gadgets import GadgetSuite
from acr_workbench.suites.games import GameSuite
from acr_workbench.suites.orders import CountCharacterisationSuite, OrderNetworkSuite

SUITES: Dict[str, Type[Suite]] = {
    suite.name: suite
    for suite in (
        CountCharacterisationSuite,
        SequenceSuite,
        OrderNetworkSuite,
        GadgetSuite,
        FamilySuite,
        CompilerSuite,
        CharacteristicSuite,
        CompanionSuite,
        InvarianceSuite,
        GameSuite,
        BoundedDegreeSuite,
    )
}


def resolve_suites(names: List[str]) -> List[Suite]:
    """Instantiate suites by name; ``all`` expands to every suite in registry order."""

    if "all" in names:
        return [suite() for suite in SUITES.values()]
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise InvalidParameterError(
            f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name]() for name in names]


__all__ = ["SUITES", "Suite", "SuiteContext", "resolve_suites"]
