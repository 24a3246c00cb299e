"""Shared fixtures: the verification corpus and a few pinned groups."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finharm import CharacterTable, FiniteGroup, character_table, make_named_group

CORPUS_SPECS: tuple[str, ...] = (
    tuple(f"cyclic:{n}" for n in range(1, 13))
    + tuple(f"dihedral:{n}" for n in range(1, 9))
    + (
        "symmetric:3",
        "symmetric:4",
        "quaternion",
        "heisenberg:3",
        "product:cyclic:2*cyclic:4",
    )
)


@pytest.fixture(scope="session")
def corpus_groups() -> dict[str, FiniteGroup]:
    return {spec: make_named_group(spec) for spec in CORPUS_SPECS}


@pytest.fixture(scope="session")
def corpus_tables(corpus_groups: dict[str, FiniteGroup]) -> dict[str, CharacterTable]:
    return {spec: character_table(G) for spec, G in corpus_groups.items()}


@pytest.fixture(scope="session")
def sweep_specs(corpus_groups: dict[str, FiniteGroup]) -> tuple[str, ...]:
    """The corpus restricted to order <= 24, the exhaustive-sweep domain."""
    return tuple(s for s in CORPUS_SPECS if corpus_groups[s].order <= 24)


@pytest.fixture(scope="session")
def s3(corpus_groups) -> FiniteGroup:
    return corpus_groups["symmetric:3"]


@pytest.fixture(scope="session")
def s3_table(corpus_tables) -> CharacterTable:
    return corpus_tables["symmetric:3"]


@pytest.fixture(scope="session")
def q8(corpus_groups) -> FiniteGroup:
    return corpus_groups["quaternion"]


@pytest.fixture(scope="session")
def q8_table(corpus_tables) -> CharacterTable:
    return corpus_tables["quaternion"]
