"""Shared fixtures: bundled corpora plus a generated partition corpus."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make tests/oracle.py importable

FIXTURES = Path(__file__).parent / "fixtures"

BUNDLED = ("basic", "fig2", "large", "defects")

# Kind layout of the generated partition corpus: 100 relation assertions over
# 149 concepts, split 29 part-whole / 6 specification / 7 analogy / 58
# associative, every assertion a distinct edge.
PARTITION_SPLIT = {"part_whole": 29, "specification": 6, "analogy": 7, "associative": 58}


def _partition_elements() -> list[str]:
    def concept(n: int) -> str:
        return f"notion {n:03d}"

    pairs = [(concept(i), concept(i + 1)) for i in range(1, 53)]          # 52-edge chain
    pairs += [(concept(54 + 2 * j), concept(55 + 2 * j)) for j in range(48)]  # 48 fresh pairs
    assert len(pairs) == 100
    assert len({c for pair in pairs for c in pair}) == 149

    elements = []
    for index, (a, b) in enumerate(pairs):
        text = f"Le concept « {a} » s'articule avec « {b} » dans ce corpus de démonstration."
        if index < 29:
            elements.append(f'<position holonym="{a}" meronym="{b}">{text}</position>')
        elif index < 35:
            elements.append(f'<position hypernym="{a}" hyponym="{b}">{text}</position>')
        elif index < 42:
            elements.append(f'<relations a="{a}" b="{b}" type="analogie">{text}</relations>')
        else:
            elements.append(f'<relations a="{a}" b="{b}" type="lien">{text}</relations>')
    return elements


def write_partition_corpus(directory: Path) -> Path:
    """Three articles carrying the 100 partition assertions, round-robin."""
    directory.mkdir(parents=True, exist_ok=True)
    elements = _partition_elements()
    for index in range(3):
        own = elements[index::3]
        body = "\n    ".join(own)
        (directory / f"volet-{index + 1}.xml").write_text(
            f"""<?xml version="1.0" encoding="UTF-8"?>
<article>
  <meta>
    <title>Volet {index + 1} du corpus de démonstration</title>
    <author>Collectif de démonstration</author>
    <year>2015</year>
    <theme>Répartition des relations</theme>
  </meta>
  <body>
    {body}
  </body>
</article>
""",
            encoding="utf-8",
        )
    return directory


@pytest.fixture(scope="session")
def partition_corpus(tmp_path_factory) -> Path:
    return write_partition_corpus(tmp_path_factory.mktemp("partition") / "corpus")


@pytest.fixture(scope="session")
def fixture_corpora(partition_corpus) -> dict[str, Path]:
    corpora = {name: FIXTURES / name for name in BUNDLED}
    corpora["partition"] = partition_corpus
    return corpora


@pytest.fixture()
def basic_dir() -> Path:
    return FIXTURES / "basic"


@pytest.fixture()
def fig2_dir() -> Path:
    return FIXTURES / "fig2"


@pytest.fixture()
def large_dir() -> Path:
    return FIXTURES / "large"


@pytest.fixture()
def defects_dir() -> Path:
    return FIXTURES / "defects"
