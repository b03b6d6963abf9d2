import re
from pathlib import Path

import pytest

from bued.program import load_program
from bued.syntax import read_term

GRAMMARS = Path(__file__).resolve().parent.parent / "grammars"
CORPUS = sorted(GRAMMARS.glob("*.bued"))


def corpus_goal(path: Path) -> str:
    m = re.search(r"^% goal: (.+)$", path.read_text(), re.M)
    assert m, f"{path} has no goal comment"
    return m.group(1).strip()


def corpus_case(name: str):
    path = GRAMMARS / f"{name}.bued"
    return load_program(path), read_term(corpus_goal(path))


@pytest.fixture(params=CORPUS, ids=lambda p: p.stem)
def corpus(request):
    path = request.param
    return path, load_program(path), read_term(corpus_goal(path))
