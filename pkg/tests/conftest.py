import pytest

from imw.corpus import builtin_corpus
from imw.inverse import validate_inverse


@pytest.fixture(scope="session")
def corpus_monoids():
    """Every builtin instance that is a monoid, as (name, InverseMonoid)."""
    out = []
    for inst in builtin_corpus():
        if inst.kind in ("monoid", "group"):
            out.append((inst.name, validate_inverse(inst.payload)))
        elif inst.kind == "semilattice":
            out.append((inst.name, validate_inverse(inst.payload.base)))
    return out
