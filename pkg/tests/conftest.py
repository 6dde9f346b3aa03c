import pytest

from neargroup.associators import construct_standard
from neargroup.pi_structures import pi_from_field

_cache: dict[int, object] = {}


@pytest.fixture(scope="session")
def standard():
    """Factory for the standard construction over F_q, cached per session."""

    def get(q: int):
        if q not in _cache:
            _cache[q] = construct_standard(*pi_from_field(q))
        return _cache[q]

    return get
