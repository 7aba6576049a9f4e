import pytest

from scrolldiv.scroll import ScrollData

DESK_SIGMAS = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 2, 1)]
DESK_NS = [2, 3, 4, 5]
DESK = [(s, n) for s in DESK_SIGMAS for n in DESK_NS]
PRIMES = [7, 101, 32003]


def desk_id(case):
    sigma, n = case
    return f"s{''.join(map(str, sigma))}-n{n}"


@pytest.fixture(params=DESK, ids=desk_id)
def desk(request):
    sigma, n = request.param
    return ScrollData(sigma, n)


def T(data, *pairs):
    """Monomial from (block, slot) pairs, repeats allowed."""
    return data.layout.monomial(list(pairs))
