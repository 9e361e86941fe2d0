import functools
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from annideal import kernels  # noqa: E402
from annideal.checks import RingContext  # noqa: E402
from annideal.corpus import table_corpus  # noqa: E402
from annideal.ring import build_ring  # noqa: E402

KERNELS = [kernels.get(name) for name in kernels.available()]


@functools.lru_cache(maxsize=None)
def corpus_entries():
    return tuple(table_corpus().entries())


@functools.lru_cache(maxsize=None)
def ring_of(spec, backend="auto"):
    return build_ring(spec, backend=backend)


@functools.lru_cache(maxsize=None)
def context_of(spec, backend="auto"):
    ring = ring_of(spec, backend)
    return RingContext(ring, spec=str(ring.spec))


@pytest.fixture(params=KERNELS, ids=lambda k: k.NAME)
def kernel(request):
    return request.param
