from __future__ import annotations

import pytest

from f1gtheory.burnside import build_burnside
from f1gtheory.groups import build_group


def ring_of(name):
    return build_burnside(build_group(name=name))


@pytest.fixture
def c2_ring():
    return ring_of("C2")


@pytest.fixture
def s3_ring():
    return ring_of("S3")
