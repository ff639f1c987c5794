import pytest

from z4census.census import ScanConfig, enumerate_family
from z4census.invariants import profile


@pytest.fixture(scope="session")
def family442():
    """The census from the (4,4,2) scan alone (fast; sufficient by Prop. data)."""
    return enumerate_family(ScanConfig(n=10, target_order=4, cycle_types=[(4, 4, 2)]))


@pytest.fixture(scope="session")
def census_profiles(family442):
    return [profile(c.witness) for c in family442.classes]
