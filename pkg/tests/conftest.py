import pytest

from graded_leibniz.verification import run_all


@pytest.fixture(scope="session")
def claims_by_criterion():
    """Run the full verification suite once and bucket claims by criterion."""
    buckets: dict[int, list] = {}
    for claim in run_all():
        buckets.setdefault(claim.criterion, []).append(claim)
    return buckets
