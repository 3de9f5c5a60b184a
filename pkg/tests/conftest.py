"""Suite-wide pytest hooks."""
import pytest


def pytest_collection_modifyitems(items):
    """Everything not marked ci_int belongs to the fast suite."""
    for item in items:
        if item.get_closest_marker("ci_int") is None:
            item.add_marker(pytest.mark.ci_fast)
