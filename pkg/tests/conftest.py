"""Shared fixtures: the small hand-checked instance used across the suite."""

import pytest

from collective_schedules.gallery import three_task_example


@pytest.fixture()
def example():
    """Three tasks (lengths 2, 4, 1) and five voters in three groups."""
    return three_task_example()
