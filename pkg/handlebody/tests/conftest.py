"""
Test fixtures for the handlebody app.

This module provides pytest fixtures for building the small groups the
classification tests run on, an API client for the HTTP surface, and a
runner for the management commands that captures their output.
"""

from io import StringIO

import numpy as np
import pytest
from django.core.management import call_command
from rest_framework.test import APIClient

from handlebody.groups import build_group


@pytest.fixture
def api_client():
    """
    Return an API client for the read-only handlebody endpoints.

    Returns:
        APIClient: An instance of the DRF API client
    """
    return APIClient()


@pytest.fixture
def group():
    """
    Factory fixture building a FiniteGroup from a descriptor.

    Groups are cached for the duration of one test so that repeated lookups
    share the lazily computed tables (inverses, orders, generators).

    Returns:
        function: ``group("dihedral:3")`` -> FiniteGroup
    """
    built = {}

    def _group(descriptor):
        if descriptor not in built:
            built[descriptor] = build_group(descriptor)
        return built[descriptor]

    return _group


@pytest.fixture
def quaternion(group):
    """Return the quaternion group Q8."""
    return group("quaternion")


@pytest.fixture
def d3(group):
    """Return the dihedral group of order 6, generated by reflections s1, s2."""
    return group("dihedral:3")


@pytest.fixture
def c2(group):
    """Return the cyclic group of order 2."""
    return group("cyclic:2")


@pytest.fixture
def rng():
    """
    Return a seeded numpy generator for the sampled property tests.

    Returns:
        numpy.random.Generator: Generator seeded with a fixed value
    """
    return np.random.default_rng(20240611)


@pytest.fixture
def run_command():
    """
    Run a management command and capture what it writes.

    Returns:
        function: ``run_command(name, *args, **options)`` -> (stdout, stderr)
    """

    def _run(name, *args, **options):
        out, err = StringIO(), StringIO()
        call_command(name, *args, stdout=out, stderr=err, **options)
        return out.getvalue(), err.getvalue()

    return _run
