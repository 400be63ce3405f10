"""
Tests for the read-only handlebody API.

Each endpoint validates its query string, runs one verb and returns the same
document the management commands print in machine format.
"""

import pytest
from django.urls import reverse
from rest_framework import status


class TestClassifyView:
    """Tests for the classify endpoint."""

    def test_quaternion(self, api_client):
        """Test Q8 at n = 2."""
        response = api_client.get(reverse("classify"), {"group": "quaternion", "n": 2})
        assert response.status_code == status.HTTP_200_OK
        assert (response.data["op"], response.data["or"], response.data["nonor"]) == (1, 3, 0)
        assert response.data["genus"] == 9

    def test_by_genus(self, api_client):
        """Test the genus form resolves n."""
        response = api_client.get(reverse("classify"), {"group": "dihedral:3", "genus": 7})
        assert response.status_code == status.HTTP_200_OK
        assert response.data["n"] == 2

    def test_bad_genus(self, api_client):
        """Test an inadmissible genus is a 400 with kind genus."""
        response = api_client.get(reverse("classify"), {"group": "cyclic:4", "genus": 6})
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        assert response.data["error"] == "genus"
        assert response.data["status_code"] == 400

    def test_missing_rank(self, api_client):
        """Test omitting both n and genus fails validation."""
        response = api_client.get(reverse("classify"), {"group": "quaternion"})
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        assert response.data["error"] == "invalid"

    def test_unknown_group(self, api_client):
        """Test an unknown family fails validation on the group field."""
        response = api_client.get(reverse("classify"), {"group": "octonion", "n": 2})
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        assert "group" in response.data

    def test_state_cap(self, api_client):
        """Test an oversized state space is a 413."""
        response = api_client.get(
            reverse("classify"), {"group": "quaternion", "n": 3, "state_cap": 100}
        )
        assert response.status_code == status.HTTP_413_REQUEST_ENTITY_TOO_LARGE
        assert response.data["error"] == "cap"

    def test_post_not_allowed(self, api_client):
        """Test the API is read-only."""
        response = api_client.post(reverse("classify"), {"group": "quaternion", "n": 2})
        assert response.status_code == status.HTTP_405_METHOD_NOT_ALLOWED


class TestOtherViews:
    """Tests for the remaining endpoints."""

    def test_spectrum(self, api_client):
        """Test the C3 spectrum has no orientation-reversing genus."""
        response = api_client.get(reverse("spectrum"), {"group": "cyclic:3", "bound": 10})
        assert response.status_code == status.HTTP_200_OK
        assert response.data["orientation_preserving"] == [1, 4, 7, 10]
        assert response.data["orientation_reversing"] == []

    def test_orbits_weak(self, api_client):
        """Test weak orbits of D4 at n = 2."""
        response = api_client.get(reverse("orbits"), {"group": "dihedral:4", "n": 2, "weak": "true"})
        assert response.status_code == status.HTTP_200_OK
        assert response.data["mode"] == "weak"

    def test_orbit_of_vector(self, api_client):
        """Test the orbit of one marked vector."""
        response = api_client.get(
            reverse("orbits"), {"group": "dihedral:3", "vector": "g=(s1,s2);v=(-,-)"}
        )
        assert response.status_code == status.HTTP_200_OK
        assert response.data["kind"] == "orientation_reversing"

    def test_orbit_of_bad_vector(self, api_client):
        """Test unparseable vector text is a 400 with kind descriptor."""
        response = api_client.get(reverse("orbits"), {"group": "dihedral:3", "vector": "s1,s2"})
        assert response.status_code == status.HTTP_400_BAD_REQUEST
        assert response.data["error"] == "descriptor"

    def test_nielsen(self, api_client):
        """Test Q8 at n = 3 is a single Nielsen class."""
        response = api_client.get(reverse("nielsen"), {"group": "quaternion", "n": 3})
        assert response.status_code == status.HTTP_200_OK
        assert response.data["single_class"] is True

    def test_oracle_check(self, api_client):
        """Test the covering oracle on D3 at n = 2."""
        response = api_client.get(reverse("oracle-check"), {"group": "dihedral:3", "n": 2})
        assert response.status_code == status.HTTP_200_OK
        assert response.data["mismatches"] == []
        assert response.data["genus"] == 7

    @pytest.mark.parametrize("group, expected", [("abelian:4,2", 200), ("quaternion", 400)])
    def test_formula(self, api_client, group, expected):
        """Test the formula endpoint accepts abelian groups only."""
        response = api_client.get(reverse("formula"), {"group": group, "n": 2})
        assert response.status_code == expected
        if expected == 200:
            assert response.data["differing"] == []
        else:
            assert response.data["error"] == "not-abelian"
