import json

import pytest

from citerhythm import fixture_path, load_manifest, read_matrix


@pytest.fixture(scope="session")
def golden():
    return json.loads(fixture_path("scim_golden.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def china():
    return read_matrix(fixture_path("china.csv"))


@pytest.fixture(scope="session")
def scim_minus_china():
    return read_matrix(fixture_path("scim_minus_china.csv"))


@pytest.fixture(scope="session")
def brazil():
    return read_matrix(fixture_path("brazil.csv"))


@pytest.fixture(scope="session")
def netherlands():
    return read_matrix(fixture_path("netherlands.csv"))


@pytest.fixture(scope="session")
def scim_minus_brazil_netherlands():
    return read_matrix(fixture_path("scim_minus_brazil_netherlands.csv"))


@pytest.fixture(scope="session")
def scim_total():
    return read_matrix(fixture_path("scim_total.csv"))


@pytest.fixture(scope="session")
def scim():
    return load_manifest(fixture_path("scim.manifest"))
