import pathlib

import pytest

import anick

ROOT = pathlib.Path(__file__).resolve().parents[1]
PRESENTATIONS = ROOT / "presentations"


@pytest.fixture(scope="session")
def running_presentation():
    return anick.Presentation.load(PRESENTATIONS / "running_example.json")


@pytest.fixture(scope="session")
def running_engine(running_presentation):
    return anick.ResolutionEngine.from_presentation(running_presentation)


@pytest.fixture(scope="session")
def idempotent_presentation():
    return anick.Presentation.load(PRESENTATIONS / "idempotent_letter.json")
