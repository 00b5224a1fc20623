"""Shared fixtures: corpus graphs that several test modules reuse."""

import pytest

from isolab import corpus_names, generate, load_named


@pytest.fixture(scope="session")
def petersen():
    return load_named("Petersen graph")


@pytest.fixture(scope="session")
def heawood():
    return load_named("Heawood graph")


@pytest.fixture(scope="session")
def dodecahedron():
    return load_named("Dodecahedron")


@pytest.fixture(scope="session")
def desargues():
    return load_named("Desargues Graph")


@pytest.fixture(scope="session")
def k4():
    return generate("complete", 4)


@pytest.fixture(scope="session")
def c6():
    return generate("cycle", 6)


@pytest.fixture(scope="session")
def q4():
    return generate("hypercube", 4)


@pytest.fixture(scope="session")
def all_corpus():
    return {name: load_named(name) for name in corpus_names()}
