import pytest

from phasebench import (Alphabet, BoundParams, first_is_two_language,
                        identity_iso, odd_weight_language)


@pytest.fixture
def binary():
    return Alphabet.of_size(2)


@pytest.fixture
def quaternary():
    return Alphabet.of_size(4)


@pytest.fixture
def odd_weight(binary):
    return odd_weight_language(binary)


@pytest.fixture
def first_is_two(binary):
    return first_is_two_language(binary)


@pytest.fixture
def identity(binary):
    return identity_iso(binary)


@pytest.fixture
def bounds():
    return BoundParams()
