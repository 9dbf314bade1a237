import doctest

from kohnert import perms


def test_perms_doctests():
    results = doctest.testmod(perms)
    assert results.failed == 0 and results.attempted > 0
