import doctest
import importlib
import pkgutil

import pytest

import orderedpatterns

MODULES = sorted(
    m.name for m in pkgutil.walk_packages(orderedpatterns.__path__, "orderedpatterns.") if not m.name.endswith("__main__")
)


@pytest.mark.parametrize("name", MODULES)
def test_docstring_examples(name):
    result = doctest.testmod(importlib.import_module(name), optionflags=doctest.ELLIPSIS)
    assert result.failed == 0
