import pytest

from unitwist import catalog
from unitwist.cli import build_context
from unitwist.twist import ihoe_presentation


class Loaded:
    def __init__(self, entry):
        self.entry = entry
        self.data = entry.load()
        self.pres = self.data.presentation
        self.ctx = build_context(self.data)
        self._ihoe = None

    @property
    def ihoe(self):
        if self._ihoe is None:
            self._ihoe = ihoe_presentation(self.ctx)
        return self._ihoe


_cache = {}


def load(cid):
    if cid not in _cache:
        _cache[cid] = Loaded(catalog.get(cid))
    return _cache[cid]


@pytest.fixture(scope="session")
def examples():
    return load


@pytest.fixture(scope="session", params=catalog.ids())
def each_example(request):
    return load(request.param)
