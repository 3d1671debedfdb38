"""Backend registry: five exact symbolic multiplicative lattices."""

from __future__ import annotations

from ..core import LatticeBackend
from .dvr import DvrChainBackend
from .dedekind import DedekindIntBackend
from .ratval import RatValBackend
from .numsg import NumSgBackend
from .ex17 import Ex17Backend

_BACKENDS: dict[str, LatticeBackend] = {}
for _cls in (DvrChainBackend, DedekindIntBackend, RatValBackend,
             NumSgBackend, Ex17Backend):
    _BACKENDS[_cls.id] = _cls()

BACKEND_IDS = tuple(sorted(_BACKENDS))


def get_backend(backend_id: str) -> LatticeBackend:
    try:
        return _BACKENDS[backend_id]
    except KeyError:
        raise KeyError(
            f"unknown backend {backend_id!r}; known: {', '.join(BACKEND_IDS)}"
        ) from None


def all_backends() -> list[LatticeBackend]:
    return [_BACKENDS[i] for i in BACKEND_IDS]
