"""Backend selection for the hot kernels.

Set ``METRICDIM_DISABLE_NUMBA=1`` to force the pure Python/numpy path even
when numba is importable.
"""

from __future__ import annotations

import os

_FALSEY = {"", "0", "false", "no", "off"}


def _env_disabled() -> bool:
    return os.environ.get("METRICDIM_DISABLE_NUMBA", "").strip().lower() not in _FALSEY


try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _env_disabled()


def backend_name() -> str:
    return "numba" if USE_NUMBA else "python"
