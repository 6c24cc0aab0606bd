"""Finite-category factorization toolkit.

Thin wrapper over the compiled ``_core`` extension. The boundary is JSON
text in the same schemas the ``factcat`` command line tool reads and
writes, so results interoperate with files produced by either side.

When the package is not installed (e.g. running tests straight from a
build tree), set ``FACTCAT_CORE_DIR`` to the directory containing the
compiled ``_core`` module.
"""

import os

try:
    from . import _core
except ImportError:  # pragma: no cover - build-tree fallback
    core_dir = os.environ.get("FACTCAT_CORE_DIR")
    if not core_dir:
        raise
    import importlib.util
    import pathlib

    candidates = sorted(pathlib.Path(core_dir).glob("_core*"))
    if not candidates:
        raise ImportError(f"no _core module under {core_dir}")
    _spec = importlib.util.spec_from_file_location(f"{__name__}._core", candidates[0])
    _core = importlib.util.module_from_spec(_spec)
    _spec.loader.exec_module(_core)

arrow = _core.arrow
canonical = _core.canonical
check = _core.check
comma = _core.comma
core = _core.core
factorize = _core.factorize
fixture = _core.fixture
fs1 = _core.fs1
groth = _core.groth
pi1 = _core.pi1
poly_compose = _core.poly_compose
poly_detect = _core.poly_detect
poly_eval = _core.poly_eval
poly_of = _core.poly_of
pseudopullback = _core.pseudopullback
to_dot = _core.to_dot
validate = _core.validate
MalformedInput = _core.MalformedInput
GuardExceeded = _core.GuardExceeded

__all__ = [
    "arrow", "canonical", "check", "comma", "core", "factorize", "fixture",
    "fs1", "groth", "pi1", "poly_compose", "poly_detect", "poly_eval",
    "poly_of", "pseudopullback", "to_dot", "validate",
    "MalformedInput", "GuardExceeded",
]
