"""Hot loops behind a backend switch.

The compiled module is used when it was built; otherwise the pure-Python
module with the same functions is loaded.  ``BACKEND`` names the active one.
"""
import importlib

from . import _pykernels

try:
    from . import _ckernels as _active
except ImportError:
    _active = _pykernels
    BACKEND = "python"
else:
    BACKEND = "cython"

BACKENDS = ("cython", "python")

condition_scan = _active.condition_scan
naive_condition_scan = _active.naive_condition_scan
trig_audit = _active.trig_audit
SCAN_LIMIT = _active.SCAN_LIMIT
AUDIT_LIMIT = _active.AUDIT_LIMIT


def load_backend(name):
    """Return the kernel module for ``name``; ImportError if not built."""
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name == "python":
        return _pykernels
    return importlib.import_module(f"{__name__}._ckernels")


def available_backends():
    names = []
    for name in BACKENDS:
        try:
            load_backend(name)
        except ImportError:
            continue
        names.append(name)
    return names
