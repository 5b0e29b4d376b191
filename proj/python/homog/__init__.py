"""Finite homogeneous-structure toolkit.

Structures and ages travel between Python and the core as JSON; the helpers
here wrap the raw string interface with dicts.
"""

import json as _json

try:
    from . import _homog as _core  # installed wheel layout
except ImportError:  # in-tree build: module sits next to the package on sys.path
    import _homog as _core

__all__ = ["core", "structure", "dumps", "loads"]

core = _core


def dumps(structure_dict):
    """Serialize a structure dict to the JSON wire format."""
    return _json.dumps(structure_dict)


def loads(text):
    """Parse a JSON wire-format string to a dict."""
    return _json.loads(text)


def structure(signature, size, relations=None):
    """Build a structure dict: signature is a list of (name, arity, symmetric)."""
    return {
        "signature": [
            {"name": n, "arity": a, "symmetric": s} for (n, a, s) in signature
        ],
        "size": size,
        "relations": relations or {},
    }


def __getattr__(name):
    return getattr(_core, name)
