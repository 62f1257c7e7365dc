"""Access to the bundled example datasets."""

from __future__ import annotations

import os
from importlib import resources

from .errors import UsageError

BUILTIN = ("whitehead.json", "trefoil.json", "kappa_zero.json", "l10n36_conway.json")


def builtin_names():
    return list(BUILTIN)


def builtin_path(name):
    """Filesystem path of a bundled dataset."""
    if name not in BUILTIN:
        raise UsageError(f"no bundled dataset named {name!r}; choices: {', '.join(BUILTIN)}")
    return resources.files("slopelab.data") / name


def resolve_input(path):
    """An existing path as given, else the bundled dataset of that name."""
    if os.path.exists(path):
        return path
    base = os.path.basename(path)
    if base in BUILTIN:
        return str(builtin_path(base))
    raise UsageError(f"input file not found: {path}")
