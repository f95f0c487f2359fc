"""Incidence operators, Salem numbers and instance checks over finite rings.

Every function returns the decoded JSON report the ``finring`` executable
would print for the same request.
"""

import json

from . import _finring
from ._finring import (
    ArgumentError,
    ConstructionError,
    ParseError,
    ScaleError,
    canonical_spec,
    display_spec,
    family_names,
    suite_names,
)

__all__ = [
    "ArgumentError",
    "ConstructionError",
    "NotConvergedError",
    "ParseError",
    "ScaleError",
    "canonical_spec",
    "display_spec",
    "edot",
    "family_names",
    "graph",
    "info",
    "salem",
    "scan",
    "suite_names",
    "verify",
]


class NotConvergedError(RuntimeError):
    """Power iteration hit its cap; ``report`` holds the partial result."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


_ERRORS = {
    "parse": ParseError,
    "argument": ArgumentError,
    "usage": ArgumentError,
    "construction": ConstructionError,
    "scale": ScaleError,
}


def _settings(**kwargs):
    out = []
    for key, value in kwargs.items():
        if value is None:
            continue
        if isinstance(value, bool):
            value = "true" if value else "false"
        out.append((key.replace("_", "-"), str(value)))
    return out


def _call(command, rings, **kwargs):
    if isinstance(rings, str):
        rings = [rings]
    code, out, err = _finring.run(command, list(rings or []), _settings(format="json", **kwargs))
    if code in (_finring.EXIT_OK, _finring.EXIT_CHECK_FAILED):
        return json.loads(out)
    if code == _finring.EXIT_NOT_CONVERGED:
        raise NotConvergedError(json.loads(err.splitlines()[0])["message"], json.loads(out))
    diag = json.loads(err.splitlines()[-1])
    cls = _ERRORS.get(diag["error"], RuntimeError)
    exc = cls(diag["message"])
    if "position" in diag:
        exc.position = diag["position"]
    raise exc


def info(ring):
    """Size, units, radical and quotient shape of one ring."""
    return _call("info", ring)


def salem(ring, d=2, t=None, tol=1e-10, method="auto", seed=42, workers=0, cache_dir=None):
    """Spectral report: norm_W, norm_V and the Salem number at d and t.

    ``t="all-units"`` reports every unit and flags whether they agree.
    """
    return _call("salem", ring, d=d, t=t, tol=tol, method=method, seed=seed, workers=workers,
                 cache_dir=cache_dir)


def verify(suite="all", rings=None, d=2, seed=42, trials=200):
    """Runs a named check suite, or the applicable checks for ``rings``."""
    return _call("verify", rings, suite=suite, d=d, seed=seed, trials=trials)


def scan(rings=None, family=None, d=2, tol=1e-10, seed=42):
    """Salem-number table sorted by ring size."""
    return _call("scan", rings, family=family, d=d, tol=tol, seed=seed)


def edot(ring, d=2, t=None, trials=200, seed=42):
    """Randomized E.E experiment above the computed threshold."""
    return _call("edot", ring, d=d, t=t, trials=trials, seed=seed)


def graph(ring, d=2, t=None):
    """Dot-product graph over a finite field: regularity, connectivity, gap."""
    return _call("graph", ring, d=d, t=t)
