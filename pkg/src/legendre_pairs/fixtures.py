"""Pinned field realizations read from a plain key-value config file.

Each section names one field::

    [gf625]
    p = 5
    n = 4
    modulus = 2,4,4,0,1
    g = 0,1,0,0

Constructions ask for a field by its order; a pinned realization wins,
otherwise the canonical field is built.  The bundled ``pinned`` fixture
reproduces the shipped catalogs of pairs.
"""

from __future__ import annotations

import configparser
from importlib import resources
from pathlib import Path

from .field import FieldSpec, make_field, parse_poly
from .numtheory import is_prime_power

BUNDLED = {"pinned": "pinned.ini"}


class FixtureError(ValueError):
    pass


class FieldRegistry:
    """Order -> FieldSpec, preferring pinned realizations."""

    def __init__(self, pinned: dict[int, FieldSpec] | None = None):
        self.pinned = dict(pinned or {})
        self._cache: dict[int, FieldSpec] = {}

    def __call__(self, q: int) -> FieldSpec:
        if q in self.pinned:
            return self.pinned[q]
        if q not in self._cache:
            pk = is_prime_power(q)
            if pk is None:
                raise FixtureError(f"{q} is not a prime power")
            self._cache[q] = make_field(*pk)
        return self._cache[q]

    def __contains__(self, q):
        return q in self.pinned


def parse_fixture(text: str, source: str = "<string>") -> FieldRegistry:
    cp = configparser.ConfigParser()
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise FixtureError(f"{source}: {exc}") from exc
    pinned = {}
    for name in cp.sections():
        sec = cp[name]
        try:
            p, n = int(sec["p"]), int(sec["n"])
            modulus = parse_poly(sec["modulus"]) if "modulus" in sec else None
            g = parse_poly(sec["g"]) if "g" in sec else None
        except (KeyError, ValueError) as exc:
            raise FixtureError(f"{source}: section [{name}]: {exc}") from exc
        spec = make_field(p, n, modulus, g)
        if spec.q in pinned:
            raise FixtureError(f"{source}: two sections pin GF({spec.q})")
        pinned[spec.q] = spec
    return FieldRegistry(pinned)


def load_fixture(path: str | Path | None) -> FieldRegistry:
    """Load a fixture file; ``None`` gives canonical fields only."""
    if path is None:
        return FieldRegistry()
    if str(path) in BUNDLED and not Path(path).exists():
        text = resources.files("legendre_pairs").joinpath("data", BUNDLED[str(path)]).read_text()
        return parse_fixture(text, str(path))
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FixtureError(f"cannot read fixture {path}: {exc.strerror}") from exc
    return parse_fixture(text, str(path))
