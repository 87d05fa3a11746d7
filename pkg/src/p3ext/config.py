"""Tunable bounds, optionally read from a ``key = value`` file."""

from __future__ import annotations

import configparser
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

__all__ = ["Settings", "DEFAULT_SETTINGS", "load_settings"]


@dataclass(frozen=True)
class Settings:
    factor_bound: int = 10**6       # trial division limit before the general factorizer
    factor_max_digits: int = 60     # larger cofactors are reported as failures
    witness_nmax: int = 25          # auxiliary primes in the residue witness scan
    hensel_cap: int = 64            # maximal q-adic precision for valuations
    prime_bound: int = 10**5        # Galois statistics prime range
    height: int = 1                 # search coefficient bound
    max_conductor: int = 10_000


DEFAULT_SETTINGS = Settings()


def load_settings(path: Optional[str | Path] = None, **overrides) -> Settings:
    values: dict = {}
    if path is not None:
        parser = configparser.ConfigParser()
        text = Path(path).read_text()
        parser.read_string("[settings]\n" + text)
        known = {f.name for f in fields(Settings)}
        for key, raw in parser["settings"].items():
            key = key.strip().replace("-", "_")
            if key not in known:
                raise ValueError(f"unknown setting {key!r} in {path}")
            values[key] = int(raw.strip().replace("_", ""))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return replace(DEFAULT_SETTINGS, **values)
