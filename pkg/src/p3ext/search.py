"""Bounded-height search for elements passing the ideal criterion."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from .arith import MapContext
from .config import DEFAULT_SETTINGS, Settings
from .cyclo import CycloElement
from .expr import element_from_text
from .ideals import CriterionReport, splitting_type, ideal_criterion
from .ntheory import factor_rational
from .tower import TowerContext

__all__ = ["SearchSpec", "SearchHit", "default_support", "search", "combination_text"]


def default_support(tower: TowerContext) -> list[str]:
    """delta^i zeta_p^j for Gaussian towers, the power basis of zeta_{p^2} otherwise."""
    if tower.is_zeta_p2:
        n = tower.m
        return ["1"] + [f"z{n}" if k == 1 else f"z{n}^{k}" for k in range(1, tower.degree("L"))]
    out = []
    for j in range(tower.p - 1):
        for i in range(tower.p):
            parts = ([] if i == 0 else ["d" if i == 1 else f"d^{i}"]) + ([] if j == 0 else ["z" if j == 1 else f"z^{j}"])
            out.append("*".join(parts) or "1")
    return out


@dataclass
class SearchSpec:
    tower: TowerContext
    height: int = 1
    support: Optional[list[str]] = None
    max_candidates: int = 100_000
    max_results: int = 10
    minimal_ramification: bool = False
    settings: Settings = field(default_factory=lambda: DEFAULT_SETTINGS)

    def __post_init__(self) -> None:
        if self.height < 1:
            raise ValueError("height must be at least 1")
        if self.max_candidates < 0 or self.max_results < 0:
            raise ValueError("limits must be non-negative")
        if self.minimal_ramification and not self.tower.is_zeta_p2:
            raise ValueError("minimal-ramification mode needs the zeta_{p^2} tower")
        if self.support is None:
            self.support = default_support(self.tower)


@dataclass
class SearchHit:
    text: str
    coefficients: tuple[int, ...]
    x: CycloElement
    report: CriterionReport

    def to_json(self) -> dict:
        return {
            "x": self.text,
            "coefficients": list(self.coefficients),
            "element": self.x.to_json(),
            "criterion": self.report.to_json(),
        }


def combination_text(coeffs: tuple[int, ...], support: list[str]) -> str:
    parts = []
    for c, s in zip(coeffs, support):
        if c == 0:
            continue
        if s == "1":
            body = str(abs(c))
        else:
            body = s if abs(c) == 1 else f"{abs(c)}*{s}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _vectors(n: int, height: int) -> Iterator[tuple[int, ...]]:
    for h in range(1, height + 1):
        for vec in product(range(-h, h + 1), repeat=n):
            if max(abs(c) for c in vec) == h:
                yield vec


def _minimal_ramification_ok(tower: TowerContext, report: CriterionReport) -> bool:
    """Nr = +-p^a q^b with q split completely in L and p not dividing b."""
    p = tower.p
    _, fac = factor_rational(report.norm)
    others = [q for q in fac if q != p]
    if len(others) != 1:
        return False
    q = others[0]
    return fac[q] > 0 and fac[q] % p != 0 and splitting_type(tower, q, "L").g == tower.degree("L")


def search(spec: SearchSpec) -> list[SearchHit]:
    """Enumerate integer combinations of the support by height, then lexicographically."""
    tower = spec.tower
    maps = MapContext(tower)
    basis = [element_from_text(s, tower) for s in spec.support]
    hits: list[SearchHit] = []
    if spec.max_results == 0 or spec.max_candidates == 0:
        return hits
    seen = 0
    for vec in _vectors(len(basis), spec.height):
        if seen >= spec.max_candidates:
            break
        seen += 1
        x = CycloElement.zero(tower.m)
        for c, b in zip(vec, basis):
            if c:
                x = x + b * c
        if x.is_zero():
            continue
        report = ideal_criterion(maps, x, settings=spec.settings)
        if not report.verdict:
            continue
        if spec.minimal_ramification and not _minimal_ramification_ok(tower, report):
            continue
        hits.append(SearchHit(combination_text(vec, spec.support), vec, x, report))
        if len(hits) >= spec.max_results:
            break
    return hits
