"""omega, kappa and the radical expression of alpha for both group variants.

Write t for the p-th root of omega. The extension kappa of tau_bar acts by
t -> c * t^e with c = beta^k (Heisenberg) or (beta*theta)^k (semidirect),
k = (1 - e^(p-1))/p, and alpha = t + kappa(t) + ... + kappa^(p-2)(t).
Terms are kept as (coefficient in L, exponent of t in 0..p-1), using
t^p = omega to reduce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arith import Classification, Group, MapContext
from .cyclo import CycloElement
from .tower import TowerContext, build_tower

__all__ = [
    "ConstructionError",
    "ConstructionResult",
    "build_construction",
    "kappa_apply",
    "kappa_order_check",
    "THETA_R7",
]

# the resolvent used for the (3,7) semidirect example, as an expression in d and z
THETA_R7 = "3*d^2 + 3*d + 3*z*d + z - 4"


class ConstructionError(ValueError):
    pass


Term = tuple[CycloElement, int]


@dataclass
class ConstructionResult:
    tower: TowerContext
    variant: Group
    x: CycloElement
    beta: CycloElement
    b: CycloElement
    omega: CycloElement
    theta: Optional[CycloElement]
    kappa_coeff: CycloElement
    alpha_terms: list[Term]
    provenance: str
    classification: Optional[Classification] = None
    extras: dict = field(default_factory=dict)

    @property
    def p(self) -> int:
        return self.tower.p

    def reduce_power(self, coeff: CycloElement, n: int) -> Term:
        """coeff * t^n as coeff' * t^(n mod p)."""
        q, r = divmod(n, self.p)
        return (coeff * self.omega**q if q else coeff), r

    def to_json(self) -> dict:
        out = {
            "tower": self.tower.params(),
            "variant": self.variant.value,
            "x": self.x.to_json(),
            "beta": self.beta.to_json(),
            "b": self.b.to_json(),
            "omega": self.omega.to_json(),
            "theta": self.theta.to_json() if self.theta is not None else None,
            "kappa_coeff": self.kappa_coeff.to_json(),
            "alpha_terms": [{"coeff": c.to_json(), "exponent": n} for c, n in self.alpha_terms],
            "provenance": self.provenance,
        }
        if self.classification is not None:
            out["classification"] = self.classification.to_json()
        out.update(self.extras)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ConstructionResult":
        params = dict(data["tower"])
        tower = build_tower(
            params["p"], r=params.get("r"), m_r=params.get("mr"), zeta_p2=params.get("zeta_p2", False),
            e=params.get("e"), sigma=params.get("sigma"),
        )
        el = CycloElement.from_json
        return cls(
            tower=tower,
            variant=Group.parse(data["variant"]),
            x=el(data["x"]),
            beta=el(data["beta"]),
            b=el(data["b"]),
            omega=el(data["omega"]),
            theta=el(data["theta"]) if data.get("theta") else None,
            kappa_coeff=el(data["kappa_coeff"]),
            alpha_terms=[(el(t["coeff"]), int(t["exponent"])) for t in data["alpha_terms"]],
            provenance=data.get("provenance", "unknown"),
        )


def kappa_apply(tower: TowerContext, omega: CycloElement, coeff: CycloElement, term: Term) -> Term:
    """kappa(lambda * t^n) = tau_bar(lambda) * coeff^n * t^(e*n), reduced."""
    lam, n = term
    lam = tower.tau_bar(lam) * coeff**n
    q, r = divmod(tower.e * n, tower.p)
    if q:
        lam = lam * omega**q
    return lam, r


def build_construction(
    maps: MapContext | TowerContext,
    x: CycloElement,
    variant: Group | str,
    theta: Optional[CycloElement] = None,
    force: bool = False,
    settings=None,
) -> ConstructionResult:
    """omega, kappa and alpha for x, after checking that x induces the group."""
    if isinstance(maps, TowerContext):
        maps = MapContext(maps)
    tower = maps.tower
    variant = Group.parse(variant)
    if x.is_zero():
        raise ConstructionError("x must be nonzero")

    cls = maps.classify(x, settings=settings)
    flag = cls.induces_heisenberg if variant is Group.HEISENBERG else cls.induces_semidirect
    if flag:
        provenance = "verified"
    elif force:
        provenance = "forced (non-power condition " + ("failed" if flag is False else "unverified") + ")"
    else:
        state = "fails" if flag is False else "could not be verified"
        raise ConstructionError(f"the non-p-th-power condition for {variant.value} {state}; use force to override")

    beta = maps.beta(x)
    b = maps.b_value(x, variant)
    if variant is Group.SEMIDIRECT:
        if theta is None:
            theta = maps.lagrange_resolvent()
        if tower.sigma_bar(theta) != tower.zeta_p * theta:
            raise ConstructionError("theta is not a zeta_p-eigenvector of sigma_bar")
        base = beta * theta
    else:
        theta = None
        base = beta
    omega = maps.phi(base)
    kappa_coeff = base**maps.kappa_exponent

    terms: list[Term] = [(CycloElement.one(tower.m), 1)]
    for _ in range(tower.p - 2):
        terms.append(kappa_apply(tower, omega, kappa_coeff, terms[-1]))
    merged: dict[int, CycloElement] = {}
    for c, n in terms:
        merged[n] = merged[n] + c if n in merged else c
    alpha_terms = sorted(((c, n) for n, c in merged.items() if c), key=lambda t: t[1])

    return ConstructionResult(
        tower=tower, variant=variant, x=x, beta=beta, b=b, omega=omega, theta=theta,
        kappa_coeff=kappa_coeff, alpha_terms=alpha_terms, provenance=provenance, classification=cls,
    )


def kappa_order_check(res: ConstructionResult) -> bool:
    """kappa^(p-1) must send t back to t with coefficient exactly 1."""
    tower = res.tower
    term: Term = (CycloElement.one(tower.m), 1)
    for _ in range(tower.p - 1):
        term = kappa_apply(tower, res.omega, res.kappa_coeff, term)
    return term[1] == 1 and term[0] == CycloElement.one(tower.m)
