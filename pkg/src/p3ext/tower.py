"""The tower Q < F, K < L inside Q(zeta_m) and its Galois generators.

F is a cyclic degree-p field, K = Q(zeta_p), L = FK. F comes either from a
Gaussian period of a prime r = 1 (mod p) (ambient conductor m = p*r) or from
the degree-p subfield of Q(zeta_{p^2}) (m = p^2). Galois groups are handled as
subgroups of (Z/m)^*: every subfield is the fixed field of a subgroup H and an
exponent k acts on it through its class modulo H.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional

from .cyclo import Automorphism, CycloElement, Subspace, min_poly_over_Q
from .ntheory import crt, euler_phi, is_prime, is_primitive_root, primitive_root, units_mod

__all__ = ["TowerError", "TowerContext", "gaussian_period", "build_tower", "primitive_root"]


class TowerError(ValueError):
    pass


def gaussian_period(p: int, r: int, m_r: int) -> CycloElement:
    """Sum of zeta_r^(m_r^(j*p)) over j, as an element of Q(zeta_{p*r})."""
    if not is_prime(r):
        raise TowerError(f"r = {r} is not prime")
    if (r - 1) % p:
        raise TowerError(f"r = {r} is not 1 mod {p}")
    if not is_primitive_root(m_r, r):
        raise TowerError(f"{m_r} is not a primitive root modulo {r}")
    m = p * r
    out = CycloElement.zero(m)
    step = pow(m_r, p, r)
    exp = 1
    for _ in range((r - 1) // p):
        out = out + CycloElement.zeta(m, p * exp)
        exp = exp * step % r
    return out


@dataclass(frozen=True)
class TowerContext:
    p: int
    source: str  # "gauss" or "zeta_p2"
    r: Optional[int]
    m_r: Optional[int]
    m: int
    delta: CycloElement
    sigma_bar: Automorphism
    tau_bar: Automorphism
    e: int
    H_F: frozenset
    H_K: frozenset
    H_L: frozenset
    sigma_root: int = field(default=0)

    # -- derived data -----------------------------------------------------

    @cached_property
    def zeta_p(self) -> CycloElement:
        return CycloElement.zeta(self.m, self.m // self.p)

    @cached_property
    def sigma_powers(self) -> tuple[Automorphism, ...]:
        return tuple(self.sigma_bar**i for i in range(self.p))

    @cached_property
    def tau_powers(self) -> tuple[Automorphism, ...]:
        return tuple(self.tau_bar**j for j in range(self.p - 1))

    @cached_property
    def L_basis(self) -> tuple[CycloElement, ...]:
        """delta^i * zeta_p^j, i < p, j < p - 1 (i varies fastest)."""
        out = []
        for j in range(self.p - 1):
            zj = self.zeta_p**j
            for i in range(self.p):
                out.append(self.delta**i * zj)
        return tuple(out)

    @cached_property
    def L_space(self) -> Subspace:
        return Subspace(list(self.L_basis))

    @cached_property
    def K_space(self) -> Subspace:
        return Subspace([self.zeta_p**j for j in range(self.p - 1)])

    @cached_property
    def F_space(self) -> Subspace:
        return Subspace([self.delta**i for i in range(self.p)])

    def subgroup(self, name: str) -> frozenset:
        if name == "F":
            return self.H_F
        if name == "K":
            return self.H_K
        if name == "L":
            return self.H_L
        if name in ("Q", "QQ"):
            return frozenset(units_mod(self.m))
        if name in ("ambient", "Qzeta"):
            return frozenset({1})
        raise TowerError(f"unknown field {name!r}")

    def degree(self, name: str) -> int:
        return euler_phi(self.m) // len(self.subgroup(name))

    def contains(self, name: str, x: CycloElement) -> bool:
        if x.m != self.m:
            return False
        if name == "L":
            return self.L_space.contains(x)
        if name == "K":
            return self.K_space.contains(x)
        if name == "F":
            return self.F_space.contains(x)
        return all(Automorphism(self.m, k)(x) == x for k in self.subgroup(name))

    @property
    def is_zeta_p2(self) -> bool:
        return self.source == "zeta_p2"

    def params(self) -> dict:
        """Arguments that rebuild this tower through :func:`build_tower`."""
        out = {"p": self.p, "e": self.e}
        if self.source == "gauss":
            out.update(r=self.r, mr=self.m_r)
        else:
            out["zeta_p2"] = True
        out["sigma"] = self.sigma_root
        return out

    def summary(self) -> dict:
        return {
            "p": self.p,
            "source": self.source,
            "r": self.r,
            "mr": self.m_r,
            "m": self.m,
            "e": self.e,
            "sigma_bar": self.sigma_bar.k,
            "sigma_root": self.sigma_root,
            "tau_bar": self.tau_bar.k,
            "delta": self.delta.to_json(),
            "degrees": {"F": self.degree("F"), "K": self.degree("K"), "L": self.degree("L")},
        }


def _order_mod_subgroup(k: int, m: int, H: frozenset) -> int:
    x, n = k % m, 1
    while x not in H:
        x = x * k % m
        n += 1
    return n


def build_tower(
    p: int,
    r: Optional[int] = None,
    m_r: Optional[int] = None,
    zeta_p2: bool = False,
    e: Optional[int] = None,
    sigma: Optional[int] = None,
) -> TowerContext:
    """Build the tower for ``(p, r)`` (Gaussian period) or for L = Q(zeta_{p^2}).

    ``sigma`` forces the generator of Gal(L/K): for Gaussian towers it is the
    exponent s of zeta_r -> zeta_r^s, for the zeta_{p^2} tower the exponent of
    zeta_{p^2}. By default the smallest admissible exponent is used. ``e``
    defaults to the smallest positive primitive root mod p and is kept as a
    signed integer.
    """
    return _build_tower(p, r, m_r, bool(zeta_p2), e, sigma)


@lru_cache(maxsize=32)
def _build_tower(p, r, m_r, zeta_p2, e, sigma) -> TowerContext:
    if p < 3 or not is_prime(p):
        raise TowerError(f"p = {p} must be an odd prime")
    if zeta_p2 == (r is not None):
        raise TowerError("give exactly one of r (Gaussian period) or zeta_p2")
    if e is None:
        e = primitive_root(p)
    if not is_primitive_root(e % p, p):
        raise TowerError(f"e = {e} is not a primitive root modulo {p}")

    if zeta_p2:
        m = p * p
        units = units_mod(m)
        H_K = frozenset(k for k in units if k % p == 1)
        H_F = frozenset(k for k in units if pow(k, p - 1, m) == 1)
        delta = CycloElement.zero(m)
        for h in sorted(H_F):
            delta = delta + CycloElement.zeta(m, h)
        source, m_r = "zeta_p2", None
        if sigma is None:
            sigma = p + 1
        if sigma % p != 1 or sigma % m == 1:
            raise TowerError(f"sigma exponent {sigma} must be 1 mod {p} and not 1 mod {m}")
        sigma_k = sigma % m
    else:
        if m_r is None:
            m_r = primitive_root(r)
        delta = gaussian_period(p, r, m_r)
        m = p * r
        units = units_mod(m)
        pth_powers = frozenset(pow(x, p, r) for x in range(1, r))
        H_K = frozenset(k for k in units if k % p == 1)
        H_F = frozenset(k for k in units if k % r in pth_powers)
        source = "gauss"
        if sigma is None:
            sigma = next(s for s in range(2, r) if s not in pth_powers)
        if sigma % r == 0 or sigma % r in pth_powers:
            raise TowerError(f"zeta_{r} -> zeta_{r}^{sigma} does not generate Gal(L/K)")
        sigma_k = crt([1, sigma % r], [p, r])

    H_L = H_F & H_K
    tau_k = next((k for k in range(2, m) if k in H_F and k % p == e % p), None)
    if tau_k is None:
        raise TowerError("no automorphism fixes F and sends zeta_p to zeta_p^e")

    tower = TowerContext(
        p=p, source=source, r=r, m_r=m_r, m=m, delta=delta,
        sigma_bar=Automorphism(m, sigma_k), tau_bar=Automorphism(m, tau_k), e=e,
        H_F=H_F, H_K=H_K, H_L=H_L, sigma_root=sigma,
    )
    _validate(tower)
    return tower


def _validate(t: TowerContext) -> None:
    p = t.p
    if t.degree("L") != p * (p - 1) or t.degree("F") != p or t.degree("K") != p - 1:
        raise TowerError("subgroup indices do not give [F:Q]=p, [K:Q]=p-1")
    if _order_mod_subgroup(t.sigma_bar.k, t.m, t.H_L) != p or t.sigma_bar.k % p != 1:
        raise TowerError("sigma_bar does not generate Gal(L/K)")
    if _order_mod_subgroup(t.tau_bar.k, t.m, t.H_L) != p - 1 or t.tau_bar.k not in t.H_F:
        raise TowerError("tau_bar does not generate Gal(L/F)")
    if min_poly_over_Q(t.delta).degree != p:
        raise TowerError("delta does not generate a degree-p field")
