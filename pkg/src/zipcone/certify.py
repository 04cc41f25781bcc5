"""The envelope certificate behind the vanishing statement.

The combinatorial core is a cone inclusion: the weight cone of the top
stratum, propagated up the descent path by adding the step weights, stays
inside the orbit-inequality cone.  The certificate makes this
machine-checkable: the envelope cone is generated by the base generators
{-e_i, +/-e_b} together with every step weight, and each generator is
checked exactly against the binding (worst-subset) orbit functionals and
the prefix functionals; the prefix functionals are in turn
Farkas-certified against the base cone's inequality form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .cones import (
    IntRow,
    farkas_implies,
    orbit_subset_functional,
    pha_wmax_cone,
    prefix_functional,
    worst_subset,
    frac_str,
)
from .hasse import PathStep, compare_step_weights, descent_path, ha_closed_form
from .weylroot import Character, Root, WeylElem, long_orbit, sum_orbit


@dataclass(frozen=True)
class EnvelopeCheck:
    """One ledger line of the certificate.

    Evaluation lines pin a generator against a functional with the exact
    value; implication lines carry the Farkas multipliers expressing the
    target functional over the base system.
    """

    label: str
    functional: IntRow
    generator: Optional[Character] = None
    value: Optional[Fraction] = None
    multipliers: Optional[tuple[Fraction, ...]] = None
    witness: Optional[tuple[Fraction, ...]] = None
    ok: bool = False

    def to_json_dict(self) -> dict:
        out: dict = {
            "label": self.label,
            "functional": list(self.functional),
            "generator": str(self.generator) if self.generator is not None else None,
            "ok": self.ok,
        }
        if self.value is not None:
            out["value"] = frac_str(self.value)
        if self.multipliers is not None:
            out["multipliers"] = [frac_str(m) for m in self.multipliers]
        if self.witness is not None:
            out["witness"] = [frac_str(x) for x in self.witness]
        return out


@dataclass(frozen=True)
class Certificate:
    """A verification run: path, envelope generators, per-check ledger, verdict."""

    n: int
    p: int
    path: tuple[PathStep, ...]
    base_generators: tuple[Character, ...]
    ha_weights: tuple[Character, ...]
    checks: tuple[EnvelopeCheck, ...]
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "path": [
                {
                    "d": s.d,
                    "i": s.i,
                    "window": str(s.w),
                    "beta": str(s.beta),
                    "chi": str(s.chi),
                    "ha": str(s.ha),
                    "ha_closed_form": str(ha_closed_form(self.n, self.p, s.d, s.i)),
                    "first_term_relation": compare_step_weights(
                        self.n, self.p, s.d, s.i, s.ha
                    ),
                }
                for s in self.path
            ],
            "base_generators": [str(g) for g in self.base_generators],
            "ha_weights": [str(h) for h in self.ha_weights],
            "checks": [c.to_json_dict() for c in self.checks],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Certificate":
        n = int(data["n"])
        p = int(data["p"])
        path = tuple(
            PathStep(
                d=int(s["d"]),
                i=int(s["i"]),
                w=WeylElem.parse(s["window"]),
                beta=Root.parse(s["beta"]),
                chi=Character.parse(s["chi"]),
                ha=Character.parse(s["ha"]),
            )
            for s in data["path"]
        )
        checks = []
        for c in data["checks"]:
            checks.append(
                EnvelopeCheck(
                    label=c["label"],
                    functional=tuple(int(x) for x in c["functional"]),
                    generator=Character.parse(c["generator"])
                    if c.get("generator")
                    else None,
                    value=Fraction(c["value"]) if "value" in c else None,
                    multipliers=tuple(Fraction(m) for m in c["multipliers"])
                    if "multipliers" in c
                    else None,
                    witness=tuple(Fraction(x) for x in c["witness"])
                    if "witness" in c
                    else None,
                    ok=bool(c["ok"]),
                )
            )
        return cls(
            n=n,
            p=p,
            path=path,
            base_generators=tuple(Character.parse(g) for g in data["base_generators"]),
            ha_weights=tuple(Character.parse(h) for h in data["ha_weights"]),
            checks=tuple(checks),
            verdict=data["verdict"],
        )


def _char_from_vector(vec: IntRow) -> Character:
    return Character(tuple(vec[:-1]), vec[-1])


def envelope_certificate(n: int, p: int) -> Certificate:
    """Build and verify the envelope inclusion for the given rank and p.

    Generators: the base cone's generators plus the computed step weights.
    For each generator, each orbit contributes its binding subset functional
    (the subset of negative pairings; every other subset functional is
    dominated by it), and every prefix functional is evaluated as well.
    The prefix functionals are also written as nonnegative combinations of
    the base inequalities {a_i <= 0}, with self-verifying multipliers.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    base_cone = pha_wmax_cone(n)
    base_gens = tuple(_char_from_vector(g) for g in base_cone.vform)
    steps = tuple(descent_path(n, p))
    ha_weights = tuple(s.ha for s in steps)

    checks: list[EnvelopeCheck] = []
    orbits = [("long", long_orbit(n)), ("sum", sum_orbit(n))]
    for gen in base_gens + ha_weights:
        vec = gen.vector()
        for orbit_name, orbit in orbits:
            if not orbit:
                continue
            subset = worst_subset(orbit, gen, n)
            row = orbit_subset_functional(orbit, subset, n, p)
            value = Fraction(linalg.dot(row, vec))
            checks.append(
                EnvelopeCheck(
                    label=f"orbit-{orbit_name}-worst",
                    functional=row,
                    generator=gen,
                    value=value,
                    ok=value <= 0,
                )
            )
        for j in range(1, n + 1):
            row = prefix_functional(n, p, j)
            value = Fraction(linalg.dot(row, vec))
            checks.append(
                EnvelopeCheck(
                    label=f"prefix-{j}",
                    functional=row,
                    generator=gen,
                    value=value,
                    ok=value <= 0,
                )
            )

    for j in range(1, n + 1):
        row = prefix_functional(n, p, j)
        cert = farkas_implies(row, base_cone)
        checks.append(
            EnvelopeCheck(
                label=f"prefix-{j}-from-base",
                functional=row,
                multipliers=cert.multipliers,
                witness=cert.witness,
                ok=cert.implied,
            )
        )

    verdict = "PASS" if all(c.ok for c in checks) else "FAIL"
    return Certificate(
        n=n,
        p=p,
        path=steps,
        base_generators=base_gens,
        ha_weights=ha_weights,
        checks=tuple(checks),
        verdict=verdict,
    )
