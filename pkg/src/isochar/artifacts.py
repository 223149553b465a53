"""Deterministic JSON artifacts for bigraded characters."""

from __future__ import annotations

import json
from fractions import Fraction

from .bichar import CONVENTION, BigradedCharacter
from .charalg import VirtualCharacter, weyl_dim
from .rootsys import build_root_system
from .weightlat import RationalPoint, Weight


class ArtifactError(ValueError):
    pass


def frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def weight_json(lam: Weight) -> list:
    return [frac_str(c) for c in lam.coords]


def character_json(ch: VirtualCharacter) -> list:
    return [{"weight": weight_json(mu), "mult": c} for mu, c in ch.items()]


def bigraded_to_dict(bc: BigradedCharacter) -> dict:
    coeffs = []
    for i, j in bc.bidegrees():
        ch = bc.coeffs[(i, j)]
        coeffs.append({
            "i": i,
            "j": j,
            "irreps": character_json(ch),
            "dim": sum(c * weyl_dim(bc.rs, mu) for mu, c in ch.terms.items()),
        })
    return {"metadata": bc.metadata, "coeffs": coeffs}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def bigraded_from_dict(data: dict, check: bool = False) -> BigradedCharacter:
    """Rebuild a BigradedCharacter; ``check`` enforces dominance of every key."""
    try:
        meta = data["metadata"]
        if meta.get("convention") != CONVENTION:
            raise ArtifactError(f"convention tag mismatch: {meta.get('convention')!r}")
        rs = build_root_system(meta["family"], int(meta["rank"]))
        I, J = int(meta["I"]), int(meta["J"])
        coeffs = {}
        for entry in data["coeffs"]:
            terms = {}
            for irr in entry["irreps"]:
                mu = Weight(Fraction(c) for c in irr["weight"])
                if mu.dim != rs.dim:
                    raise ArtifactError(f"weight {irr['weight']} has wrong dimension")
                terms[mu] = terms.get(mu, 0) + int(irr["mult"])
            coeffs[(int(entry["i"]), int(entry["j"]))] = VirtualCharacter(rs, terms, check=check)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ArtifactError):
            raise
        raise ArtifactError(f"malformed artifact: {exc}") from exc
    expected = {(i, j) for i in range(I + 1) for j in range(J + 1)}
    if set(coeffs) != expected:
        raise ArtifactError("artifact does not cover its declared box")
    return BigradedCharacter(rs, I, J, dict(sorted(coeffs.items())))


def parse_point(text: str) -> RationalPoint:
    return RationalPoint(Fraction(t.strip()) for t in text.split(","))


def point_json(z: RationalPoint) -> list:
    return [frac_str(v) for v in z.values]
