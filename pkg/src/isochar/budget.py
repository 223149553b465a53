"""Resource guards.

Defaults can be overridden with the ``ISOCHAR_BUDGET`` environment variable,
either a bare integer (the work budget) or comma-separated ``key=value``
pairs using the keys of :data:`DEFAULTS`, e.g. ``weyl=200000,pairs=5000``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import BudgetExceeded

DEFAULTS = {
    "weyl": 10**5,  # max |W| enumerated
    "work": 10**9,  # estimated term operations for one character run
    "pairs": 10**5,  # Buchberger pair reductions
    "monomials": 10**7,  # monomials enumerated by the Hilbert staircase count
}


@dataclass(frozen=True)
class Budget:
    weyl: int = DEFAULTS["weyl"]
    work: int = DEFAULTS["work"]
    pairs: int = DEFAULTS["pairs"]
    monomials: int = DEFAULTS["monomials"]

    def check(self, key: str, value: int) -> None:
        limit = getattr(self, key)
        if value > limit:
            raise BudgetExceeded(f"{key} budget exceeded: {value} > {limit}")

    def with_overrides(self, **kw) -> "Budget":
        return replace(self, **{k: int(v) for k, v in kw.items() if v is not None})


def parse_budget(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    text = text.strip()
    if text.isdigit():
        return {"work": int(text)}
    out = {}
    for part in text.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in DEFAULTS or not val.strip().isdigit():
            raise ValueError(f"bad budget entry {part!r}")
        out[key] = int(val)
    return out


def default_budget() -> Budget:
    return Budget().with_overrides(**parse_budget(os.environ.get("ISOCHAR_BUDGET")))
