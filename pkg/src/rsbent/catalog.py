"""Catalog records: JSON summaries of constructed functions, deduplicated
up to cyclic rotation of the variables."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field

from .boolfn import BooleanFunction, degree, is_rotation_symmetric, rotate
from .spectral import is_bent

FAMILIES = ("theorem1", "theorem2", "su_tang", "carlet", "quadratic", "mm", "external")

__all__ = ["FAMILIES", "CatalogError", "CatalogRecord", "append_records", "canonical_key", "make_record"]


class CatalogError(ValueError):
    pass


def canonical_key(f: BooleanFunction) -> str:
    """Least truth-table hex over all ``n`` cyclic rotations of ``f``."""
    # equal-length lowercase hex compares like the integers it encodes
    return min(rotate(f, s).to_hex() for s in range(f.n))


@dataclass
class CatalogRecord:
    family: str
    params: dict
    n: int
    tt_hex: str
    degree: int
    bent: bool
    rotsym: bool
    canonical_key: str = field(default="")

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> CatalogRecord:
        try:
            rec = cls(
                family=data["family"],
                params=dict(data.get("params") or {}),
                n=int(data["n"]),
                tt_hex=str(data["tt_hex"]),
                degree=int(data["degree"]),
                bent=bool(data["bent"]),
                rotsym=bool(data["rotsym"]),
                canonical_key=str(data.get("canonical_key") or ""),
            )
        except (KeyError, TypeError) as exc:
            raise CatalogError(f"incomplete record: {exc}") from None
        if rec.family not in FAMILIES:
            raise CatalogError(f"unknown family {rec.family!r}")
        f = BooleanFunction.from_hex(rec.tt_hex, rec.n)
        if not rec.canonical_key:
            rec.canonical_key = canonical_key(f)
        return rec


def make_record(family: str, params: dict, f: BooleanFunction, cap: int | None = None) -> CatalogRecord:
    return CatalogRecord(
        family=family,
        params=params,
        n=f.n,
        tt_hex=f.to_hex(),
        degree=degree(f),
        bent=is_bent(f, cap) if f.n % 2 == 0 else False,
        rotsym=is_rotation_symmetric(f),
        canonical_key=canonical_key(f),
    )


def _read_keys(path) -> set[str]:
    keys: set[str] = set()
    if not os.path.exists(path):
        return keys
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = CatalogRecord.from_dict(json.loads(line))
            except (ValueError, AttributeError) as exc:
                raise CatalogError(f"{path}:{lineno}: malformed catalog line ({exc})") from None
            keys.add(rec.canonical_key)
    return keys


def append_records(path, records) -> dict:
    """Append ``records`` whose canonical key is not yet in the catalog.

    The existing file is validated in full before anything is written;
    a malformed line aborts the whole batch.
    """
    seen = _read_keys(path)
    fresh = []
    skipped = 0
    for rec in records:
        if rec.canonical_key in seen:
            skipped += 1
            continue
        seen.add(rec.canonical_key)
        fresh.append(rec)
    if fresh:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write("".join(rec.to_json() + "\n" for rec in fresh))
    return {"added": len(fresh), "skipped": skipped}
