"""On-disk cache of completed reduction systems.

Files are JSON with a format-version header and a digest of the rule
payload; anything that fails to validate is ignored and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .ncpoly import MonomialOrder, NcPoly
from .rewrite import ReductionSystem, RewriteRule

CACHE_FORMAT = "fkdual-reduction-system"
CACHE_VERSION = 1
ENV_VAR = "FKDUAL_CACHE_DIR"


def cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "fkdual"


def cache_key(presentation_digest: str, order: MonomialOrder, degree: int) -> str:
    labels = ",".join(order.gens.labels[g] for g in sorted(range(len(order.gens)), key=lambda g: order.rank[g]))
    raw = f"{presentation_digest}|{labels}|{degree}"
    return hashlib.sha256(raw.encode()).hexdigest()


def _rules_payload(sys: ReductionSystem) -> list:
    out = []
    for r in sys.rules:
        terms = [[list(w), str(c)] for w, c in r.rhs.sorted_terms(sys.order)]
        out.append([list(r.lhs), terms])
    return out


def _digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def save(sys: ReductionSystem, key: str, directory: Optional[Path] = None) -> Path:
    directory = Path(directory) if directory else cache_dir()
    directory.mkdir(parents=True, exist_ok=True)
    payload = _rules_payload(sys)
    doc = {
        "format": CACHE_FORMAT,
        "format_version": CACHE_VERSION,
        "key": key,
        "labels": list(sys.gens.labels),
        "degrees": list(sys.gens.degrees),
        "rank": list(sys.order.rank),
        "complete_to": sys.complete_to,
        "terminated": sys.terminated,
        "homogeneous": sys.homogeneous,
        "rules": payload,
        "rules_sha256": _digest(payload),
    }
    path = directory / f"{key}.json"
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, sort_keys=True))
    os.replace(tmp, path)
    return path


def load(key: str, order: MonomialOrder, directory: Optional[Path] = None) -> Optional[ReductionSystem]:
    """The cached system for ``key``, or ``None`` if absent or invalid."""
    directory = Path(directory) if directory else cache_dir()
    path = directory / f"{key}.json"
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if doc.get("format") != CACHE_FORMAT or doc.get("format_version") != CACHE_VERSION:
        return None
    if doc.get("key") != key or _digest(doc.get("rules")) != doc.get("rules_sha256"):
        return None
    gens = order.gens
    if doc["labels"] != list(gens.labels) or doc["rank"] != list(order.rank):
        return None
    rules = []
    for lhs, terms in doc["rules"]:
        rhs = NcPoly(gens, {tuple(w): Fraction(c) for w, c in terms})
        rules.append(RewriteRule(tuple(lhs), rhs))
    return ReductionSystem(
        gens=gens,
        order=order,
        rules=tuple(rules),
        complete_to=doc["complete_to"],
        terminated=doc["terminated"],
        homogeneous=doc["homogeneous"],
    )
