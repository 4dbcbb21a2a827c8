"""File formats: poset documents, valuations, distributions, scenes, DOT."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import OrdinalError
from .information import AtomDistribution
from .poset import Poset, build_poset
from .spacetime import Event, ObserverChain
from .valuation import Valuation, derive_valuation_from_atoms


def dumps_canonical(payload) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load_json(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def load_poset(path) -> Poset:
    """Read ``{"elements": [...], "covers": [[lower, upper], ...]}``."""
    doc = _load_json(path)
    try:
        elements = doc["elements"]
        covers = [tuple(c) for c in doc["covers"]]
    except (KeyError, TypeError) as exc:
        raise OrdinalError(f"malformed poset document {path}: {exc}") from exc
    return build_poset(elements, covers)


def poset_to_dot(p: Poset) -> str:
    """One node per element, one directed edge per cover, lower -> upper."""
    def quote(s: str) -> str:
        return '"' + s.replace('"', r'\"') + '"'

    lines = ["digraph poset {", "  rankdir=BT;"]
    lines += [f"  {quote(e)};" for e in p.elements]
    lines += [f"  {quote(a)} -> {quote(b)};" for a, b in sorted(p.covers)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_atom_values(path) -> dict:
    """A plain ``{"atom": weight}`` mapping."""
    doc = _load_json(path)
    if not isinstance(doc, dict) or not doc:
        raise OrdinalError(f"{path} does not hold an atom-weight mapping")
    return {str(k): v for k, v in doc.items()}


def load_valuation(path) -> Valuation:
    """Read ``{"poset": path, "mode": "atoms"|"total", "values": {...}}``.

    The poset path is resolved relative to the valuation document.
    """
    doc = _load_json(path)
    try:
        poset_path = Path(path).parent / doc["poset"]
        mode = doc.get("mode", "atoms")
        values = doc["values"]
    except (KeyError, TypeError) as exc:
        raise OrdinalError(f"malformed valuation document {path}: {exc}") from exc
    poset = load_poset(poset_path)
    if mode == "atoms":
        return derive_valuation_from_atoms(poset, values)
    if mode == "total":
        return Valuation(poset, values)
    raise OrdinalError(f"unknown valuation mode {mode!r}")


def load_distribution(path) -> AtomDistribution:
    """Read ``{"probs": {"a": 0.5, ...}}``."""
    doc = _load_json(path)
    if "probs" not in doc:
        raise OrdinalError(f"{path} lacks a 'probs' mapping")
    return AtomDistribution(doc["probs"])


def parse_rational(value) -> Fraction:
    """Accept ints and strings like ``"3"`` or ``"-1/2"``."""
    if isinstance(value, bool) or isinstance(value, float):
        raise OrdinalError(f"rationals must be integers or strings, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise OrdinalError(f"bad rational {value!r}: {exc}") from exc


@dataclass(frozen=True)
class Scene:
    """Named events and chains, plus optional named frames (chain pairs)."""

    events: dict[str, Event]
    chains: dict[str, ObserverChain]
    frames: dict[str, tuple[str, str]] = field(default_factory=dict)

    def event(self, name: str) -> Event:
        if name not in self.events:
            raise OrdinalError(f"scene has no event {name!r}")
        return self.events[name]

    def chain(self, name: str) -> ObserverChain:
        if name not in self.chains:
            raise OrdinalError(f"scene has no chain {name!r}")
        return self.chains[name]

    def frame(self, name: str) -> tuple[ObserverChain, ObserverChain]:
        if name not in self.frames:
            raise OrdinalError(f"scene has no frame {name!r}")
        a, b = self.frames[name]
        return self.chain(a), self.chain(b)


def load_scene(path) -> Scene:
    """Read a scene document; all rationals are strings like ``"3/4"``."""
    doc = _load_json(path)
    events = {}
    for entry in doc.get("events", []):
        events[str(entry["id"])] = Event(parse_rational(entry["t"]),
                                         parse_rational(entry["x"]))
    chains = {}
    for entry in doc.get("chains", []):
        origin = entry.get("origin", {"t": 0, "x": 0})
        lo, hi = entry.get("range", [0, 100])
        chains[str(entry["id"])] = ObserverChain(
            origin=Event(parse_rational(origin["t"]), parse_rational(origin["x"])),
            k=parse_rational(entry.get("k", 1)),
            tick=parse_rational(entry.get("tick", 1)),
            index_range=(int(lo), int(hi)),
            label=str(entry["id"]))
    frames = {}
    for entry in doc.get("frames", []):
        a, b = entry["chains"]
        frames[str(entry["id"])] = (str(a), str(b))
    missing = [f for f, (a, b) in frames.items()
               if a not in chains or b not in chains]
    if missing:
        raise OrdinalError(f"frames reference unknown chains: {missing}")
    return Scene(events=events, chains=chains, frames=frames)


def scene_to_dict(scene: Scene) -> dict:
    return {
        "events": [{"id": name, "t": str(e.t), "x": str(e.x)}
                   for name, e in sorted(scene.events.items())],
        "chains": [{"id": name, "k": str(c.k), "tick": str(c.tick),
                    "origin": {"t": str(c.origin.t), "x": str(c.origin.x)},
                    "range": list(c.index_range)}
                   for name, c in sorted(scene.chains.items())],
        "frames": [{"id": name, "chains": list(pair)}
                   for name, pair in sorted(scene.frames.items())],
    }
