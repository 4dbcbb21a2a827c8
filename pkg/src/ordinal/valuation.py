"""Valuations and bi-valuations on lattices, plus their constraint audits.

The audits check the identities that any quantification compatible with the
lattice structure has to satisfy:

  sum rule            v(x v y) + v(x ^ y) = v(x) + v(y)
  product rule        v((x, y)) = v(x) * v(y)            (lattice products)
  chain rule          w(x|z) = w(x|y) * w(y|z)           (x <= y <= z)
  diamond lemma       w(y|x) = w(x ^ y | x)
  context product     w(y ^ z | x) = w(z | x ^ y) * w(y | x)
  per-context sum     w(x v y|t) + w(x ^ y|t) = w(x|t) + w(y|t)

All audits are pure and run in whatever arithmetic the values carry:
floats with an explicit tolerance, or Fractions with tolerance 0 for exact
fixtures. Contexts with zero measure are skipped and counted, never errors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .errors import (LatticeMismatch, NegativeAtomValue, UnknownElement,
                     ZeroMeasureContext)
from .poset import Poset, pair_id, parse_subset_id
from .report import RuleReport, RuleViolation, build_report

Value = Union[int, float, Fraction]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Valuation:
    """Total real-valued assignment on the elements of one poset."""

    poset: Poset
    values: Mapping[str, Value]

    def __post_init__(self):
        missing = [e for e in self.poset.elements if e not in self.values]
        extra = [e for e in self.values if e not in self.poset]
        if missing or extra:
            raise ValueError(f"valuation is not total: missing={missing[:3]} "
                             f"extra={extra[:3]}")
        object.__setattr__(self, "values", dict(self.values))

    def __call__(self, element: str) -> Value:
        if element not in self.poset:
            raise UnknownElement(f"element {element!r} is not in the poset")
        return self.values[element]

    def replace(self, element: str, value: Value) -> "Valuation":
        if element not in self.poset:
            raise UnknownElement(f"element {element!r} is not in the poset")
        updated = dict(self.values)
        updated[element] = value
        return Valuation(self.poset, updated)


def derive_valuation_from_atoms(lat: Poset, atom_values: Mapping[str, Value]) -> Valuation:
    """v(S) = sum of atom weights in S, on a boolean lattice.

    Disjoint joins are exactly additive by construction, so the sum rule
    holds with zero residual and v(bottom) = 0.
    """
    for atom, weight in atom_values.items():
        if weight < 0:
            raise NegativeAtomValue(f"atom {atom!r} has negative weight {weight}")
    atoms = frozenset(atom_values)
    if len(lat) != 2 ** len(atoms):
        raise ValueError("element count does not match a boolean lattice "
                         "over the given atoms")
    values = {}
    for element in lat.elements:
        members = parse_subset_id(element)
        if not members <= atoms:
            raise ValueError(f"element {element!r} uses atoms outside the weight map")
        values[element] = sum(atom_values[a] for a in members)
    return Valuation(lat, values)


def check_sum_rule(v: Valuation, tol: Value = DEFAULT_TOL) -> RuleReport:
    """Audit v(x v y) + v(x ^ y) = v(x) + v(y) over all unordered pairs."""
    p = v.poset
    p._require_lattice()
    violations = []
    checked = 0
    n = len(p.elements)
    for i in range(n):
        for j in range(i + 1, n):
            x, y = p.elements[i], p.elements[j]
            checked += 1
            lhs = v(p.join(x, y)) + v(p.meet(x, y))
            rhs = v(x) + v(y)
            residual = abs(lhs - rhs)
            if residual > tol:
                violations.append(RuleViolation((x, y), lhs, rhs, residual))
    return build_report("sum", checked, tol, violations)


def check_monotone(v: Valuation, tol: Value = 0) -> RuleReport:
    """Audit x <= y  =>  v(x) <= v(y)."""
    p = v.poset
    violations = []
    checked = 0
    for x in p.elements:
        for y in p.elements:
            if x != y and p.leq(x, y):
                checked += 1
                gap = v(x) - v(y)
                if gap > tol:
                    violations.append(RuleViolation((x, y), v(x), v(y), gap))
    return build_report("monotone", checked, tol, violations)


def check_product_rule_for_lattice_product(vP: Valuation, vQ: Valuation,
                                           vPQ: Valuation,
                                           tol: Value = DEFAULT_TOL) -> RuleReport:
    """Audit v((x, y)) = v(x) * v(y) on the product of vP's and vQ's lattices."""
    if len(vPQ.poset) != len(vP.poset) * len(vQ.poset):
        raise LatticeMismatch("product valuation size does not match |P| * |Q|")
    violations = []
    checked = 0
    for x in vP.poset.elements:
        for y in vQ.poset.elements:
            element = pair_id(x, y)
            if element not in vPQ.poset:
                raise LatticeMismatch(f"product lattice lacks element {element!r}")
            checked += 1
            lhs = vPQ(element)
            rhs = vP(x) * vQ(y)
            residual = abs(lhs - rhs)
            if residual > tol:
                violations.append(RuleViolation((x, y), lhs, rhs, residual))
    return build_report("product", checked, tol, violations)


@dataclass(frozen=True)
class BiValuation:
    """w(x | y): the degree to which context y includes x.

    Stored as a materialized table keyed (x, context). Entries may be absent
    (zero-measure or undefined contexts); audits skip and count those.
    """

    poset: Poset
    table: Mapping[tuple[str, str], Value] = field(repr=False)

    def __post_init__(self):
        for (x, y) in self.table:
            if x not in self.poset or y not in self.poset:
                raise UnknownElement(f"bi-valuation key ({x!r}, {y!r}) "
                                     "is not in the poset")
        object.__setattr__(self, "table", dict(self.table))

    def get(self, x: str, context: str):
        """Value of w(x | context), or None where undefined."""
        return self.table.get((x, context))

    def value(self, x: str, context: str) -> Value:
        found = self.get(x, context)
        if found is None:
            raise ZeroMeasureContext(f"w({x!r} | {context!r}) is undefined")
        return found

    def contexts(self) -> list[str]:
        return sorted({y for (_, y) in self.table})

    def with_value(self, x: str, context: str, value: Value) -> "BiValuation":
        updated = dict(self.table)
        updated[(x, context)] = value
        return BiValuation(self.poset, updated)


def bivaluation_from_valuation(v: Valuation, tol: Value = DEFAULT_TOL,
                               validate: bool = True) -> BiValuation:
    """w(x | y) = v(x ^ y) / v(y), defined wherever v(y) > 0."""
    if validate:
        audit = check_sum_rule(v, tol)
        if not audit.passed:
            raise ValueError(f"valuation fails the sum rule on "
                             f"{len(audit.violations)} pairs; cannot condition on it")
    p = v.poset
    p._require_lattice()
    table = {}
    for y in p.elements:
        vy = v(y)
        if vy <= 0:
            continue
        for x in p.elements:
            table[(x, y)] = v(p.meet(x, y)) / vy
    return BiValuation(p, table)


def check_chain_rule(w: BiValuation, tol: Value = DEFAULT_TOL) -> RuleReport:
    """Audit w(x|z) = w(x|y) * w(y|z) over all chains x <= y <= z."""
    p = w.poset
    violations = []
    checked = skipped = 0
    for z in p.elements:
        below_z = p.lower_bound([z])
        for y in below_z:
            for x in p.lower_bound([y]):
                wxz, wxy, wyz = w.get(x, z), w.get(x, y), w.get(y, z)
                if wxz is None or wxy is None or wyz is None:
                    skipped += 1
                    continue
                checked += 1
                rhs = wxy * wyz
                residual = abs(wxz - rhs)
                if residual > tol:
                    violations.append(RuleViolation((x, y, z), wxz, rhs, residual))
    return build_report("chain", checked, tol, violations, skipped)


def check_diamond_lemma(w: BiValuation, tol: Value = DEFAULT_TOL) -> RuleReport:
    """Audit w(y|x) = w(x ^ y | x) over all pairs; instances are (x, y)."""
    p = w.poset
    p._require_lattice()
    violations = []
    checked = skipped = 0
    for x in p.elements:
        for y in p.elements:
            lhs = w.get(y, x)
            rhs = w.get(p.meet(x, y), x)
            if lhs is None or rhs is None:
                skipped += 1
                continue
            checked += 1
            residual = abs(lhs - rhs)
            if residual > tol:
                violations.append(RuleViolation((x, y), lhs, rhs, residual))
    return build_report("diamond", checked, tol, violations, skipped)


def check_context_product_rule(w: BiValuation, tol: Value = DEFAULT_TOL) -> RuleReport:
    """Audit w(y ^ z | x) = w(z | x ^ y) * w(y | x) over all ordered triples."""
    p = w.poset
    p._require_lattice()
    violations = []
    checked = skipped = 0
    for x in p.elements:
        for y in p.elements:
            xy = p.meet(x, y)
            wyx = w.get(y, x)
            for z in p.elements:
                lhs = w.get(p.meet(y, z), x)
                wz = w.get(z, xy)
                if lhs is None or wz is None or wyx is None:
                    skipped += 1
                    continue
                checked += 1
                rhs = wz * wyx
                residual = abs(lhs - rhs)
                if residual > tol:
                    violations.append(RuleViolation((x, y, z), lhs, rhs, residual))
    return build_report("context", checked, tol, violations, skipped)


def check_bivaluation_sum_rule(w: BiValuation, tol: Value = DEFAULT_TOL) -> RuleReport:
    """Audit the sum rule inside every available context t; instances (t, x, y)."""
    p = w.poset
    p._require_lattice()
    violations = []
    checked = skipped = 0
    n = len(p.elements)
    for t in w.contexts():
        for i in range(n):
            for j in range(i + 1, n):
                x, y = p.elements[i], p.elements[j]
                parts = (w.get(p.join(x, y), t), w.get(p.meet(x, y), t),
                         w.get(x, t), w.get(y, t))
                if any(part is None for part in parts):
                    skipped += 1
                    continue
                checked += 1
                lhs = parts[0] + parts[1]
                rhs = parts[2] + parts[3]
                residual = abs(lhs - rhs)
                if residual > tol:
                    violations.append(RuleViolation((t, x, y), lhs, rhs, residual))
    return build_report("bisum", checked, tol, violations, skipped)
