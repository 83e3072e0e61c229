"""Character tables of small groups: kernels, codegrees, normal subgroups.

Tables are JSON documents::

    {"name": "S3", "order": 6, "class_sizes": [1, 3, 2],
     "characters": [{"label": "chi3", "degree": 2, "values": [2, 0, -1]}, ...],
     "solvable": true}

Class 0 is the identity class. A character may give integer ``values`` or,
when its values are irrational, an explicit list of ``kernel_classes``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from codegree import catalog
from codegree.criterion import CharEntry, CriterionReport, constant_a, criterion_holds
from codegree.exact import RationalLike, factorize, rat


class TableError(ValueError):
    """Malformed or internally inconsistent character-table data."""


@dataclass(frozen=True)
class CharacterData:
    label: str
    degree: int
    values: tuple[int, ...] | None = None
    kernel_classes: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CharacterTable:
    name: str
    order: int
    class_sizes: tuple[int, ...]
    characters: tuple[CharacterData, ...]
    solvable_flag: bool | None = None

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)


_TOP_KEYS = {"name", "order", "class_sizes", "characters", "solvable"}
_CHAR_KEYS = {"label", "degree", "values", "kernel_classes"}


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_table(text: str | bytes) -> CharacterTable:
    """Parse and validate a table; every structural invariant is checked here."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise TableError(f"input is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise TableError("top level must be an object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise TableError(f"unknown keys {sorted(unknown)}")
    for key in ("name", "order", "class_sizes", "characters"):
        if key not in doc:
            raise TableError(f"missing key {key!r}")
    name, order, sizes = doc["name"], doc["order"], doc["class_sizes"]
    if not isinstance(name, str):
        raise TableError("name must be a string")
    if not _is_int(order) or order < 1:
        raise TableError("order must be a positive integer")
    if not isinstance(sizes, list) or not sizes or not all(_is_int(s) and s > 0 for s in sizes):
        raise TableError("class_sizes must be a nonempty list of positive integers")
    if sizes[0] != 1:
        raise TableError("class_sizes: identity class must have size 1")
    if sum(sizes) != order:
        raise TableError(f"class_sizes: sizes sum to {sum(sizes)}, not the order {order}")
    solvable = doc.get("solvable")
    if solvable is not None and not isinstance(solvable, bool):
        raise TableError("solvable must be a boolean")

    r = len(sizes)
    chars = doc["characters"]
    if not isinstance(chars, list):
        raise TableError("characters must be a list")
    if len(chars) != r:
        raise TableError(f"characters: {len(chars)} characters for {r} classes")
    parsed = []
    labels = set()
    for i, c in enumerate(chars):
        if not isinstance(c, dict):
            raise TableError(f"character {i}: must be an object")
        unknown = set(c) - _CHAR_KEYS
        if unknown:
            raise TableError(f"character {i}: unknown keys {sorted(unknown)}")
        label, degree = c.get("label"), c.get("degree")
        if not isinstance(label, str):
            raise TableError(f"character {i}: label must be a string")
        if label in labels:
            raise TableError(f"duplicate character label {label!r}")
        labels.add(label)
        if not _is_int(degree) or degree < 1:
            raise TableError(f"{label}: degree must be a positive integer")
        values = c.get("values")
        kernel = c.get("kernel_classes")
        if values is None and kernel is None:
            raise TableError(f"{label}: needs values or kernel_classes")
        if values is not None:
            if not isinstance(values, list) or len(values) != r or not all(_is_int(v) for v in values):
                raise TableError(f"{label}: values must be {r} integers")
            if values[0] != degree:
                raise TableError(f"{label}: value at the identity is {values[0]}, not the degree {degree}")
            values = tuple(values)
        if kernel is not None:
            if not isinstance(kernel, list) or not all(_is_int(k) and 0 <= k < r for k in kernel):
                raise TableError(f"{label}: kernel_classes must be class indices below {r}")
            if len(set(kernel)) != len(kernel):
                raise TableError(f"{label}: repeated kernel class")
            if 0 not in kernel:
                raise TableError(f"{label}: kernel_classes must contain the identity class 0")
            kernel = tuple(sorted(kernel))
        parsed.append(CharacterData(label, degree, values, kernel))

    if sum(c.degree**2 for c in parsed) != order:
        raise TableError("sum of squared degrees differs from the order")
    principal = [c for c in parsed if c.degree == 1 and _is_principal(c, r)]
    if len(principal) != 1:
        raise TableError(f"expected exactly one principal character, found {len(principal)}")
    table = CharacterTable(name, order, tuple(sizes), tuple(parsed), solvable)
    for c in parsed:
        if c.values is not None and c.kernel_classes is not None:
            if tuple(sorted(_kernel_from_values(c))) != c.kernel_classes:
                raise TableError(f"{c.label}: kernel_classes disagree with values")
        ko = kernel_order(kernel_classes(c, table), table)
        if order % ko:
            raise TableError(f"{c.label}: kernel order {ko} does not divide {order}")
    return table


def _kernel_from_values(c: CharacterData) -> set[int]:
    return {i for i, v in enumerate(c.values) if v == c.degree}


def _is_principal(c: CharacterData, r: int) -> bool:
    if c.values is not None:
        return all(v == 1 for v in c.values)
    return len(c.kernel_classes) == r


def load_table(path: str | Path) -> CharacterTable:
    return parse_table(Path(path).read_bytes())


def bundled_tables() -> dict[str, CharacterTable]:
    folder = catalog.data_dir() / "tables"
    return {p.stem: load_table(p) for p in sorted(folder.glob("*.json"))}


def kernel_classes(c: CharacterData, t: CharacterTable) -> frozenset[int]:
    """Classes where ``chi(g) == chi(1)``; falls back to the listed kernel."""
    if c.values is not None:
        return frozenset(_kernel_from_values(c))
    return frozenset(c.kernel_classes)


def kernel_order(ks: Iterable[int], t: CharacterTable) -> int:
    ks = set(ks)
    if 0 not in ks:
        raise TableError("a kernel must contain the identity class")
    total = sum(t.class_sizes[i] for i in ks)
    if t.order % total:
        raise TableError(f"class set of size {total} cannot be a subgroup of order {t.order}")
    return total


@dataclass(frozen=True)
class SpectrumEntry:
    label: str
    degree: int
    codegree: int
    kernel_index: int


def codegree_spectrum(t: CharacterTable) -> list[SpectrumEntry]:
    out = []
    for c in t.characters:
        index = t.order // kernel_order(kernel_classes(c, t), t)
        cod, rem = divmod(index, c.degree)
        if rem:
            raise TableError(f"{c.label}: codegree {index}/{c.degree} is not an integer")
        out.append(SpectrumEntry(c.label, c.degree, cod, index))
    return out


@dataclass(frozen=True)
class NormalSubgroup:
    classes: frozenset[int]
    order: int


def normal_subgroups(t: CharacterTable) -> list[NormalSubgroup]:
    """All intersections of character kernels, sorted by (order, classes)."""
    full = frozenset(range(t.num_classes))
    found = {full}
    for c in t.characters:
        found.add(kernel_classes(c, t))
    changed = True
    while changed:
        changed = False
        for a in list(found):
            for b in list(found):
                m = a & b
                if m not in found:
                    found.add(m)
                    changed = True
    if frozenset({0}) not in found:  # pragma: no cover - faithful sums always exist
        raise TableError("kernels do not intersect to the trivial subgroup")
    out = [NormalSubgroup(s, kernel_order(s, t)) for s in found]
    return sorted(out, key=lambda n: (n.order, sorted(n.classes)))


def _covers(lattice: list[NormalSubgroup]) -> dict[frozenset, list[NormalSubgroup]]:
    """Hasse diagram: for each subgroup, the subgroups covering it."""
    up = {}
    for a in lattice:
        above = [b for b in lattice if a.classes < b.classes]
        up[a.classes] = [b for b in above if not any(a.classes < c.classes < b.classes for c in above)]
    return up


def maximal_chains(t: CharacterTable) -> list[list[NormalSubgroup]]:
    """Every maximal chain from the trivial subgroup to the whole group."""
    lattice = normal_subgroups(t)
    up = _covers(lattice)
    top = lattice[-1].classes
    chains = []

    def walk(chain):
        last = chain[-1]
        if last.classes == top:
            chains.append(list(chain))
            return
        for nxt in up[last.classes]:
            walk(chain + [nxt])

    walk([lattice[0]])
    return chains


def longest_chain(t: CharacterTable) -> list[NormalSubgroup]:
    """A maximal chain of greatest length (longest path in the Hasse diagram)."""
    lattice = normal_subgroups(t)
    up = _covers(lattice)
    best: dict[frozenset, list[NormalSubgroup]] = {}
    for node in reversed(lattice):  # sorted by order, so covers come later
        tails = [best[b.classes] for b in up[node.classes]]
        best[node.classes] = [node] + (max(tails, key=len) if tails else [])
    return best[lattice[0].classes]


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(factorize(n).primes) == 1


def chain_is_solvable(chain: list[NormalSubgroup]) -> bool:
    return all(_is_prime_power(b.order // a.order) for a, b in zip(chain, chain[1:]))


def solvable_from_table(t: CharacterTable) -> bool:
    """Solvable iff every chief factor along a maximal normal chain is a p-group.

    A disagreement with the table's own ``solvable`` flag is a data error.
    """
    verdict = chain_is_solvable(longest_chain(t))
    if t.solvable_flag is not None and t.solvable_flag != verdict:
        raise TableError(f"{t.name}: table says solvable={t.solvable_flag}, chief factors say {verdict}")
    return verdict


@dataclass
class TheoremVerdict:
    table: str
    k: Fraction
    s: int
    report: CriterionReport
    solvable: bool
    a: Fraction = field(default_factory=constant_a)

    @property
    def hypothesis_holds(self) -> bool:
        return self.report.holds

    @property
    def consistent_with_theorem(self) -> bool:
        return not (self.hypothesis_holds and self.k > self.a and not self.solvable)


def theorem_a_check(t: CharacterTable, k: RationalLike | None = None, s: int = 2) -> TheoremVerdict:
    """Run the criterion on the table and compare with its solvability."""
    k = constant_a() if k is None else rat(k)
    entries = [CharEntry(e.degree, e.kernel_index, e.label) for e in codegree_spectrum(t)]
    report = criterion_holds(entries, k, s)
    return TheoremVerdict(t.name, k, s, report, solvable_from_table(t))
