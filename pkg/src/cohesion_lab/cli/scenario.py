"""Scenario files: INI-like stanzas of definitions followed by checks.

Grammar (one item per line; ``#`` starts a comment line)::

    scenario := (blank | comment | stanza)*
    stanza   := header entry*
    header   := '[' kind (' ' NAME)? ']'
    kind     := 'algebra' | 'scheme' | 'ring' | 'site' | 'presheaf'
              | 'monoid' | 'rig' | 'subset' | 'check.' CHECK
    entry    := KEY '=' VALUE

Definitions need a name; checks may have one.  Values are validated per
key when the file is parsed (polynomials, integers, booleans, intervals)
and references to other definitions are resolved once the whole file is
read, in any order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..algebra.parse import ParseError, parse_polynomial
from ..algebra.polynomial import get_order
from ..rig import QIntervalSet
from ..rig.prop2 import catalog as rig_catalog
from ..topos.fixtures import FIXTURES
from ..topos.site import BUILTIN_SITES


class UnresolvedName(ValueError):
    def __init__(self, name, kind, line):
        super().__init__(f"line {line}: undefined {kind} {name!r}")
        self.name = name
        self.kind = kind
        self.line = line


# value types: a definition kind (a reference) or one of these scalars
SCALARS = ("int", "bool", "str", "names", "polys", "poly2", "poly1", "order", "interval",
           "elements", "site_builtin", "rig_builtin", "fixture")

DEFINITIONS = {
    "algebra": {"gens": "names", "relations": "polys", "order": "order"},
    "scheme": {"algebra": "algebra"},
    "ring": {"algebra": "algebra", "add": "poly2", "mul": "poly2", "zero": "str",
             "one": "str", "neg": "poly1"},
    "site": {"builtin": "site_builtin"},
    "presheaf": {"site": "site", "representable": "str", "terminal": "bool",
                 "constant": "elements"},
    "monoid": {"fixture": "fixture", "site": "site", "rig": "rig"},
    "rig": {"builtin": "rig_builtin"},
    "subset": {"rig": "rig", "elements": "elements", "interval": "interval"},
}
REQUIRED = {
    "algebra": ("gens",), "scheme": ("algebra",), "ring": ("algebra",),
    "site": ("builtin",), "presheaf": ("site",), "monoid": (), "rig": ("builtin",),
    "subset": ("rig",),
}

_COMMON = {"expect": "bool"}
CHECKS = {
    "prolongation": ({"algebra": "algebra", "weil": "algebra", "expect_presentation": "str"},
                     ("algebra", "weil")),
    "euler": ({"T": "scheme", "expect_R": "str", "expect_mult": "str"}, ("T",)),
    "euler_composition": ({"T": "scheme"}, ("T",)),
    "euler_vs_ring": ({"T": "scheme", "ring": "ring"}, ("T", "ring")),
    "kl": ({"ring": "ring"}, ("ring",)),
    "units": ({"ring": "ring"}, ("ring",)),
    "idempotents": ({"algebra": "algebra", "expect_count": "int"}, ("algebra",)),
    "points": ({"algebra": "algebra", "expect_count": "int"}, ("algebra",)),
    "connectedness": ({"algebra": "algebra", "degree": "int"}, ("algebra",)),
    "site_gate": ({"site": "site", "expect_witness": "str"}, ("site",)),
    "triangles": ({"site": "site", "count": "int", "max_size": "int"}, ("site",)),
    "hyperconnected": ({"site": "site", "count": "int", "max_size": "int"}, ("site",)),
    "product": ({"site": "site", "count": "int", "max_size": "int"}, ("site",)),
    "prop1": ({"site": "site", "count": "int", "max_size": "int"}, ("site",)),
    "t_discrete": ({"presheaf": "presheaf"}, ("presheaf",)),
    "exponential_oracle": ({"site": "site", "instances": "int", "max_size": "int"}, ("site",)),
    "units_bidirectional": ({"monoid": "monoid", "expect_components": "int"}, ("monoid",)),
    "prop2": ({"rig": "rig", "subset": "subset"}, ("rig",)),
    "lemma": ({"rig": "rig", "subset": "subset"}, ("rig",)),
    "prop2_internal": ({"site": "site", "rig": "rig", "subset": "subset"}, ("site", "rig")),
}
for _params, _ in CHECKS.values():
    _params.update(_COMMON)

_HEADER = re.compile(r"\[\s*([A-Za-z_][\w.]*)(?:\s+([A-Za-z_][\w-]*))?\s*\]\s*$")
_KEY = re.compile(r"[A-Za-z_]\w*")


@dataclass
class Entry:
    key: str
    value: str
    line: int = 0
    column: int = 0  # column of the value's first character

    def same(self, other):
        return (self.key, self.value) == (other.key, other.value)


@dataclass
class Stanza:
    kind: str
    name: str
    entries: list = field(default_factory=list)
    line: int = 0

    @property
    def is_check(self):
        return self.kind.startswith("check.")

    @property
    def check_kind(self):
        return self.kind[len("check."):] if self.is_check else None

    def get(self, key, default=None):
        for e in self.entries:
            if e.key == key:
                return e.value
        return default

    def params(self):
        return {e.key: e.value for e in self.entries}

    def same(self, other):
        return (self.kind == other.kind and self.name == other.name
                and len(self.entries) == len(other.entries)
                and all(a.same(b) for a, b in zip(self.entries, other.entries)))


@dataclass
class Scenario:
    definitions: dict = field(default_factory=dict)   # name -> Stanza, in file order
    checks: list = field(default_factory=list)
    source: str = None

    def stanzas(self):
        return list(self.definitions.values()) + list(self.checks)

    def dump(self):
        """Canonical text; parsing it gives an equal scenario."""
        blocks = []
        for st in self.stanzas():
            head = f"[{st.kind} {st.name}]" if st.name else f"[{st.kind}]"
            blocks.append("\n".join([head] + [f"{e.key} = {e.value}" for e in st.entries]))
        return "\n\n".join(blocks) + ("\n" if blocks else "")

    def same(self, other):
        a, b = self.stanzas(), other.stanzas()
        return len(a) == len(b) and all(x.same(y) for x, y in zip(a, b))


def _split(value):
    return [v.strip() for v in value.split(",") if v.strip()]


def _error(msg, line, column, expected=()):
    return ParseError(msg, column, tuple(expected), line=line)


def _validate_scalar(kind, value, line, col, context):
    if kind == "int":
        if not re.fullmatch(r"-?\d+", value):
            raise _error(f"expected an integer, got {value!r}", line, col, ("integer",))
    elif kind == "bool":
        if value.lower() not in ("true", "false"):
            raise _error(f"expected a boolean, got {value!r}", line, col, ("true", "false"))
    elif kind == "names":
        names = _split(value)
        for n in names:
            if not re.fullmatch(r"[A-Za-z_]\w*", n):
                raise _error(f"bad generator name {n!r}", line, col + value.find(n), ("name",))
        if len(set(names)) != len(names):
            raise _error("repeated generator name", line, col)
    elif kind in ("polys", "poly1", "poly2"):
        variables = {"polys": context.get("gens", ()), "poly2": ("y", "z"),
                     "poly1": context.get("gens", ("x",)) or ("x",)}[kind]
        offset = 0
        for piece in value.split(","):
            stripped = piece.strip()
            lead = len(piece) - len(piece.lstrip())
            if stripped:
                try:
                    parse_polynomial(stripped, list(variables))
                except ParseError as exc:
                    raise _error(exc.message, line,
                                 col + offset + lead + exc.column - 1, exc.expected) from None
            offset += len(piece) + 1
    elif kind == "order":
        try:
            get_order(value)
        except (KeyError, ValueError):
            raise _error(f"unknown monomial order {value!r}", line, col,
                         ("lex", "grlex", "grevlex")) from None
    elif kind == "interval":
        try:
            QIntervalSet.parse(value)
        except ValueError as exc:
            raise _error(str(exc), line, col, ("interval union",)) from None
    elif kind == "site_builtin":
        if value not in BUILTIN_SITES:
            raise _error(f"unknown site {value!r}", line, col, tuple(BUILTIN_SITES))
    elif kind == "rig_builtin":
        if value not in rig_catalog():
            raise _error(f"unknown rig {value!r}", line, col, tuple(rig_catalog()))
    elif kind == "fixture":
        if value not in FIXTURES:
            raise _error(f"unknown fixture {value!r}", line, col, tuple(FIXTURES))


def parse_scenario(text, source=None):
    """Parse scenario text; raises ParseError (with line) or UnresolvedName."""
    scenario = Scenario(source=source)
    current = None
    stanzas = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indent = len(line) - len(line.lstrip())
        if stripped.startswith("["):
            m = _HEADER.fullmatch(stripped)
            if not m:
                raise _error("malformed stanza header", lineno, indent + 1, ("[kind name]",))
            kind, name = m.group(1), m.group(2)
            kcol = indent + line[indent:].index(kind) + 1
            if kind.startswith("check."):
                if kind[6:] not in CHECKS:
                    raise _error(f"unknown check {kind[6:]!r}", lineno, kcol + 6,
                                 tuple(sorted(CHECKS)))
            elif kind not in DEFINITIONS:
                raise _error(f"unknown stanza kind {kind!r}", lineno, kcol,
                             tuple(DEFINITIONS) + ("check.<kind>",))
            elif not name:
                raise _error(f"{kind} stanza needs a name", lineno, len(line) , ("name",))
            current = Stanza(kind, name, [], lineno)
            stanzas.append(current)
            continue
        if current is None:
            raise _error("entry outside any stanza", lineno, indent + 1, ("[",))
        m = _KEY.match(line, indent)
        if not m:
            raise _error("expected a key", lineno, indent + 1, ("key",))
        key = m.group(0)
        rest = m.end()
        while rest < len(line) and line[rest] == " ":
            rest += 1
        if rest >= len(line) or line[rest] != "=":
            raise _error(f"expected '=' after {key!r}", lineno, rest + 1, ("=",))
        vstart = rest + 1
        while vstart < len(line) and line[vstart] == " ":
            vstart += 1
        value = line[vstart:].strip()
        schema = (CHECKS[current.check_kind][0] if current.is_check
                  else DEFINITIONS[current.kind])
        if key not in schema:
            raise _error(f"unknown key {key!r} in [{current.kind}]", lineno, indent + 1,
                         tuple(schema))
        if current.get(key) is not None:
            raise _error(f"duplicate key {key!r}", lineno, indent + 1)
        kind = schema[key]
        if kind in ("polys", "poly1"):
            pass  # needs the stanza's generators; checked below
        elif kind in SCALARS:
            _validate_scalar(kind, value, lineno, vstart + 1, {})
        elif not re.fullmatch(r"[A-Za-z_][\w-]*", value):
            raise _error(f"expected a {kind} name", lineno, vstart + 1, (kind,))
        current.entries.append(Entry(key, value, lineno, vstart + 1))

    for st in stanzas:
        context = {"gens": _split(st.get("gens", ""))}
        if st.kind == "ring":
            context["gens"] = ()
        schema = CHECKS[st.check_kind][0] if st.is_check else DEFINITIONS[st.kind]
        for e in st.entries:
            if schema[e.key] in ("polys", "poly1"):
                _validate_scalar(schema[e.key], e.value, e.line, e.column, context)
        required = CHECKS[st.check_kind][1] if st.is_check else REQUIRED[st.kind]
        for key in required:
            if st.get(key) is None:
                raise _error(f"[{st.kind}] needs {key!r}", st.line, 1, (key,))
        if st.is_check:
            scenario.checks.append(st)
        else:
            if st.name in scenario.definitions:
                raise _error(f"duplicate definition {st.name!r}", st.line, 1)
            scenario.definitions[st.name] = st
    _resolve(scenario)
    return scenario


def _resolve(scenario):
    for st in scenario.stanzas():
        schema = CHECKS[st.check_kind][0] if st.is_check else DEFINITIONS[st.kind]
        for e in st.entries:
            kind = schema[e.key]
            if kind in SCALARS:
                continue
            target = scenario.definitions.get(e.value)
            if target is None or target.kind != kind:
                raise UnresolvedName(e.value, kind, e.line)


def load_scenario(path):
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read(), source=str(path))
