"""Finite two-implication algebras and their line-oriented file format.

An algebra is a carrier of n named elements with two n x n operation
tables (``arrow`` for ->, ``squig`` for the second implication), a
designated constant 1 and an optional constant 0.  Elements are dense
indices 0..n-1 in declaration order; names are only used at the I/O
boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed algebra document.  Carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class UnaryMap:
    """Total self-map on the carrier, stored as the image of each index."""

    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def compose(self, other: "UnaryMap") -> "UnaryMap":
        """self after other: x -> self(other(x))."""
        return UnaryMap(tuple(self.images[i] for i in other.images))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    @staticmethod
    def identity(n: int) -> "UnaryMap":
        return UnaryMap(tuple(range(n)))


@dataclass(frozen=True)
class FiniteAlgebra:
    name: str
    element_names: tuple[str, ...]
    one: int
    arrow: Table
    squig: Table
    zero: int | None = None
    unary: dict[str, UnaryMap] = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.element_names)

    def __post_init__(self):
        n = self.size
        if n == 0:
            raise ValueError("empty carrier")
        if len(set(self.element_names)) != n:
            raise ValueError("duplicate element names")
        for tbl, label in ((self.arrow, "arrow"), (self.squig, "squig")):
            if len(tbl) != n or any(len(row) != n for row in tbl):
                raise ValueError(f"{label} table is not {n}x{n}")
            if any(not (0 <= v < n) for row in tbl for v in row):
                raise ValueError(f"{label} table entry out of range")
        if not (0 <= self.one < n):
            raise ValueError("constant 1 out of range")
        if self.zero is not None and not (0 <= self.zero < n):
            raise ValueError("constant 0 out of range")
        for opname, m in self.unary.items():
            if len(m) != n or any(not (0 <= v < n) for v in m.images):
                raise ValueError(f"unary map {opname!r} is not a self-map")

    # -- convenience accessors ------------------------------------------

    def arr(self, x: int, y: int) -> int:
        return self.arrow[x][y]

    def sq(self, x: int, y: int) -> int:
        return self.squig[x][y]

    def leq(self, x: int, y: int) -> bool:
        """x <= y iff x -> y = 1 (and, on well-formed algebras, iff x ~> y = 1)."""
        return self.arrow[x][y] == self.one

    def index(self, token: str) -> int:
        try:
            return self.element_names.index(token)
        except ValueError:
            raise KeyError(f"unknown element {token!r}") from None

    def elements(self) -> range:
        return range(self.size)

    def with_unary(self, **maps: UnaryMap) -> "FiniteAlgebra":
        merged = dict(self.unary)
        merged.update(maps)
        return FiniteAlgebra(self.name, self.element_names, self.one,
                             self.arrow, self.squig, self.zero, merged)


def _tokenize(text: str):
    """Yield (lineno, tokens) for every non-blank, non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_algebra(text: str) -> FiniteAlgebra:
    """Parse an algebra document.  See `serialize_algebra` for the format."""
    lines = list(_tokenize(text))
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise ParseError(last, "unexpected end of document")
        item = lines[pos]
        pos += 1
        return item

    lineno, toks = take()
    if toks[0] != "algebra" or len(toks) != 2:
        raise ParseError(lineno, "expected 'algebra <name>'")
    name = toks[1]

    lineno, toks = take()
    if toks[0] != "elements" or len(toks) < 2:
        raise ParseError(lineno, "expected 'elements <tok1> ... <tokn>'")
    element_names = tuple(toks[1:])
    if len(set(element_names)) != len(element_names):
        raise ParseError(lineno, "duplicate element names")
    n = len(element_names)
    idx = {tok: i for i, tok in enumerate(element_names)}

    def element(tok: str, at: int) -> int:
        if tok not in idx:
            raise ParseError(at, f"undeclared element {tok!r}")
        return idx[tok]

    lineno, toks = take()
    if toks[0] != "one" or len(toks) != 2:
        raise ParseError(lineno, "expected 'one <tok>'")
    one = element(toks[1], lineno)

    zero = None
    arrow = None
    squig = None
    unary: dict[str, UnaryMap] = {}

    def read_rows(count: int, section: str) -> Table:
        rows = []
        for _ in range(count):
            at, row = take()
            if len(row) != n:
                raise ParseError(at, f"{section} row has {len(row)} entries, expected {n}")
            rows.append(tuple(element(t, at) for t in row))
        return tuple(rows)

    while True:
        lineno, toks = take()
        head = toks[0]
        if head == "end":
            break
        elif head == "zero":
            if len(toks) != 2:
                raise ParseError(lineno, "expected 'zero <tok>'")
            if zero is not None:
                raise ParseError(lineno, "duplicate 'zero' section")
            zero = element(toks[1], lineno)
        elif head == "arrow":
            if arrow is not None:
                raise ParseError(lineno, "duplicate 'arrow' section")
            arrow = read_rows(n, "arrow")
        elif head == "squig":
            if squig is not None:
                raise ParseError(lineno, "duplicate 'squig' section")
            squig = read_rows(n, "squig")
        elif head == "unary":
            if len(toks) != 2:
                raise ParseError(lineno, "expected 'unary <opname>'")
            opname = toks[1]
            if opname in unary:
                raise ParseError(lineno, f"duplicate unary map {opname!r}")
            at, row = take()
            if len(row) != n:
                raise ParseError(at, f"unary row has {len(row)} entries, expected {n}")
            unary[opname] = UnaryMap(tuple(element(t, at) for t in row))
        else:
            raise ParseError(lineno, f"unknown section {head!r}")

    if arrow is None:
        raise ParseError(lineno, "missing 'arrow' section")
    if squig is None:
        raise ParseError(lineno, "missing 'squig' section")
    if pos != len(lines):
        raise ParseError(lines[pos][0], "content after 'end'")

    return FiniteAlgebra(name, element_names, one, arrow, squig, zero, unary)


def serialize_algebra(alg: FiniteAlgebra) -> str:
    """Emit the canonical document; parse(serialize(a)) == a bit-exactly."""
    names = alg.element_names
    out = [f"algebra {alg.name}"]
    out.append("elements " + " ".join(names))
    out.append(f"one {names[alg.one]}")
    if alg.zero is not None:
        out.append(f"zero {names[alg.zero]}")
    for label, tbl in (("arrow", alg.arrow), ("squig", alg.squig)):
        out.append(label)
        for row in tbl:
            out.append(" ".join(names[v] for v in row))
    for opname in alg.unary:
        out.append(f"unary {opname}")
        out.append(" ".join(names[v] for v in alg.unary[opname].images))
    out.append("end")
    return "\n".join(out) + "\n"


def load_algebra(path) -> FiniteAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())
