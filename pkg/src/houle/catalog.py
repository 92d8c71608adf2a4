"""Catalog of algorithmic artworks and its Markdown inventory emitter.

Entries carry a closed set of exactly eight attribute tags, each with a
unique one-character glyph used in the rendered inventory:

    Encodage       ⧈    code as the work's material
    Système        ⚙    systems, machines, infrastructures
    Mathématiques  ∑    explicit mathematical structure
    Arbre          ⑂    branching / tree processes
    DeepLearning   ≋    learned models
    Interactivité  ⇄    audience input shapes the output
    Internet       ☍    networked works
    Plateforme     ⌗    platform-bound works

The glyph assignment is presentational and belongs to this package.  Four
candidate attributes that were weighed and rejected during curation
(interface, visualisation, expérimental, archive) are deliberately not
modelled; entries that would need them fall back on the eight above.

The inventory is chaptered in four fixed parts, in this order: dessin et
code, image et temps, dit et écrit, matériel et externalité.

Record files are blank-line separated blocks of `key: value` lines; the
description may continue over indented lines; attrs are comma separated.
Parse errors carry 1-based line numbers.
"""

from __future__ import annotations

import enum
import importlib.resources
from dataclasses import dataclass

BUNDLED_RECORDS = "artworks_sample.rec"

YEAR_MIN = 1950
YEAR_MAX = 2100

CHAPTERS = (
    "dessin et code",
    "image et temps",
    "dit et écrit",
    "matériel et externalité",
)


class Attribute(enum.Enum):
    ENCODAGE = ("Encodage", "⧈")
    SYSTEME = ("Système", "⚙")
    MATHEMATIQUES = ("Mathématiques", "∑")
    ARBRE = ("Arbre", "⑂")
    DEEP_LEARNING = ("DeepLearning", "≋")
    INTERACTIVITE = ("Interactivité", "⇄")
    INTERNET = ("Internet", "☍")
    PLATEFORME = ("Plateforme", "⌗")

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def glyph(self) -> str:
        return self.value[1]

    @classmethod
    def from_label(cls, label: str) -> "Attribute":
        for a in cls:
            if a.label == label:
                return a
        raise KeyError(label)


class CatalogFormatError(ValueError):
    """Parse failure; message starts with the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class CatalogEntry:
    title: str
    artist: str
    year: int
    chapter: str
    attributes: frozenset[Attribute]
    algo_type: str
    description: str

    def __post_init__(self):
        if not self.title.strip():
            raise ValueError("entry needs a title")
        if not self.artist.strip():
            raise ValueError("entry needs an artist")
        if not (YEAR_MIN <= self.year <= YEAR_MAX):
            raise ValueError(
                f"year {self.year} outside [{YEAR_MIN}, {YEAR_MAX}]"
            )
        if self.chapter not in CHAPTERS:
            raise ValueError(f"unknown chapter {self.chapter!r}")
        object.__setattr__(self, "attributes", frozenset(self.attributes))

    def glyphs(self) -> str:
        """Entry glyphs in attribute enumeration order."""
        return " ".join(a.glyph for a in Attribute if a in self.attributes)


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]

    def __post_init__(self):
        seen = set()
        for e in self.entries:
            key = (e.title, e.artist)
            if key in seen:
                raise ValueError(f"duplicate entry {e.title!r} / {e.artist!r}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.entries)


_KEYS = ("title", "artist", "year", "chapter", "attrs", "algo_type", "description")


def _finish_block(
    block: dict, first_line: int, line_map: dict
) -> CatalogEntry:
    for req in ("title", "artist", "year", "chapter"):
        if req not in block:
            raise CatalogFormatError(first_line, f"entry is missing {req!r}")
    try:
        year = int(block["year"])
    except ValueError:
        raise CatalogFormatError(
            line_map["year"], f"year is not an integer: {block['year']!r}"
        )
    if not (YEAR_MIN <= year <= YEAR_MAX):
        raise CatalogFormatError(
            line_map["year"], f"year {year} outside [{YEAR_MIN}, {YEAR_MAX}]"
        )
    if block["chapter"] not in CHAPTERS:
        raise CatalogFormatError(
            line_map["chapter"], f"unknown chapter {block['chapter']!r}"
        )
    attrs = set()
    raw = block.get("attrs", "")
    if raw.strip():
        for part in raw.split(","):
            name = part.strip()
            try:
                attrs.add(Attribute.from_label(name))
            except KeyError:
                raise CatalogFormatError(
                    line_map["attrs"], f"unknown attribute {name!r}"
                )
    return CatalogEntry(
        title=block["title"],
        artist=block["artist"],
        year=year,
        chapter=block["chapter"],
        attributes=frozenset(attrs),
        algo_type=block.get("algo_type", ""),
        description=block.get("description", ""),
    )


def parse_catalog(text: str) -> Catalog:
    """Parse a record file.  Errors carry the offending 1-based line number."""
    entries = []
    block: dict = {}
    line_map: dict = {}
    first_line = 0
    last_key: str | None = None

    def close(line_no):
        nonlocal block, line_map, last_key
        if block:
            entries.append(_finish_block(block, first_line, line_map))
            block, line_map, last_key = {}, {}, None

    for line_no, raw in enumerate(text.split("\n"), start=1):
        if raw.startswith("#"):
            continue
        if not raw.strip():
            close(line_no)
            continue
        if raw[0] in (" ", "\t"):
            if last_key is None:
                raise CatalogFormatError(line_no, "continuation line outside an entry")
            block[last_key] = block[last_key] + " " + raw.strip()
            continue
        if ":" not in raw:
            raise CatalogFormatError(line_no, f"expected 'key: value', got {raw!r}")
        key, _, value = raw.partition(":")
        key = key.strip()
        if key not in _KEYS:
            raise CatalogFormatError(line_no, f"unknown key {key!r}")
        if not block:
            first_line = line_no
        if key in block:
            raise CatalogFormatError(line_no, f"duplicate key {key!r} in entry")
        block[key] = value.strip()
        line_map[key] = line_no
        last_key = key
    close(0)

    try:
        return Catalog(tuple(entries))
    except ValueError as exc:
        raise CatalogFormatError(first_line or 1, str(exc))


def filter_catalog(
    cat: Catalog,
    attributes: set | frozenset | None = None,
    chapter: str | None = None,
    year_range: tuple[int, int] | None = None,
) -> Catalog:
    """Entries matching all given predicates (attribute filter is subset)."""
    wanted = frozenset(attributes) if attributes else None
    out = []
    for e in cat.entries:
        if wanted is not None and not wanted <= e.attributes:
            continue
        if chapter is not None and e.chapter != chapter:
            continue
        if year_range is not None and not (year_range[0] <= e.year <= year_range[1]):
            continue
        out.append(e)
    return Catalog(tuple(out))


def emit_markdown(cat: Catalog, title: str = "Inventaire d'œuvres algorithmiques") -> str:
    """Deterministic inventory: H1 title, one H2 per non-empty chapter in
    canonical order, one H3 per entry with glyph line, algo-type line and
    description paragraph."""
    lines = [f"# {title}", ""]
    for chapter in CHAPTERS:
        selected = [e for e in cat.entries if e.chapter == chapter]
        if not selected:
            continue
        lines.append(f"## {chapter}")
        lines.append("")
        for e in selected:
            lines.append(f"### {e.title} — {e.artist} ({e.year})")
            lines.append("")
            glyphs = e.glyphs()
            if glyphs:
                lines.append(glyphs)
                lines.append("")
            if e.algo_type:
                lines.append(f"Algo-type : {e.algo_type}")
                lines.append("")
            if e.description:
                lines.append(e.description)
                lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def emit_records(cat: Catalog) -> str:
    """Record-file dump that parses back to an equal catalog."""
    blocks = []
    for e in cat.entries:
        lines = [
            f"title: {e.title}",
            f"artist: {e.artist}",
            f"year: {e.year}",
            f"chapter: {e.chapter}",
        ]
        attrs = ", ".join(a.label for a in Attribute if a in e.attributes)
        if attrs:
            lines.append(f"attrs: {attrs}")
        if e.algo_type:
            lines.append(f"algo_type: {e.algo_type}")
        if e.description:
            lines.append(f"description: {e.description}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def load_bundled_catalog() -> Catalog:
    """Sample records: the three documented works plus marked synthetic fillers."""
    text = (
        importlib.resources.files("houle.data")
        .joinpath(BUNDLED_RECORDS)
        .read_text(encoding="utf-8")
    )
    return parse_catalog(text)
