"""Group spec strings: `sym:4`, `product:dihedral:4,cyclic:3`, `file:groups/s3.json`.

Grammar:
    SPEC   := FAMILY ':' INT (',' INT)*      fixed arity per family
            | 'product:' SPEC ',' SPEC
            | ('file' | 'gens') ':' PATH     PATH runs to the next ',' or the end
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from app.catalog import families
from app.config import Settings
from app.domain.errors import ParseError, UnknownFamily
from app.domain.group_table import GroupTable

FAMILY_ARITY: Dict[str, int] = {
    "cyclic": 1,
    "dihedral": 1,
    "dicyclic": 1,
    "sym": 1,
    "alt": 1,
    "elemab": 2,
    "heisenberg": 1,
    "affine": 1,
}

_CONSTRUCTORS: Dict[str, Callable[..., GroupTable]] = {
    "cyclic": families.make_cyclic,
    "dihedral": families.make_dihedral,
    "dicyclic": families.make_dicyclic,
    "sym": families.make_symmetric,
    "alt": families.make_alternating,
    "elemab": families.make_elementary_abelian,
    "heisenberg": families.make_heisenberg,
    "affine": families.make_affine,
}

FILE_FAMILIES = ("file", "gens")


@dataclass(frozen=True)
class GroupSpec:
    """A parsed constructor expression."""
    family: str
    params: Tuple[int, ...] = ()
    children: Tuple["GroupSpec", ...] = field(default_factory=tuple)
    path: Optional[str] = None

    def render(self) -> str:
        """Canonical text; parse_group_spec(spec.render()) == spec."""
        if self.family == "product":
            return f"product:{self.children[0].render()},{self.children[1].render()}"
        if self.family in FILE_FAMILIES:
            return f"{self.family}:{self.path}"
        return f"{self.family}:{','.join(str(p) for p in self.params)}"

    def build(self, settings: Optional[Settings] = None) -> GroupTable:
        """Construct the group.

        Raises:
            ParameterOutOfRange, OrderCapExceeded, Catalog*Error (file specs)
        """
        settings = settings or Settings()
        if self.family == "product":
            left, right = (child.build(settings) for child in self.children)
            return families.direct_product(left, right, settings)
        if self.family in FILE_FAMILIES:
            from app.data_import.catalog_loader import load_group_file
            return load_group_file(self.path, settings)
        return _CONSTRUCTORS[self.family](*self.params, settings=settings)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, char: str):
        self.skip_spaces()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"Expected {char!r}, found {found}")
        self.pos += 1

    def name(self) -> str:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            self.error("Expected a family name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("Expected an integer")
        return int(self.text[start:self.pos])

    def path(self) -> str:
        start = self.pos
        end = self.text.find(",", start)
        end = len(self.text) if end < 0 else end
        value = self.text[start:end].strip()
        if not value:
            self.error("Expected a file path")
        self.pos = end
        return value

    def spec(self) -> GroupSpec:
        start = self.pos
        family = self.name()
        if family != "product" and family not in FAMILY_ARITY and family not in FILE_FAMILIES:
            raise UnknownFamily(family, start)
        self.expect(":")
        if family == "product":
            left = self.spec()
            self.expect(",")
            right = self.spec()
            return GroupSpec("product", children=(left, right))
        if family in FILE_FAMILIES:
            return GroupSpec(family, path=self.path())
        params = [self.integer()]
        for _ in range(FAMILY_ARITY[family] - 1):
            self.expect(",")
            params.append(self.integer())
        families.validate_parameters(family, params)
        return GroupSpec(family, tuple(params))


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a spec string.

    Raises:
        ParseError: malformed input (carries the character position)
        UnknownFamily: unrecognised family name
        ParameterOutOfRange: parameters outside the family bounds
    """
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip_spaces()
    if parser.pos != len(text):
        parser.error(f"Unexpected trailing input {text[parser.pos:]!r}")
    return spec
