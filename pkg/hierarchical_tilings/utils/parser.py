# hierarchical_tilings/utils/parser.py

"""
Rule File Parser for hierarchical-tilings
Parses rule, tiling and patch documents into core objects.
"""

import json
import re
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pydantic import ValidationError as SchemaError

from ..core.golden import GoldenNumber
from ..core.substitution import Substitution1D, fibonacci
from ..core.substitution2d import (
    BlockSubstitution2D,
    Substitution2D,
    chair,
    fibonacci_product,
    product,
)
from ..core.symbolic import Pattern
from ..core.tiling_line import LineTiling, TileSpec, TowerExtension
from ..core.tiling_plane import ProductTiling
from ..exceptions import HierarchyError, RuleFileError, ValidationError

BUILTINS = {
    "fibonacci": fibonacci,
    "chair": chair,
    "fibonacci_product": fibonacci_product,
}

_TERM = re.compile(r"[+-]?[^+-]+")


def parse_exact(value: Any) -> GoldenNumber:
    """
    Read an exact number.

    Accepts integers, rational strings ("3/2"), golden strings ("1+2*tau",
    "3-tau", "tau"), decimals ("1e-8"), [u, v] pairs and {"u", "v"} objects.
    """
    if isinstance(value, GoldenNumber):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(value, int):
        return GoldenNumber(value)
    if isinstance(value, dict):
        return GoldenNumber.from_pair((value["u"], value["v"]))
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError("an exact pair has two entries")
        return GoldenNumber.from_pair((str(value[0]), str(value[1])))
    if not isinstance(value, str):
        raise ValueError(f"not an exact number: {value!r}")
    text = value.replace(" ", "").replace("τ", "tau").replace("−", "-")
    if not text:
        raise ValueError("empty number")
    try:
        return GoldenNumber(Fraction(text))
    except ValueError:
        pass
    terms = _TERM.findall(text)
    if "".join(terms) != text:
        raise ValueError(f"not an exact number: {value!r}")
    real, coefficient = Fraction(0), Fraction(0)
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        if body.endswith("tau"):
            factor = body[:-3].rstrip("*")
            coefficient += sign * (Fraction(factor) if factor else 1)
        else:
            real += sign * Fraction(body)
    return GoldenNumber(real, coefficient)


def parse_point(text: str) -> Tuple[GoldenNumber, GoldenNumber]:
    """Read "x,y" as an exact point."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected x,y, got {text!r}")
    return parse_exact(parts[0]), parse_exact(parts[1])


def _exact_field(value: Any) -> GoldenNumber:
    try:
        return parse_exact(value)
    except (KeyError, TypeError, ZeroDivisionError) as e:
        raise ValueError(f"not an exact number: {value!r}") from e


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


class Substitution1DModel(_Document):
    """Rules letter -> word; a string rule is read one character per letter."""
    kind: Literal["substitution1d"] = "substitution1d"
    alphabet: List[str]
    rules: Dict[str, Union[str, List[str]]]

    def build(self) -> Substitution1D:
        return Substitution1D(self.alphabet, {k: tuple(v) for k, v in self.rules.items()})


class Product2DModel(_Document):
    kind: Literal["product2d"]
    horizontal: Substitution1DModel
    vertical: Substitution1DModel

    def build(self) -> Substitution2D:
        return product(self.horizontal.build(), self.vertical.build())


class Block2DModel(_Document):
    """Uniform block rules; each image lists its rows bottom row first."""
    kind: Literal["block2d"]
    alphabet: List[str]
    rules: Dict[str, List[List[str]]]

    def build(self) -> Substitution2D:
        return BlockSubstitution2D(self.alphabet, {k: Pattern.block(v) for k, v in self.rules.items()})


class BuiltinModel(_Document):
    kind: Literal["builtin"]
    name: Literal["fibonacci", "chair", "fibonacci_product"]

    def build(self) -> Union[Substitution1D, Substitution2D]:
        return BUILTINS[self.name]()


class RuleFile(_Document):
    rule: Union[Substitution1DModel, Product2DModel, Block2DModel, BuiltinModel] = Field(discriminator="kind")


class SpecModel(_Document):
    length_a: Any
    length_b: Any

    @field_validator("length_a", "length_b")
    @classmethod
    def _exact(cls, value):
        return _exact_field(value)

    def build(self) -> TileSpec:
        return TileSpec(self.length_a, self.length_b)


class ExtensionModel(_Document):
    """Seeded or cyclic continuation; base_depth defaults to the tower depth."""
    seed: Optional[int] = None
    cycle: Optional[List[Tuple[str, int]]] = None
    base_depth: Optional[int] = None

    @model_validator(mode="after")
    def _one_of(self):
        if (self.seed is None) == (self.cycle is None):
            raise ValueError("give exactly one of seed or cycle")
        return self

    def build(self, tower_depth: int) -> TowerExtension:
        base_depth = tower_depth if self.base_depth is None else self.base_depth
        if base_depth > tower_depth:
            raise ValidationError(f"extension base depth {base_depth} is above the tower depth {tower_depth}")
        if self.seed is not None:
            return TowerExtension(seed=self.seed, base_depth=base_depth)
        return TowerExtension(cycle=tuple(self.cycle), base_depth=base_depth)


class TilingModel(_Document):
    """A line tiling: spec, tower triples [level, letter, child index], top letter, offset."""
    spec: SpecModel
    tower: List[Tuple[int, str, int]] = Field(default_factory=list)
    top: str
    offset: Any = 0
    extension: Optional[ExtensionModel] = None

    @field_validator("offset")
    @classmethod
    def _exact(cls, value):
        return _exact_field(value)

    @model_validator(mode="after")
    def _levels(self):
        levels = [entry[0] for entry in self.tower]
        if levels != list(range(len(levels))):
            raise ValueError("tower levels must be 0, 1, 2, ... in order")
        return self

    def build(self, max_depth: int = 256) -> LineTiling:
        letters = [letter for _, letter, _ in self.tower] + [self.top]
        indices = [index for _, _, index in self.tower]
        extension = self.extension.build(len(indices)) if self.extension else None
        return LineTiling.from_address(self.spec.build(), letters, indices, self.offset,
                                       extension, max(max_depth, len(indices)))


class PatchModel(_Document):
    """A product tiling of the plane from two line tilings."""
    horizontal: TilingModel
    vertical: TilingModel

    def build(self, max_depth: int = 256) -> ProductTiling:
        return ProductTiling(self.horizontal.build(max_depth), self.vertical.build(max_depth))


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _locate(text: str, loc: Tuple[Any, ...]) -> Tuple[int, int]:
    """Line and column of the deepest named key in an error location."""
    for key in reversed(loc):
        if isinstance(key, str):
            match = re.search(r'"' + re.escape(key) + r'"\s*:', text)
            if match:
                return _position(text, match.start())
    return 1, 1


def _load(text: str, model: type, wrap: bool = False):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise RuleFileError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    try:
        if wrap:
            return model.model_validate({"rule": data})
        return model.model_validate(data)
    except SchemaError as e:
        first = e.errors()[0]
        loc = tuple(first["loc"])
        line, column = _locate(text, loc)
        where = ".".join(str(part) for part in loc) or "document"
        raise RuleFileError(f"{where}: {first['msg']}", line, column) from e


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def parse_rules_text(text: str) -> Union[Substitution1DModel, Product2DModel, Block2DModel, BuiltinModel]:
    return _load(text, RuleFile, wrap=True).rule


def build_system(document) -> Union[Substitution1D, Substitution2D]:
    """
    Build the substitution a rule document describes.

    Raises:
        RuleFileError: If the rules are well formed but not a valid substitution
    """
    try:
        return document.build()
    except HierarchyError as e:
        if isinstance(e, RuleFileError):
            raise
        raise RuleFileError(str(e), 1, 1) from e


def load_rules(path: str):
    """Parse a rule file; returns (document, system)."""
    document = parse_rules_text(_read(path))
    return document, build_system(document)


def rules_from_plain(data: Dict[str, Any]):
    """Rebuild (document, system) from a rule document echoed in a report."""
    document = parse_rules_text(json.dumps(data))
    return document, build_system(document)


def load_tiling(path: str, max_depth: int = 256) -> Tuple[TilingModel, LineTiling]:
    text = _read(path)
    document = _load(text, TilingModel)
    try:
        return document, document.build(max_depth)
    except HierarchyError as e:
        raise RuleFileError(str(e), *_locate(text, ("tower",))) from e


def load_patch(path: str, max_depth: int = 256) -> Tuple[PatchModel, ProductTiling]:
    text = _read(path)
    document = _load(text, PatchModel)
    try:
        return document, document.build(max_depth)
    except HierarchyError as e:
        raise RuleFileError(str(e), 1, 1) from e


def tiling_document(tiling: LineTiling) -> Dict[str, Any]:
    """The file form of a tiling, with its materialized tower."""
    extension = tiling.tower.extension
    document: Dict[str, Any] = {
        "spec": {"length_a": list(tiling.spec.length_a.to_pair()),
                 "length_b": list(tiling.spec.length_b.to_pair())},
        "tower": [[level, letter, index] for level, letter, index in tiling.address()],
        "top": tiling.tower.letter(tiling.tower.depth),
        "offset": list(tiling.offset.to_pair()),
    }
    if extension is not None:
        if extension.seed is not None:
            document["extension"] = {"seed": extension.seed, "base_depth": extension.base_depth}
        else:
            document["extension"] = {
                "cycle": [[parent, index] for parent, index in extension.cycle],
                "base_depth": extension.base_depth,
            }
    return document
