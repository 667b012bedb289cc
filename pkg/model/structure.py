"""Finite first order structures."""

import itertools
from functools import cached_property
from typing import Dict, FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from syntax import Signature

from .errors import ModelError, UnboundVariableError

Element = str
ElementTuple = Tuple[Element, ...]


class Structure(BaseModel):
    """A finite model: named elements, relation tables, total function tables, constants.

    A ``Const`` term whose name is not a declared constant but is the name of
    a domain element denotes that element.
    """

    model_config = ConfigDict(frozen=True)

    name: str = "M"
    signature: Signature = Field(default_factory=Signature)
    domain: Tuple[Element, ...]
    relations: Dict[str, FrozenSet[ElementTuple]] = Field(default_factory=dict)
    functions: Dict[str, Dict[ElementTuple, Element]] = Field(default_factory=dict)
    constants: Dict[str, Element] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_tables(self) -> "Structure":
        if not self.domain:
            raise ValueError("the domain of a structure must be nonempty")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError(f"duplicate domain elements in {self.domain}")
        elements = set(self.domain)
        sig = self.signature
        if set(self.relations) != set(sig.relations):
            raise ValueError(f"relation tables {sorted(self.relations)} do not match signature {sorted(sig.relations)}")
        for name, rows in self.relations.items():
            for row in rows:
                if len(row) != sig.relations[name] or not set(row) <= elements:
                    raise ValueError(f"bad tuple {row} in relation {name}/{sig.relations[name]}")
        if set(self.functions) != set(sig.functions):
            raise ValueError(f"function tables {sorted(self.functions)} do not match signature {sorted(sig.functions)}")
        for name, table in self.functions.items():
            arity = sig.functions[name]
            for args in itertools.product(self.domain, repeat=arity):
                if args not in table:
                    raise ValueError(f"function {name} is undefined on {args}")
                if table[args] not in elements:
                    raise ValueError(f"function {name} maps {args} outside the domain")
            if len(table) != len(self.domain) ** arity:
                raise ValueError(f"function {name} has entries outside the domain")
        if set(self.constants) != set(sig.constants):
            raise ValueError(f"constants {sorted(self.constants)} do not match signature {sorted(sig.constants)}")
        for name, value in self.constants.items():
            if value not in elements:
                raise ValueError(f"constant {name} denotes {value}, which is not in the domain")
        return self

    @cached_property
    def index(self) -> Dict[Element, int]:
        """Position of each element in declaration order."""
        return {e: i for i, e in enumerate(self.domain)}

    @property
    def size(self) -> int:
        return len(self.domain)

    def constant(self, name: str) -> Element:
        if name in self.constants:
            return self.constants[name]
        if name in self.index:
            return name
        raise UnboundVariableError(f"{name} is neither a constant of {self.name} nor one of its elements")

    def apply(self, func: str, args: ElementTuple) -> Element:
        try:
            return self.functions[func][args]
        except KeyError:
            raise ModelError(f"function {func} is not interpreted on {args} in {self.name}") from None

    def holds(self, relation: str, args: ElementTuple) -> bool:
        try:
            return args in self.relations[relation]
        except KeyError:
            raise ModelError(f"relation {relation} is not interpreted in {self.name}") from None

    def expand(self, extra: Dict[str, FrozenSet[ElementTuple]], arities: Dict[str, int]) -> "Structure":
        """The expansion of this structure by further relation tables."""
        relations = dict(self.relations)
        relations.update(extra)
        return Structure.model_construct(
            name=self.name,
            signature=self.signature.with_relations(arities),
            domain=self.domain,
            relations=relations,
            functions=self.functions,
            constants=self.constants,
        )
