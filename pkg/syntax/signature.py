"""First order signatures."""

from typing import Dict, FrozenSet, Iterable

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import ArityError


class Signature(BaseModel):
    """Relation and function symbols with their arities, plus constant names."""

    model_config = ConfigDict(frozen=True)

    relations: Dict[str, int] = Field(default_factory=dict)
    functions: Dict[str, int] = Field(default_factory=dict)
    constants: FrozenSet[str] = Field(default_factory=frozenset)

    @field_validator("relations")
    @classmethod
    def relation_arities(cls, v: Dict[str, int]) -> Dict[str, int]:
        for name, arity in v.items():
            if arity < 0:
                raise ValueError(f"relation {name} has negative arity {arity}")
        return v

    @field_validator("functions")
    @classmethod
    def function_arities(cls, v: Dict[str, int]) -> Dict[str, int]:
        for name, arity in v.items():
            if arity < 1:
                raise ValueError(f"function {name} needs arity >= 1, got {arity}")
        return v

    @model_validator(mode="after")
    def disjoint_categories(self) -> "Signature":
        clash = (
            (set(self.relations) & set(self.functions))
            | (set(self.relations) & self.constants)
            | (set(self.functions) & self.constants)
        )
        if clash:
            raise ValueError(f"symbols declared in more than one category: {sorted(clash)}")
        return self

    def __hash__(self) -> int:
        return hash((
            tuple(sorted(self.relations.items())),
            tuple(sorted(self.functions.items())),
            self.constants,
        ))

    def declares(self, name: str) -> bool:
        return name in self.relations or name in self.functions or name in self.constants

    def merge(self, other: "Signature") -> "Signature":
        """Union of two signatures; a symbol used with two arities is an error."""
        relations = dict(self.relations)
        for name, arity in other.relations.items():
            if relations.setdefault(name, arity) != arity:
                raise ArityError(f"relation {name} used with arities {relations[name]} and {arity}")
        functions = dict(self.functions)
        for name, arity in other.functions.items():
            if functions.setdefault(name, arity) != arity:
                raise ArityError(f"function {name} used with arities {functions[name]} and {arity}")
        try:
            return Signature(
                relations=relations,
                functions=functions,
                constants=self.constants | other.constants,
            )
        except ValueError as exc:
            raise ArityError(str(exc)) from exc

    def with_relations(self, extra: Dict[str, int]) -> "Signature":
        return self.merge(Signature(relations=extra))

    def without_relations(self, names: Iterable[str]) -> "Signature":
        drop = set(names)
        return Signature(
            relations={n: a for n, a in self.relations.items() if n not in drop},
            functions=self.functions,
            constants=self.constants,
        )

    @classmethod
    def infer(cls, formulas: Iterable[object]) -> "Signature":
        """Collect the symbols used by terms and formulas, checking arity consistency."""
        from .transform import symbols_of

        sig = cls()
        for phi in formulas:
            sig = sig.merge(symbols_of(phi))
        return sig
