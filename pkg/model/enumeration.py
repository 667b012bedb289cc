"""Exhaustive enumeration of the structures of a signature."""

import itertools
import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from syntax import Signature

from .structure import Element, ElementTuple, Structure

logger = logging.getLogger(__name__)


def element_names(size: int) -> Tuple[Element, ...]:
    return tuple(str(i) for i in range(size))


def _relation_tables(domain: Tuple[Element, ...], arity: int) -> List[FrozenSet[ElementTuple]]:
    tuples = list(itertools.product(domain, repeat=arity))
    tables: List[FrozenSet[ElementTuple]] = []
    for k in range(len(tuples) + 1):
        tables.extend(frozenset(c) for c in itertools.combinations(tuples, k))
    return tables


def _function_tables(domain: Tuple[Element, ...], arity: int) -> List[Dict[ElementTuple, Element]]:
    args = list(itertools.product(domain, repeat=arity))
    return [dict(zip(args, values)) for values in itertools.product(domain, repeat=len(args))]


def count_structures(sig: Signature, size: int) -> int:
    total = 1
    for arity in sig.relations.values():
        total *= 2 ** (size ** arity)
    for arity in sig.functions.values():
        total *= size ** (size ** arity)
    total *= size ** len(sig.constants)
    return total


def enumerate_structures(sig: Signature, size: int, limit: Optional[int] = None) -> Iterator[Structure]:
    """All structures of ``sig`` over the domain ``0 .. size-1``.

    Symbols are taken in name order and each relation's tables by increasing
    size, so the order is deterministic and small interpretations come first.

    Args:
        sig: the signature to interpret
        size: domain size, at least 1
        limit: stop after this many structures
    """
    if size < 1:
        raise ValueError(f"structure size must be positive, got {size}")
    domain = element_names(size)
    rel_names = sorted(sig.relations)
    fun_names = sorted(sig.functions)
    const_names = sorted(sig.constants)
    total = count_structures(sig, size)
    if limit is not None and total > limit:
        logger.warning("signature has %d structures of size %d; checking only the first %d", total, size, limit)
    factors = (
        [_relation_tables(domain, sig.relations[r]) for r in rel_names]
        + [_function_tables(domain, sig.functions[f]) for f in fun_names]
        + [list(domain) for _ in const_names]
    )
    produced = 0
    for combo in itertools.product(*factors):
        if limit is not None and produced >= limit:
            return
        produced += 1
        rels = combo[: len(rel_names)]
        funs = combo[len(rel_names): len(rel_names) + len(fun_names)]
        consts = combo[len(rel_names) + len(fun_names):]
        yield Structure.model_construct(
            name=f"M{size}_{produced}",
            signature=sig,
            domain=domain,
            relations=dict(zip(rel_names, rels)),
            functions=dict(zip(fun_names, funs)),
            constants=dict(zip(const_names, consts)),
        )
