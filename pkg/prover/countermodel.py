"""Finite model search by exhaustive enumeration."""

import itertools
import logging
import time
from typing import Dict, Iterable, List, Optional, Tuple

from model import Structure, element_names, enumerate_structures, eval_sentence
from syntax import FoFormula, Signature, big_and, exists_prefix, free_vars

logger = logging.getLogger(__name__)


def find_countermodel(
    sentences: Iterable[FoFormula],
    max_size: int,
    deadline: Optional[float] = None,
) -> Optional[Tuple[Structure, Dict[str, str]]]:
    """The first structure of size at most ``max_size`` with a parameter assignment satisfying ``sentences``.

    Parameter variables are read as constants, so every assignment to them
    is tried.  Free team variables are read existentially.  Returns ``None``
    when no model exists within the bound or the ``deadline`` (a
    ``time.monotonic`` value) passes first.
    """
    if max_size < 1:
        raise ValueError(f"countermodel size must be positive, got {max_size}")
    todo: List[FoFormula] = list(sentences)
    team = set().union(*(free_vars(phi).team for phi in todo)) if todo else set()
    if team:
        todo = [exists_prefix(team, big_and(todo))]
    params = sorted(set().union(*(free_vars(phi).params for phi in todo))) if todo else []
    sig = Signature.infer(todo)
    checked = 0
    for size in range(1, max_size + 1):
        domain = element_names(size)
        for M in enumerate_structures(sig, size):
            for values in itertools.product(domain, repeat=len(params)):
                checked += 1
                if deadline is not None and checked % 256 == 0 and time.monotonic() > deadline:
                    logger.warning("countermodel search ran out of time at size %d after %d candidates", size, checked)
                    return None
                h = dict(zip(params, values))
                if all(eval_sentence(M, h, phi) for phi in todo):
                    logger.debug("model of size %d found after %d candidates", size, checked)
                    return M, h
    return None
