"""Finite structures, teams, Tarski evaluation and the team/definition conversions."""

from .definitions import canonical_team_definition, team_of_definition
from .enumeration import count_structures, element_names, enumerate_structures
from .errors import FileFormatError, ModelError, TeamDomainError, UnboundVariableError
from .evaluation import eval_fo, eval_sentence, eval_term
from .loader import (
    Scanner,
    parse_structure,
    parse_structures,
    parse_team,
    parse_teams,
    structure_to_text,
    team_to_text,
)
from .structure import Element, ElementTuple, Structure
from .team import (
    Assignment,
    ParamAssignment,
    Team,
    all_teams,
    count_x_variations,
    enumerate_x_variations,
    full_team,
    is_x_variation,
    row_assignment,
    subteams,
    team_extend_universal,
    team_restrict,
)

__all__ = [
    "canonical_team_definition",
    "team_of_definition",
    "count_structures",
    "element_names",
    "enumerate_structures",
    "FileFormatError",
    "ModelError",
    "TeamDomainError",
    "UnboundVariableError",
    "eval_fo",
    "eval_sentence",
    "eval_term",
    "Scanner",
    "parse_structure",
    "parse_structures",
    "parse_team",
    "parse_teams",
    "structure_to_text",
    "team_to_text",
    "Element",
    "ElementTuple",
    "Structure",
    "Assignment",
    "ParamAssignment",
    "Team",
    "all_teams",
    "count_x_variations",
    "enumerate_x_variations",
    "full_team",
    "is_x_variation",
    "row_assignment",
    "subteams",
    "team_extend_universal",
    "team_restrict",
]
