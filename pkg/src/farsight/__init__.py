"""Farsightedly stable matchings for the stable marriage game."""
from importlib import resources

from .core import UNMATCHED, Instance, Matching, format_instance, parse_instance, rank_in_boy_list
from .gale_shapley import is_strictly_stable, last_proposal, solve_gs
from .linear import solve_farsighted_linear
from .reference import solve_farsighted_ref, solve_farsighted_ref_with_choice
from .ttc import first_top_cycle, solve_ttc

PAPER_EXAMPLES = ("paper_ex1", "paper_ex2_truthful", "paper_ex2_lied")


def example_path(name: str):
    return resources.files(__package__) / "data" / f"{name}.txt"


def load_example(name: str) -> Instance:
    return parse_instance(example_path(name).read_text(encoding="utf-8"), allow_partial=True)
