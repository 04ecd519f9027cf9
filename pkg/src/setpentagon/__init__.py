"""Set-theoretical solutions of the pentagon equation on finite semigroups."""
from .semigroup import (DomainError, FiniteSemigroup, MalformedTable, NotAssociative,
                        enumerate_semigroups)
from .solution import (ClassificationFlags, NotASolution, PentagonSolution, classify,
                       solutions_isomorphic, verify_pentagon_direct, verify_solution)
from .search import SearchOptions, census, enumerate_solutions
from .lab import run_catalog, standard_instances

__all__ = [
    "FiniteSemigroup", "MalformedTable", "NotAssociative", "DomainError",
    "enumerate_semigroups", "PentagonSolution", "NotASolution", "ClassificationFlags",
    "classify", "verify_solution", "verify_pentagon_direct", "solutions_isomorphic",
    "SearchOptions", "census", "enumerate_solutions", "run_catalog", "standard_instances",
]
