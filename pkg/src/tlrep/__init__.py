"""Indecomposable modules over the Temperley-Lieb and dilute Temperley-Lieb
algebras at a root of unity: classification, structure, homology, branching
functors and Auslander-Reiten quivers."""

__version__ = "0.1.0"

from .catalog import Alias, AliasSpec, Indec, Kind, ModuleSum, normalize
from .errors import DomainError, ParseError
from .orbits import AlgebraCtx, Family

__all__ = [
    "AlgebraCtx",
    "Alias",
    "AliasSpec",
    "DomainError",
    "Family",
    "Indec",
    "Kind",
    "ModuleSum",
    "ParseError",
    "normalize",
]
