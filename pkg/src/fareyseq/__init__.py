"""Farey sequences through the triple recursion, and the prime sieves it yields."""

from .core import (
    CreationRegistry,
    created,
    generate,
    generate_classic,
    initial_sequence,
    iter_sequences,
    iter_step,
    iter_triples,
    mediant,
    next_term,
    registry,
    step,
    totient,
    totient_summatory,
)
from .errors import (
    ComputationCapExceeded,
    FareyError,
    FareyOverflowError,
    InvariantError,
    TruncationExhausted,
)
from .model import CreatedFraction, FareySequence, FareyTriple, Fraction

__version__ = "0.1.0"

__all__ = [
    "ComputationCapExceeded",
    "CreatedFraction",
    "CreationRegistry",
    "FareyError",
    "FareyOverflowError",
    "FareySequence",
    "FareyTriple",
    "Fraction",
    "InvariantError",
    "TruncationExhausted",
    "created",
    "generate",
    "generate_classic",
    "initial_sequence",
    "iter_sequences",
    "iter_step",
    "iter_triples",
    "mediant",
    "next_term",
    "registry",
    "step",
    "totient",
    "totient_summatory",
]
