"""Translations between classical, intuitionistic and linear logic, with a
rewriting engine, a bounded sequent prover and finite countermodel search."""

__version__ = "0.1.0"
