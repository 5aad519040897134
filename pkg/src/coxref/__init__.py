"""Exact computations with Coxeter systems, their reflection actions, and a Coxeter-system recognizer."""

__version__ = "0.1.0"
