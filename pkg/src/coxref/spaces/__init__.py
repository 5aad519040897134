"""Concrete geodesic-space models with isometric reflection-group actions."""

from coxref.spaces.base import Membership, Side, SpaceModel
from coxref.spaces.cayley import CayleyModel, CayleyPoint
from coxref.spaces.geometry import (
    Descent,
    chamber_membership,
    descend,
    gallery_distance,
    minimal_wall_set,
    side,
)
from coxref.spaces.line import LineModel
from coxref.spaces.tiling import tile, tiling_json, tiling_svg
from coxref.spaces.triangle import TYPES, TriangleModel
from coxref.spaces.verify import (
    Report,
    WallNeighborhoodWitness,
    chamber_stabilizer_check,
    lemma4_report,
    properness_check,
    properness_report,
    run_check,
    verify_lemma1,
    verify_lemma2,
    verify_lemma4,
    verify_lemma5,
    verify_lemma6,
)


def make_model(spec):
    """Model from a short spec: ``line``, ``244``/``tri244``, ``cayley:A3``, ``cayley:path/to/matrix.txt``."""
    from coxref.core.matrix import resolve_matrix

    spec = spec.strip()
    if spec == "line":
        return LineModel()
    kind = spec.removeprefix("tri:").removeprefix("tri")
    if kind in TYPES:
        return TriangleModel(kind)
    if spec.startswith("cayley:"):
        source = spec.split(":", 1)[1]
        return CayleyModel(resolve_matrix(source), name=f"cayley:{source}")
    raise ValueError(f"unknown model {spec!r}: use line, 244, 333, 236 or cayley:<matrix>")


__all__ = [
    "CayleyModel", "CayleyPoint", "Descent", "LineModel", "Membership", "Report", "Side",
    "SpaceModel", "TYPES", "TriangleModel", "WallNeighborhoodWitness", "chamber_membership",
    "chamber_stabilizer_check", "descend", "gallery_distance", "lemma4_report", "make_model",
    "minimal_wall_set", "properness_check", "properness_report", "run_check", "side", "tile",
    "tiling_json", "tiling_svg", "verify_lemma1", "verify_lemma2", "verify_lemma4",
    "verify_lemma5", "verify_lemma6",
]
