"""Named test curves used by the reproduction suite and the tests."""
from __future__ import annotations

from . import ade
from .curve import CurveSpec, curve_from_lists
from .series import RATIONALS, FieldSpec


def _plane(field, branches):
    return curve_from_lists(field, branches, names=("x", "y"))


def extra_curves(field: FieldSpec = RATIONALS) -> dict:
    """Non-catalog members of the corpus, keyed by name."""
    out = {
        "node_axes": _plane(field, [[{1: 1}, {}], [{}, {1: 1}]]),
        "node_diagonals": _plane(field, [[{1: 1}, {1: 1}], [{1: 1}, {1: -1}]]),
    }
    for k in range(1, 6):
        out[f"t2_t{2 * k + 1}"] = _plane(field, [[{2: 1}, {2 * k + 1: 1}]])
    out["t3_t7"] = _plane(field, [[{3: 1}, {7: 1}]])
    out["t4_t6+t7"] = _plane(field, [[{4: 1}, {6: 1, 7: 1}]])
    out["space_axes3"] = curve_from_lists(
        field, [[{1: 1}, {}, {}], [{}, {1: 1}, {}], [{}, {}, {1: 1}]], names=("x", "y", "z"))
    out["lines3"] = _plane(field, [[{1: 1}, {}], [{}, {1: 1}], [{1: 1}, {1: 1}]])
    out["lines4"] = _plane(field, [[{1: 1}, {}], [{}, {1: 1}], [{1: 1}, {1: 1}], [{1: 1}, {1: -1}]])
    out["smooth"] = _plane(field, [[{1: 1}, {3: 1}]])
    return out


def catalog_curves(field: FieldSpec = RATIONALS, families: str = "ADE") -> dict:
    out = {}
    for cls in ade.catalog_classes():
        if cls.family in families:
            out[str(cls)] = ade.catalog_curve(cls, field)
    return out


def full_corpus(field: FieldSpec = RATIONALS) -> dict:
    out = catalog_curves(field)
    out.update(extra_curves(field))
    return out


def is_plane(c: CurveSpec) -> bool:
    from . import engine
    return engine.embedding_dimension(c) <= 2
