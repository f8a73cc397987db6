"""Brute-force confirmation of a single mate."""
from __future__ import annotations

from ..closed_forms import FamilySpec
from ..graph import PineappleParams, make_pineapple
from ..spectra import is_cospectral

__all__ = ["OrderMismatch", "TrivialMate", "verify_mate"]


class OrderMismatch(ValueError):
    pass


class TrivialMate(AssertionError):
    """The candidate is the pineapple itself."""


def verify_mate(params: PineappleParams, spec: FamilySpec) -> bool:
    """Realize both graphs and compare exact characteristic polynomials."""
    if spec.order != params.order:
        raise OrderMismatch(f"{spec.describe()} has order {spec.order}, "
                            f"{params} has order {params.order}")
    if spec.iso_key() == ("path", params.as_mixed_extension().normal_form(), 0):
        raise TrivialMate(f"{spec.describe()} is isomorphic to {params}")
    return is_cospectral(make_pineapple(params), spec.realize())
