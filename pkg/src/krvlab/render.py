"""Shared text rendering for linear combinations.

All renderers in the package emit ASCII that the expression grammar parses
back, so rendered values round-trip.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def format_terms(pairs: Sequence[tuple[Fraction, str]]) -> str:
    """Render coefficient/atom pairs as "2*a + b - 1/2*c".

    An empty atom string stands for the unit and renders as the bare
    coefficient.  An empty sequence renders as "0".
    """
    if not pairs:
        return "0"
    chunks: list[str] = []
    for coeff, atom in pairs:
        mag = abs(coeff)
        if not atom:
            body = str(mag)
        elif mag == 1:
            body = atom
        else:
            body = f"{mag}*{atom}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)
