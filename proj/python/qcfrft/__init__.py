"""Quaternion coupled fractional Fourier transforms on 4-D lattices.

Signals are float64 arrays of shape (N1, N2, N3, N4, 4) holding (w, x, y, z)
per sample on a centered lattice with spacing ``delta``.
"""

import json

from ._core import (
    CoupledPair,
    FormatError,
    Params,
    Spectrum,
    TimeFreq,
    box_window_stqcfrft,
    cerf,
    gaussian_qcfrft,
    hy_check,
    lieb,
    load,
    qcfrft,
    qcfrft_at,
    qcfrft_inverse,
    qft,
    renyi_up,
    run_command,
    save,
    shannon_up,
    stqcfrft,
    stqcfrft_reconstruct,
)


def verify(suite="all", size=6, seed=42):
    """Runs a verification suite and returns the report as a dict."""
    from ._core import verify_json

    return json.loads(verify_json(suite, size, seed))


__all__ = [
    "CoupledPair",
    "FormatError",
    "Params",
    "Spectrum",
    "TimeFreq",
    "box_window_stqcfrft",
    "cerf",
    "gaussian_qcfrft",
    "hy_check",
    "lieb",
    "load",
    "qcfrft",
    "qcfrft_at",
    "qcfrft_inverse",
    "qft",
    "renyi_up",
    "run_command",
    "save",
    "shannon_up",
    "stqcfrft",
    "stqcfrft_reconstruct",
    "verify",
]
