"""Exact truncated p-adic arithmetic and super-congruence verification."""

from ._core import (
    PadicNum,
    SupercongError,
    angle,
    c_value,
    evaluate,
    fermat_quotient,
    from_rational,
    gen_binom,
    harmonic,
    legendre,
    pow_residue,
    registry_ids,
    registry_info,
    represent,
    sequence_exact,
    sequence_mod,
    u_sequence,
    verify,
)

__all__ = [
    "PadicNum",
    "SupercongError",
    "angle",
    "c_value",
    "evaluate",
    "fermat_quotient",
    "from_rational",
    "gen_binom",
    "harmonic",
    "legendre",
    "pow_residue",
    "registry_ids",
    "registry_info",
    "represent",
    "sequence_exact",
    "sequence_mod",
    "u_sequence",
    "verify",
]
