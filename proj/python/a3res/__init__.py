"""Free resolutions of A3 quiver orbit closures."""

from ._a3res import (
    BettiEntry,
    BettiTable,
    Flag,
    bott,
    codim,
    f1_closed_form,
    generators,
    gorenstein,
    hom_ext,
    lr,
    normality,
    reineke_flag,
    resolve,
    scan,
    self_dual,
    top_term,
)

__all__ = [
    "BettiEntry",
    "BettiTable",
    "Flag",
    "bott",
    "codim",
    "f1_closed_form",
    "generators",
    "gorenstein",
    "hom_ext",
    "lr",
    "normality",
    "reineke_flag",
    "resolve",
    "scan",
    "self_dual",
    "top_term",
]
