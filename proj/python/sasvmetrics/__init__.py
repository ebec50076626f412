"""Spoofing-robust speaker verification metrics.

Scores are 1-D float arrays; labels are integer arrays with 0 = target,
1 = nontarget, 2 = spoof. Every function forwards to the native library and
returns exactly what it computes. Library errors are raised as
``SasvError`` (a ``ValueError``) whose ``name`` attribute is the library
error name, e.g. ``EmptyClassError``.
"""

from collections import namedtuple
from collections.abc import Mapping

from . import _sasvmetrics as _native
from ._sasvmetrics import CostModel, SasvError, __version__

__all__ = [
    "CostModel",
    "SasvError",
    "EerEntry",
    "cost_model",
    "min_adcf",
    "eers",
    "min_tdcf",
    "gate_scores",
    "__version__",
]

TARGET, NONTARGET, SPOOF = 0, 1, 2

EerEntry = namedtuple("EerEntry", ["value", "threshold", "discouraged"])

_COST_KEYS = ("pi_tar", "pi_non", "pi_spf", "c_miss", "c_fa_non", "c_fa_spf")


def cost_model(config="adcf1"):
    """Resolve a preset name, config file path, mapping or CostModel."""
    if isinstance(config, CostModel):
        return config
    if isinstance(config, Mapping):
        return CostModel(**{k: float(config[k]) for k in _COST_KEYS})
    return _native.load_cost_model(str(config))


def min_adcf(scores, labels, config="adcf1"):
    """Minimum normalised a-DCF and the smallest threshold attaining it."""
    return _native.min_adcf(scores, labels, cost_model(config))


def eers(scores, labels, include_sasv=False):
    """SV-EER and SPF-EER (and the discouraged SASV-EER on request)."""
    out = {}
    for name, value, threshold in _native.eers(scores, labels, include_sasv):
        out[name] = EerEntry(value, threshold, name == "sasv_eer")
    return out


def min_tdcf(asv_scores, cm_scores, labels, config="adcf1", frozen_t_asv=None):
    """Minimum normalised t-DCF of an ASV + CM AND-gate cascade.

    Returns ``(value, t_asv, t_cm)``; with ``frozen_t_asv`` only the CM
    threshold is searched.
    """
    return _native.min_tdcf(asv_scores, cm_scores, labels, cost_model(config), frozen_t_asv)


def gate_scores(asv_scores, cm_scores, order="cm-first", t_gate=0.0):
    """Single score per trial: the second system's score if the first passes
    the gate, otherwise ``-inf``."""
    return _native.gate_scores(asv_scores, cm_scores, order, float(t_gate))
