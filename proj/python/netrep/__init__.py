"""Exact decisions about network and submodular representability of cost
functions over finite domains.

The compiled module speaks JSON strings; these wrappers expose the same
operations over plain dicts and lists. Rationals travel as strings like
"3/2" or "inf" so nothing is ever rounded.
"""

import json as _json

from . import _netrep as _core

__all__ = [
    "builtin_function",
    "check_property",
    "scale_shift",
    "partial_min",
    "complement_function",
    "brute_force_min",
    "standard_encoding",
    "bar_encoding",
    "encode_tuple",
    "retract_blocks",
    "gadget",
    "min_cut",
    "c_min",
    "is_retractable",
    "eval_representation",
    "complement_network",
    "decide_representable",
    "verify_witness",
    "closure_meet_join",
    "refutation",
    "cone_rays",
    "feasible",
]


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def builtin_function(name, k=0):
    return _json.loads(_core.builtin_function(name, k))


def check_property(function, property):
    return _json.loads(_core.check_property(_dump(function), property))


def scale_shift(function, alpha, beta):
    return _json.loads(_core.scale_shift(_dump(function), str(alpha), str(beta)))


def partial_min(function, drop):
    return _json.loads(_core.partial_min(_dump(function), drop))


def complement_function(function):
    return _json.loads(_core.complement_function(_dump(function)))


def brute_force_min(function):
    return _json.loads(_core.brute_force_min(_dump(function)))


def standard_encoding(name, k=0):
    return _json.loads(_core.standard_encoding(name, k))


def bar_encoding(encoding):
    return _json.loads(_core.bar_encoding(_dump(encoding)))


def encode_tuple(encoding, labels):
    return _core.encode_tuple(_dump(encoding), [str(v) for v in labels])


def retract_blocks(encoding, bits):
    return _core.retract_blocks(_dump(encoding), bits)


def gadget(name):
    return _json.loads(_core.gadget(name))


def min_cut(network):
    return _json.loads(_core.min_cut(_dump(network)))


def c_min(network, pin):
    return _core.c_min(_dump(network), pin)


def is_retractable(network, encoding):
    return _json.loads(_core.is_retractable(_dump(network), _dump(encoding)))


def eval_representation(network, encoding, kappa="0"):
    return _json.loads(_core.eval_representation(_dump(network), _dump(encoding), str(kappa)))


def complement_network(network):
    return _json.loads(_core.complement_network(_dump(network)))


def decide_representable(function, encoding):
    return _json.loads(_core.decide_representable(_dump(function), _dump(encoding)))


def verify_witness(witness, function, encoding):
    return _core.verify_witness(_dump(witness), _dump(function), _dump(encoding))


def closure_meet_join(points):
    return list(_core.closure_meet_join(list(points)))


def refutation(omega, k, function):
    return _json.loads(_core.refutation(omega, k, _dump(function)))


def cone_rays(n, encoding, include_st=False):
    return _json.loads(_core.cone_rays(n, _dump(encoding), include_st))


def feasible(system):
    return _json.loads(_core.feasible(_dump(system)))
