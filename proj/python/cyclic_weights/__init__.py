"""Cyclic modules and cyclic diagrams for GL_2 over a local field."""

import json as _json

from ._core import (
    BChar,
    ChainResult,
    CyclicModule,
    ExtensionPair,
    InvariantViolation,
    Params,
    Weight,
    build_chain,
    build_cyclic_module,
    chi,
    classify_isomorphic,
    gr1_weights,
    is_generic,
    is_multiplicity_free,
    jh_factors,
    make_bchar,
    make_cyclic_module,
    make_weight,
    mu_power,
    mu_power_by_composition,
    run_cli,
    s_conjugate,
    s_dual,
    t_invariant,
    u_invariant_characters,
    validate_cyclic_module,
    weight_from_char,
)
from ._core import find_cycles_json as _find_cycles_json
from ._core import verify_mu_lemma_json as _verify_mu_lemma_json


def verify_mu_lemma(params, workers=1):
    return _json.loads(_verify_mu_lemma_json(params, workers))


def find_cycles(start, max_len, budget=10_000_000):
    return _json.loads(_find_cycles_json(start, max_len, budget))
