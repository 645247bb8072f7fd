"""Distributed randomized min-cut simulator."""

import json

from ._dmincut import (
    ConfigError,
    Graph,
    GraphError,
    ProtocolError,
    brute_force_mincut,
    default_trial_count,
    generate,
    load_edge_list,
    parse_edge_list,
    run_trial,
    stoer_wagner_mincut,
)
from . import _dmincut

__all__ = [
    "ConfigError", "Graph", "GraphError", "ProtocolError", "brute_force_mincut",
    "default_trial_count", "generate", "load_edge_list", "parse_edge_list", "run_trial",
    "stoer_wagner_mincut", "run", "verify", "stats", "complexity",
]


def run(graph=None, gen=None, seed=1, trials=None, k=5, oracle="auto"):
    return json.loads(_dmincut.run_json(graph, gen, seed, trials, k, oracle))


def verify(graph=None, gen=None, seed=1, trials=None, graphs=1):
    return json.loads(_dmincut.verify_json(graph, gen, seed, trials, graphs))


def stats(graph=None, gen=None, seed=1, trials=None):
    return json.loads(_dmincut.stats_json(graph, gen, seed, trials))


def complexity(gen, sizes=(8, 16, 32), seed=1, trials=None):
    return json.loads(_dmincut.complexity_json(gen, list(sizes), seed, trials))
