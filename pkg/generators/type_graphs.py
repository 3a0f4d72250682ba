"""
Type Graph Models
Configuration-model (Molloy-Reed) and preferential-attachment type graphs
"""

from typing import List, Sequence, Set, Tuple

import numpy as np
from robot.api import logger

from generators.degree_profiles import expcutoff_profile
from generators.known_iid import TypeGraph
from graphs.bipartite_graph import BipartiteGraph
from graphs.trial_seed import as_trial_seed

__all__ = ['configuration_model_typegraph', 'molloy_reed_typegraph', 'pref_attachment_typegraph']

DEFAULT_RETRY_CAP = 100


def _trim_stubs(stubs: np.ndarray, excess: int, rng: np.random.Generator) -> np.ndarray:
    """Remove ``excess`` stubs chosen uniformly at random."""
    drop = rng.choice(len(stubs), size=excess, replace=False)
    keep = np.ones(len(stubs), dtype=bool)
    keep[drop] = False
    return stubs[keep]


def configuration_model_typegraph(offline_degrees: Sequence[int], online_degrees: Sequence[int],
                                  rng: np.random.Generator,
                                  retry_cap: int = DEFAULT_RETRY_CAP) -> BipartiteGraph:
    """
    Bipartite configuration model.

    Stubs of the larger side are trimmed uniformly at random until both
    sides have equal stub counts, then stubs are paired uniformly. A pair
    that duplicates an existing edge is resampled by swapping its online
    stub with a random accepted edge (degrees preserved); after retry_cap
    failed swaps the stub pair is dropped.

    Args:
        offline_degrees: Target offline degrees
        online_degrees: Target online degrees
        rng: Random stream owned by the caller
        retry_cap: Swap attempts per colliding pair

    Returns:
        Simple BipartiteGraph
    """
    off = np.asarray(offline_degrees, dtype=np.int64)
    on = np.asarray(online_degrees, dtype=np.int64)
    off_stubs = np.repeat(np.arange(len(off)), off)
    on_stubs = np.repeat(np.arange(len(on)), on)
    if len(off_stubs) > len(on_stubs):
        logger.debug(f"Trimming {len(off_stubs) - len(on_stubs)} offline stubs")
        off_stubs = _trim_stubs(off_stubs, len(off_stubs) - len(on_stubs), rng)
    elif len(on_stubs) > len(off_stubs):
        logger.debug(f"Trimming {len(on_stubs) - len(off_stubs)} online stubs")
        on_stubs = _trim_stubs(on_stubs, len(on_stubs) - len(off_stubs), rng)
    on_stubs = rng.permutation(on_stubs)

    accepted: List[Tuple[int, int]] = []
    present: Set[Tuple[int, int]] = set()
    dropped = 0
    for u, v in zip(off_stubs.tolist(), on_stubs.tolist()):
        if (u, v) not in present:
            present.add((u, v))
            accepted.append((u, v))
            continue
        for _ in range(retry_cap):
            if not accepted:
                break
            j = int(rng.integers(len(accepted)))
            c, d = accepted[j]
            if (u, d) in present or (c, v) in present:
                continue
            present.discard((c, d))
            present.add((u, d))
            present.add((c, v))
            accepted[j] = (c, v)
            accepted.append((u, d))
            break
        else:
            dropped += 1
    if dropped:
        logger.info(f"Configuration model dropped {dropped} colliding stub pairs")
    return BipartiteGraph.from_edges(len(off), len(on), accepted)


def molloy_reed_typegraph(n: int, m: int, alpha: float, lam: float, seed=None,
                          tail_eps: float = 1e-9,
                          retry_cap: int = DEFAULT_RETRY_CAP) -> TypeGraph:
    """
    Type graph with power-law-with-cutoff degrees on both sides.

    Degrees are drawn i.i.d. from expcutoff_profile(alpha, lam) and capped at
    the opposite side's size; the type distribution is uniform.

    Args:
        n: Offline nodes
        m: Online type nodes
        alpha: Power-law exponent
        lam: Exponential cutoff scale
        seed: TrialSeed or int; the "graph" stream is used
        tail_eps: Truncation of the degree distribution
        retry_cap: Collision swap attempts

    Returns:
        TypeGraph with uniform distribution
    """
    profile = expcutoff_profile(alpha, lam, tail_eps)
    rng = as_trial_seed(seed).rng("graph")
    degrees = profile.degrees.astype(np.int64)
    offline = np.minimum(rng.choice(degrees, size=n, p=profile.fractions), m)
    online = np.minimum(rng.choice(degrees, size=m, p=profile.fractions), n)
    base = configuration_model_typegraph(offline, online, rng, retry_cap)
    logger.info(f"Molloy-Reed type graph: n={n} m={m} edges={base.edge_count}")
    return TypeGraph.uniform(base)


def pref_attachment_typegraph(n: int, m: int, edges_per_step: int = 1, seed=None,
                              retry_cap: int = DEFAULT_RETRY_CAP) -> TypeGraph:
    """
    Type graph grown by preferential attachment.

    ``edges_per_step * m`` edges are inserted one at a time; each endpoint is
    picked with probability proportional to its current degree + 1. A pick
    that repeats an existing edge is redrawn up to retry_cap times, then
    skipped.

    Args:
        n: Offline nodes
        m: Online type nodes
        edges_per_step: Edges inserted per online type node
        seed: TrialSeed or int; the "graph" stream is used
        retry_cap: Redraws per duplicate

    Returns:
        TypeGraph with uniform distribution
    """
    if n < 1 or m < 1 or edges_per_step < 0:
        raise ValueError(f"Preferential attachment needs n, m >= 1 (got n={n}, m={m})")
    rng = as_trial_seed(seed).rng("graph")
    # urns hold every node once plus once per incident edge
    offline_urn = list(range(n))
    online_urn = list(range(m))
    present: Set[Tuple[int, int]] = set()
    for _ in range(edges_per_step * m):
        for _ in range(retry_cap):
            u = offline_urn[int(rng.integers(len(offline_urn)))]
            v = online_urn[int(rng.integers(len(online_urn)))]
            if (u, v) not in present:
                present.add((u, v))
                offline_urn.append(u)
                online_urn.append(v)
                break
    base = BipartiteGraph.from_edges(n, m, present)
    logger.info(f"Preferential-attachment type graph: n={n} m={m} edges={base.edge_count}")
    return TypeGraph.uniform(base)
