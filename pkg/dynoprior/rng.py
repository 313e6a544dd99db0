"""
Random number generation.  All randomness in the package comes from
numpy Generators backed by the counter-based Philox bit generator, which
produces the same stream on every platform for a given seed.
"""
import numpy as np


def make_rng(seed):
    """
    Returns a Philox-backed numpy Generator for the given seed
    """
    return np.random.Generator(np.random.Philox(int(seed)))


def spawn_seeds(seed, count):
    """
    Derives count independent integer seeds from a parent seed, used
    when sub-runs (trajectories, noise levels, sweep points) execute in
    parallel and must not depend on scheduling
    """
    children = np.random.SeedSequence(int(seed)).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint32)[0]) for c in children]
