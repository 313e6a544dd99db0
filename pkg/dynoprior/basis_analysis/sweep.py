import logging
from dataclasses import dataclass, field

import numpy as np

from .lipschitz import estimate_lipschitz, stable_rank
from ..coordnet.activations import make_activation
from ..coordnet.network import init
from ..concurrency import parallel_map
from ..tables import write_table

logger = logging.getLogger(__name__)


@dataclass(frozen = True, eq = False)
class SweepResult():
    """
    Class for storing an omega sweep

    omegas:                 the bandwidths, in the order given
    lipschitz_estimates:    median over seeds of the Lipschitz estimate
    stable_ranks:           median over seeds of the penultimate stable rank
    seeds:                  the initialisation seeds
    records:                one (omega, seed, lipschitz, stable_rank)
                            tuple per sub-run
    """
    omegas: np.ndarray
    lipschitz_estimates: np.ndarray
    stable_ranks: np.ndarray
    seeds: tuple
    records: list = field(default_factory = list)


def sweep_point(widths, kind, omega, seed, samples, layer_k = None):
    """
    Lipschitz estimate and penultimate stable rank of one freshly
    initialised network
    """
    net = init(widths, make_activation(kind, omega), seed)
    lip = estimate_lipschitz(net, samples, layer_k)
    rank = stable_rank(net.features(samples))
    return lip, rank


def omega_sweep(widths, kind, omegas, samples, seeds, layer_k = None):
    """
    For every omega and seed, initialises a network and records the
    Lipschitz estimate of its last hidden layer and the stable rank of
    its penultimate features on the sample inputs.  The sub-runs are
    independent and run in parallel.
    """
    omegas = np.asarray(omegas, dtype = float)
    seeds = tuple(int(s) for s in seeds)
    if omegas.size < 3:
        raise ValueError('an omega sweep needs at least 3 omega values')
    if len(seeds) < 3:
        raise ValueError('an omega sweep needs at least 3 seeds')

    samples = np.atleast_2d(np.asarray(samples, dtype = float))
    jobs = [(omega, seed) for omega in omegas for seed in seeds]

    results = parallel_map(
        lambda job: sweep_point(widths, kind, job[0], job[1], samples, layer_k), jobs
    )

    records = [(omega, seed, lip, rank) for (omega, seed), (lip, rank) in zip(jobs, results)]
    lips = np.array([r[0] for r in results]).reshape(omegas.size, len(seeds))
    ranks = np.array([r[1] for r in results]).reshape(omegas.size, len(seeds))

    result = SweepResult(omegas, np.median(lips, axis = 1), np.median(ranks, axis = 1), seeds, records)

    for omega, lip, rank in zip(omegas, result.lipschitz_estimates, result.stable_ranks):
        logger.info("%s omega = %g: median Lipschitz %.4g, median stable rank %.4g", kind, omega, lip, rank)

    return result


def write_sweep_csv(path, result):
    write_table(path, ["omega", "seed", "lipschitz", "stable_rank"], result.records)
