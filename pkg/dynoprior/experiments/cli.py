"""
Command line interface

    dynoprior <experiment> [flags]
    dynoprior run --config FILE [--seed N] [--out DIR] [--set KEY=VALUE ...]
"""
import argparse
import logging
import os
import sys

import yaml

from .config import ExperimentConfig
from .runner import run, MANIFEST
from .. import __version__
from ..errors import ParameterError
from ..parameters.example_parameters import EXPERIMENT_PARAMETERS, DEFAULT_SYSTEMS
from ..systems.catalog import SYSTEMS

logger = logging.getLogger(__name__)

# flag name -> parameter key, for every experiment subcommand
FLAGS = {
    "sindy": {
        "noise": dict(type = float, nargs = "+", help = "noise amplitudes n of U(-n, n)"),
        "deriv": dict(choices = ["fd", "spectral", "network"], help = "derivative estimator"),
        "dmax": dict(key = "d_max", type = int, help = "library degree"),
        "threshold": dict(type = float, help = "STLSQ threshold"),
        "activation": dict(choices = ["sinc", "gaussian", "sine", "relu"], help = "network activation"),
        "omega": dict(type = float, help = "activation bandwidth"),
        "iterations": dict(type = int, help = "training iterations"),
    },
    "modes": {
        "method": dict(choices = ["tdd", "nd", "both"], help = "decomposition"),
        "samples": dict(type = int, help = "number of samples"),
        "ratio": dict(type = float, help = "dominance ratio sigma_i / sigma_1"),
        "observed": dict(type = int, help = "observed state component"),
        "iterations": dict(type = int, help = "training iterations"),
    },
    "embed": {
        "pipeline": dict(choices = ["raw", "surrogate"], help = "Hankel matrix source"),
        "noise": dict(type = float, help = "noise amplitude n of U(-n, n)"),
        "spacing": dict(choices = ["uniform", "random", "sparse"], help = "sample spacing"),
        "k": dict(type = int, help = "embedding dimension"),
        "iterations": dict(type = int, help = "training iterations"),
    },
    "forecast": {
        "ntraj": dict(type = int, help = "number of trajectories"),
        "nsnap": dict(type = int, help = "snapshots per trajectory"),
        "dt": dict(type = float, help = "time between snapshots"),
        "model": dict(choices = ["net", "dmd", "both"], help = "models to fit"),
        "steps": dict(type = int, help = "rollout steps"),
        "x0": dict(choices = ["inbounds", "far"], help = "rollout start"),
        "iterations": dict(type = int, help = "training iterations"),
    },
    "sweep": {
        "activation": dict(choices = ["sinc", "gaussian", "sine", "relu"], help = "activation"),
        "omegas": dict(type = float, nargs = "+", help = "bandwidths"),
        "seeds": dict(type = int, nargs = "+", help = "initialisation seeds"),
    },
    "puc": {
        "activation": dict(choices = ["sinc", "gaussian", "sine", "relu"], help = "generator"),
        "K": dict(type = int, help = "truncation of the shift sum"),
        "omega": dict(type = float, help = "gaussian bandwidth"),
    },
}


def parse_assignment(text):
    """
    Parses KEY=VALUE, reading VALUE as YAML (so 0.5, [1, 2] and
    true have their natural types)
    """
    if "=" not in text:
        raise argparse.ArgumentTypeError(f'expected KEY=VALUE, got {text!r}')
    key, value = text.split("=", 1)
    return key.strip(), yaml.safe_load(value)


def add_common(parser, with_system = True):
    if with_system:
        parser.add_argument("--system", choices = sorted(SYSTEMS), help = "catalog system")
    parser.add_argument("--seed", type = int, help = "master seed (default: 0)")
    parser.add_argument("--out", help = "output directory (default: results/<experiment>)")
    parser.add_argument("--set", action = "append", type = parse_assignment, default = [],
                        metavar = "KEY=VALUE", help = "override any parameter")
    parser.add_argument("-v", "--verbose", action = "store_true", help = "debug logging")
    parser.add_argument("-q", "--quiet", action = "store_true", help = "warnings and errors only")


def build_parser():
    parser = argparse.ArgumentParser(
        prog = "dynoprior",
        description = "Coordinate networks as priors for dynamical systems"
    )
    parser.add_argument("--version", action = "version", version = f'dynoprior {__version__}')
    sub = parser.add_subparsers(dest = "command", required = True)

    for name, flags in FLAGS.items():
        defaults = EXPERIMENT_PARAMETERS[name]()
        system = DEFAULT_SYSTEMS[name]
        p = sub.add_parser(name, help = f'run the {name} experiment')
        add_common(p, with_system = system is not None)
        for flag, spec in flags.items():
            spec = dict(spec)
            key = spec.pop("key", flag)
            spec["help"] = f'{spec["help"]} (default: {defaults[key]})'
            p.add_argument(f'--{flag}', dest = f'par_{key}', **spec)

    p = sub.add_parser("run", help = "run an experiment described by a YAML config file")
    p.add_argument("--config", required = True, help = "YAML file with experiment, system, seed, "
                   "output_dir, physical and computational sections")
    add_common(p)

    return parser


def configure_logging(args):
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(level = level, format = "%(asctime)s %(name)s %(levelname)s: %(message)s")


def make_config(args):
    """
    Builds the effective config: experiment defaults (or the config
    file), then command line flags
    """
    if args.command == "run":
        config = ExperimentConfig.from_yaml(args.config)
    else:
        config = ExperimentConfig(args.command, output_dir = os.path.join("results", args.command))

    if getattr(args, "system", None):
        config.system = args.system
    if args.seed is not None:
        config.seed = args.seed
    if args.out:
        config.output_dir = args.out

    for dest, value in vars(args).items():
        if dest.startswith("par_") and value is not None:
            config.parameters.update(dest[4:], value)

    for key, value in args.set:
        config.parameters.update(key, value)

    return config


def main(argv = None):
    args = build_parser().parse_args(argv)
    configure_logging(args)

    try:
        config = make_config(args)
    except (ParameterError, OSError, yaml.YAMLError) as err:
        logger.error("invalid configuration: %s", err)
        return 2

    manifest = run(config)
    logger.info("Manifest written to %s", os.path.join(str(config.output_dir), MANIFEST))
    return 0 if manifest.ok else 1


if __name__ == "__main__":
    sys.exit(main())
