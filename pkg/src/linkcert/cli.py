"""linkcert command line: run certificate suites and report them.

Exit status: 0 when every certificate is verified, 1 when one fails,
2 for usage errors (bad flags, inadmissible p, malformed expressions).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import __version__
from . import certificates as C
from .algebra import make_algebra
from .errors import LinkcertError
from .expressions import parse_element
from .scalars import PrimeParam

DEFAULT_SEED = 42
DEFAULT_SAMPLES = {"trace": 200, "char0": 20, "norm-residue": 20}
LONG_NOTE = {
    "char0": "p >= 5 needs --long (p^2 algebras with sampled p x p reduced norms over "
             "Q(zeta_p)(a, b); about half a minute at p = 5 with 20 samples)",
    "lemma-useful": "p >= 5 needs --long (24-dimensional span eliminations over "
                    "F_p(A, B); a few seconds at p = 5, growing quickly with p)",
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    p: int
    samples: int
    seed: int
    output: str
    long_running: bool
    part: int = None
    i: int = None
    j: int = None
    element: str = None


def _workers_default():
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _call(task):
    fn, args = task
    return fn(*args)


def _run_tasks(tasks, workers):
    """Results in task order, whatever the completion order."""
    if workers <= 1 or len(tasks) <= 1:
        return [_call(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_call, tasks))


# ---------------------------------------------------------------------------
# suites


def _charp(cfg, workers):
    family = C.charp_family(cfg.p)
    ram = _run_tasks([(C.totally_ramified_certificate, (s, ix)) for ix, s in family], workers)
    prof = _run_tasks([(C.coset_profile_certificate, (s, ix)) for ix, s in family], workers)
    certs = ram + prof
    if all(c.verified for c in ram):
        certs.append(C.profile_intersection([C.coset_profile(s) for _, s in family]))
    return certs


def _profile(cfg, workers):
    p = cfg.p
    if not (0 <= cfg.i < p and 0 <= cfg.j < p) or (cfg.i, cfg.j) == (0, 0):
        raise UsageError(f"--i/--j must lie in 0..{p - 1}, not both 0")
    ix, spec = next((ix, s) for ix, s in C.charp_family(p) if (ix.i, ix.j) == (cfg.i, cfg.j))
    ram = C.totally_ramified_certificate(spec, ix)
    if not ram.verified:
        return [ram]
    return [ram, C.coset_profile_certificate(spec, ix)]


def _needs_long(cfg):
    if cfg.p >= 5 and not cfg.long_running:
        raise UsageError(LONG_NOTE[cfg.command])


def _char0(cfg, workers):
    _needs_long(cfg)
    family = C.char0_family(cfg.p)
    certs = [C.lemma_useful_W(cfg.p)]
    certs += _run_tasks([(C.residue_degree_check, (s, ix)) for ix, s in family], workers)
    certs += _run_tasks([(C.norm_residue_certificate, (s, cfg.samples, cfg.seed, ix))
                         for ix, s in family], workers)
    return certs


def _norm_residue(cfg, workers):
    family = C.char0_family(cfg.p)
    if cfg.element is None:
        return _run_tasks([(C.norm_residue_certificate, (s, cfg.samples, cfg.seed, ix))
                           for ix, s in family], workers)
    certs = []
    for ix, spec in family:
        t = parse_element(cfg.element, make_algebra(spec))
        certs.append(C.norm_residue_check(spec, t, trace_zero=False, index=ix))
    return certs


def _trace(cfg, workers):
    return [C.trace_formula_certificate(cfg.p, cfg.samples, cfg.seed)]


def _lemma_useful(cfg, workers):
    if cfg.part == 1:
        return [C.lemma_useful_V(cfg.p)]
    _needs_long(cfg)
    return [C.lemma_useful_W(cfg.p)]


SUITES = {
    "charp": _charp,
    "char0": _char0,
    "trace": _trace,
    "lemma-useful": _lemma_useful,
    "norm-residue": _norm_residue,
    "profile": _profile,
}


def run(cfg, workers=1):
    """Certificates for one configuration, in canonical order."""
    return SUITES[cfg.command](cfg, workers)


def build_report(cfg, certs, timing=True):
    config = {k: v for k, v in asdict(cfg).items() if v is not None}
    return {
        "tool": "linkcert",
        "version": __version__,
        "config": config,
        "certificates": [c.to_json(timing) for c in certs],
        "overall": "pass" if all(c.verified for c in certs) else "fail",
    }


def render_json(report):
    return json.dumps(report, indent=2) + "\n"


def render_text(cfg, certs):
    tag = cfg.command.upper().replace("-", "_")
    lines = [f"{tag} p={cfg.p} {c.summary()}" for c in certs]
    ok = all(c.verified for c in certs)
    lines.append(f"{tag} p={cfg.p} overall {'PASS' if ok else 'FAIL'} seed={cfg.seed}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _seed(text):
    n = int(text)
    if not 0 <= n < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return n


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="odd prime degree (default 3)")
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    common.add_argument("--samples", type=_positive, default=None)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--long", action="store_true", help="allow long-running p >= 5 suites")
    common.add_argument("--out", default=None, help="write the report to this file")
    common.add_argument("--workers", type=_positive, default=None,
                        help="worker processes (default: available CPUs)")

    parser = argparse.ArgumentParser(prog="linkcert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"linkcert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("charp", parents=[common], help="char-p family: ramification and coset profiles")
    sub.add_parser("char0", parents=[common], help="char-0 family: W spans, residue degree, norm residues")
    sub.add_parser("trace", parents=[common], help="sampled reduced trace formula")
    lu = sub.add_parser("lemma-useful", parents=[common], help="trivial intersection of V_i or W_{i,j}")
    lu.add_argument("--part", type=int, choices=(1, 2), required=True)
    nr = sub.add_parser("norm-residue", parents=[common], help="residue of reduced norms")
    nr.add_argument("--element", default=None, help="check this element instead of random samples")
    pr = sub.add_parser("profile", parents=[common], help="coset profile of one algebra A_{i,j}")
    pr.add_argument("--i", type=int, required=True)
    pr.add_argument("--j", type=int, required=True)
    return parser


def config_from_args(args):
    p = int(PrimeParam(args.p))
    samples = args.samples if args.samples is not None else DEFAULT_SAMPLES.get(args.command, 1)
    return RunConfig(
        command=args.command,
        p=p,
        samples=samples,
        seed=args.seed,
        output="json" if args.json else "text",
        long_running=args.long,
        part=getattr(args, "part", None),
        i=getattr(args, "i", None),
        j=getattr(args, "j", None),
        element=getattr(args, "element", None),
    )


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        certs = run(cfg, args.workers or _workers_default())
    except (UsageError, LinkcertError) as exc:
        print(f"linkcert {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if cfg.output == "json":
        text = render_json(build_report(cfg, certs))
    else:
        text = render_text(cfg, certs)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(c.verified for c in certs) else 1
