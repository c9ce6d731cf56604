"""Command-line entry point: ``holomatch <subcommand> ...``.

Exit codes: 0 success, 1 a verification or realizability check failed,
2 a file could not be parsed or the arguments were unusable.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .collapse_engine import CollapseResult, Domain3Outcome, collapse
from .doppler_app import doppler_bruteforce, doppler_holographic
from .errors import (BoundExceeded, HolomatchError, InvalidInstance, NoFullRankGenerator, ParseError,
                     RealizabilityFailed)
from .fileformats import (format_basis, format_signature, load_collapse_manifest, load_matchgrid,
                          parse_basis, parse_matchgate, parse_planar_graph, parse_signature)
from .holant_engine import holant_of_grid, holant_via_perfmatch
from .holo_transform import Basis, generator_to_standard, realizable_on
from .matchgate_fkt import perfmatch, standard_signature
from .scalar_linalg import format_scalar
from .signature_core import Signature, verify_standard

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(HolomatchError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _verdict(sig):
    """(passed, check name, witness text) for the parity test followed by the identities."""
    parity, failure = verify_standard(sig)
    if not parity:
        return False, "parity", f"nonzero entries at {parity.even_witness} and {parity.odd_witness}"
    if failure is not None:
        return False, "matchgate identities", failure.describe()
    return True, "matchgate identities", ""


# subcommands: each returns (exit code, report dict, text lines) -----------------

def cmd_perfmatch(args):
    value = perfmatch(parse_planar_graph(_read(args.graph)))
    return EXIT_OK, {"perfmatch": format_scalar(value)}, [format_scalar(value)]


def cmd_signature(args):
    gate = parse_matchgate(_read(args.matchgate))
    sig = standard_signature(gate, method=args.method)
    text = format_signature(sig)
    return EXIT_OK, {"signature": _signature_report(sig)}, text.splitlines()


def _signature_report(sig: Signature):
    report = {"k": sig.k, "n": sig.arity, "role": sig.role,
              "entries": [format_scalar(x) for x in sig.vector]}
    if sig.role == "transducer":
        report.update(outputs=sig.outputs, inputs=sig.inputs)
    return report


def cmd_verify(args):
    sig = parse_signature(_read(args.signature))
    passed, check, witness = _verdict(sig)
    report = {"result": "PASS" if passed else "FAIL", "check": check}
    if not passed:
        report["witness"] = witness
    lines = ["PASS"] if passed else [f"FAIL {check}: {witness}"]
    return (EXIT_OK if passed else EXIT_FAIL), report, lines


def cmd_transform(args):
    basis = parse_basis(_read(args.basis))
    if args.generator:
        G = parse_signature(_read(args.generator)).with_role("generator")
        underG = generator_to_standard(G, basis)
        passed, check, witness = _verdict(underG)
        report = {"realizable": passed, "standard": _signature_report(underG)}
        lines = format_signature(underG).splitlines()
        if not passed:
            report["witness"] = f"{check}: {witness}"
            lines.append(f"# FAIL {check}: {witness}")
        return (EXIT_OK if passed else EXIT_FAIL), report, lines
    R = parse_signature(_read(args.recognizer)).with_role("recognizer")
    found = realizable_on(R, basis)
    report = {"realizable": found.status}
    if found:
        report["standard"] = _signature_report(found.witness)
        return EXIT_OK, report, format_signature(found.witness).splitlines()
    return EXIT_FAIL, report, [f"FAIL recognizer realizability: {found.status}"]


def cmd_holant(args):
    grid = load_matchgrid(args.matchgrid)
    values = {}
    if args.contract:
        values["contract"] = holant_of_grid(grid)
    if args.perfmatch:
        values["perfmatch"] = holant_via_perfmatch(grid)
    agree = len(set(values.values())) == 1
    report = {name: format_scalar(v) for name, v in values.items()}
    lines = [f"{name} {format_scalar(v)}" for name, v in values.items()]
    if not agree:
        report["mismatch"] = True
        lines.append("FAIL methods disagree")
    return (EXIT_OK if agree else EXIT_FAIL), report, lines


def cmd_collapse(args):
    manifest = load_collapse_manifest(args.manifest)
    if manifest.basis.k != args.domain:
        raise UsageError(f"--domain {args.domain} but the basis has k={manifest.basis.k}")
    try:
        result = collapse(manifest.basis, manifest.generators, manifest.recognizers, manifest.wiring,
                          **({} if args.domain == 3 else {"strict": False}))
    except (InvalidInstance, NoFullRankGenerator) as exc:
        name = type(exc).__name__
        return EXIT_FAIL, {"result": "FAIL", "error": name, "detail": str(exc)}, [f"FAIL {name}: {exc}"]
    if isinstance(result, Domain3Outcome):
        report = {"outcome": result.outcome, "generator": result.generator,
                  "witness": {k: str(v) for k, v in result.witness.items()}}
        lines = [f"outcome {result.outcome}"] + [f"{k}: {v}" for k, v in sorted(report["witness"].items())]
        return EXIT_OK, report, lines
    if args.out:
        _write_collapse(Path(args.out), result)
    cert = result.certificate
    report = {
        "result": "PASS" if result.passed else "FAIL",
        "certificate": {"t": cert.t, "sigma": cert.sigma, "tau": cert.tau, "zeta": cert.zeta, "eta": cert.eta},
        "sub_basis": [[format_scalar(x) for x in row] for row in result.sub_basis],
        "transducer": _signature_report(result.transducer),
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in result.report],
    }
    lines = [c.line() for c in result.report]
    lines.append("PASS" if result.passed else "FAIL")
    return (EXIT_OK if result.passed else EXIT_FAIL), report, lines


def _write_collapse(out: Path, result: CollapseResult):
    out.mkdir(parents=True, exist_ok=True)
    small = Basis(result.sub_basis, (result.sub_basis.shape[0] - 1).bit_length())
    files = {"sub_basis.txt": format_basis(small), "transducer.txt": format_signature(result.transducer)}
    manifest = ["basis sub_basis.txt", "# transducer T = M sub^-1: transducer.txt"]
    for i, sig in enumerate(result.generators):
        files[f"generator_{i}.txt"] = format_signature(sig)
        manifest.append(f"collapsed-generator generator_{i}.txt")
    for i, sig in enumerate(result.recognizers):
        files[f"recognizer_{i}.txt"] = format_signature(sig)
        manifest.append(f"collapsed-recognizer recognizer_{i}.txt")
    manifest += [f"check {c.line()}" for c in result.report]
    files["result.manifest"] = "\n".join(manifest) + "\n"
    for name, text in files.items():
        (out / name).write_text(text)


def cmd_doppler(args):
    graph = parse_planar_graph(_read(args.graph))
    report, lines, code = {"semantics": args.semantics}, [], EXIT_OK
    if args.method in ("brute", "both"):
        report["brute"] = doppler_bruteforce(graph, args.semantics)
        lines.append(f"brute {report['brute']}")
    if args.method in ("holo", "both"):
        try:
            report["holo"] = doppler_holographic(graph, args.semantics)
            lines.append(f"holo {report['holo']}")
        except RealizabilityFailed as exc:
            report["holo"] = None
            report["error"] = f"RealizabilityFailed: {exc}"
            lines.append(f"FAIL holo RealizabilityFailed: {exc}")
            code = EXIT_FAIL
    if code == EXIT_OK and args.method == "both" and report["brute"] != report["holo"]:
        report["mismatch"] = True
        lines.append("FAIL counts disagree")
        code = EXIT_FAIL
    return code, report, lines


# parser ----------------------------------------------------------------------------

def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--report", choices=("json", "text"), default=argparse.SUPPRESS)
    parser = _Parser(prog="holomatch", description="Holographic algorithms with matchgates.")
    parser.add_argument("--report", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("perfmatch", parents=[common], help="perfect-matching sum of a planar graph")
    p.add_argument("graph")
    p.set_defaults(run=cmd_perfmatch)

    p = sub.add_parser("signature", parents=[common], help="standard signature of a matchgate")
    p.add_argument("matchgate")
    p.add_argument("--method", choices=("fkt", "brute"), default="fkt")
    p.set_defaults(run=cmd_signature)

    p = sub.add_parser("verify", parents=[common], help="parity and matchgate-identity test")
    p.add_argument("signature")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("transform", parents=[common], help="transform a signature through a basis")
    p.add_argument("--basis", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--generator")
    group.add_argument("--recognizer")
    p.set_defaults(run=cmd_transform)

    p = sub.add_parser("holant", parents=[common], help="Holant of a matchgrid")
    p.add_argument("matchgrid")
    p.add_argument("--contract", action="store_true")
    p.add_argument("--perfmatch", action="store_true")
    p.set_defaults(run=cmd_holant)

    p = sub.add_parser("collapse", parents=[common], help="collapse a basis (domain 2 or 4) or classify (3)")
    p.add_argument("manifest")
    p.add_argument("--domain", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--out", help="directory for the result manifest and signature files")
    p.set_defaults(run=cmd_collapse)

    p = sub.add_parser("doppler", parents=[common], help="count Doppler-shift edge colorings")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=("holo", "brute", "both"), default="both")
    p.add_argument("--semantics", choices=("or", "sum"), default="or")
    p.set_defaults(run=cmd_doppler)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    report_mode = "text"
    try:
        args = parser.parse_args(argv)
        report_mode = args.report
        if args.command == "holant" and not (args.contract or args.perfmatch):
            raise UsageError("holant needs --contract and/or --perfmatch")
        code, report, lines = args.run(args)
    except (ParseError, UsageError, BoundExceeded) as exc:
        code, report, lines = EXIT_USAGE, {"error": type(exc).__name__, "detail": str(exc)}, \
            [f"error {type(exc).__name__}: {exc}"]
    except HolomatchError as exc:
        code, report, lines = EXIT_FAIL, {"error": type(exc).__name__, "detail": str(exc)}, \
            [f"FAIL {type(exc).__name__}: {exc}"]
    if report_mode == "json":
        stdout.write(json.dumps({"exit": code, **report}, sort_keys=True, indent=1) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
