"""Command line front door.

Subcommands cover the whole workflow: inspect a single page (ingest),
rank a corpus (rank), benchmark the bandit on the synthetic environment
(simulate), run the simulated-assessor loop (experiment), serve the
judging API (serve), and re-derive reports from an event log (report).
"""

import argparse
import dataclasses
import json
import sys

from . import bm25f, ingest, langid
from .corpus import build_corpus
from .errors import ParkbanditError
from .eventlog import EventLog
from .experiment import ExperimentConfig, run_experiment
from .reports import write_report_csvs
from .service import JudgeService
from .simulate import SyntheticConfig, run_benchmark


def _add_ingest(sub):
    p = sub.add_parser("ingest", help="parse one page and print its fields")
    p.add_argument("source", help="local HTML file (or URL with --fetch)")
    p.add_argument("--fetch", action="store_true",
                   help="allow fetching over HTTP instead of reading a file")
    p.add_argument("--fetch-timeout-ms", type=int,
                   default=ingest.DEFAULT_FETCH_TIMEOUT_MS)
    p.set_defaults(func=cmd_ingest)


def cmd_ingest(args):
    if args.source.startswith(("http://", "https://")) and not args.fetch:
        raise ParkbanditError("live fetch is disabled; pass --fetch to allow it")
    record = ingest.load_record(args.source,
                                fetch_timeout_ms=args.fetch_timeout_ms)
    encoding = ingest.detect_encoding(record)
    doc = ingest.parse_fields(record, encoding, "und")
    text = " ".join(doc.field_text(f) for f in doc.FIELDS)
    try:
        language, confidence = langid.detect_language(text)
    except ParkbanditError:
        language, confidence = "und", 0.0
    out = {
        "domain_id": record.domain_id,
        "encoding": encoding,
        "language": language,
        "language_confidence": confidence,
        "title": doc.title,
        "content": doc.content,
        "meta_keywords": doc.meta_keywords,
        "meta_description": doc.meta_description,
        "headers": doc.headers,
        "anchors": doc.anchors,
    }
    print(json.dumps(out, indent=2))


def _add_rank(sub):
    p = sub.add_parser("rank", help="rank candidate phrases by BM25F")
    p.add_argument("--corpus", required=True)
    p.add_argument("--config", help="field weight / b / k1 parameter file")
    p.add_argument("--top", type=int, default=10)
    p.add_argument("domain", nargs="?", help="one domain id (default: all)")
    p.set_defaults(func=cmd_rank)


def cmd_rank(args):
    config_text = None
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            config_text = fh.read()
    model = build_corpus(args.corpus, config_text)
    domains = [args.domain] if args.domain else model.domain_ids()
    for domain_id in domains:
        entry = model.domains.get(domain_id)
        if entry is None:
            raise ParkbanditError(f"unknown domain: {domain_id}")
        ranked = bm25f.rank_bm25f(
            entry.candidates, entry.field_lens, model.params, model.idf,
            args.top,
        )
        print(domain_id)
        for phrase, score in ranked:
            print(f"  {score:.6f}  {phrase}")


def _add_simulate(sub):
    p = sub.add_parser("simulate",
                       help="bandit vs uniform policy on the synthetic environment")
    p.add_argument("--seeds", type=int, default=50)
    p.add_argument("--horizon", type=int, default=500)
    p.add_argument("--arms", type=int, default=20)
    p.add_argument("--noise", type=float, default=0.1)
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--sigma-grouping", choices=("ruled", "scaled"),
                   default="ruled")
    p.set_defaults(func=cmd_simulate)


def cmd_simulate(args):
    config = SyntheticConfig(
        k=args.arms, horizon=args.horizon, noise=args.noise,
        delta=args.delta, sigma_grouping=args.sigma_grouping,
    )
    out = run_benchmark(config, seeds=args.seeds)
    print(json.dumps(out, indent=2))


def _add_experiment(sub):
    p = sub.add_parser("experiment",
                       help="simulated assessors judging bandit picks over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--iterations", type=int, default=6)
    p.add_argument("--assessors", type=int, default=5)
    p.add_argument("--m", type=int, default=5)
    p.add_argument("--horizon", type=int, default=30)
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--trap-rate", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sigma-grouping", choices=("ruled", "scaled"),
                   default="ruled")
    p.add_argument("--log", help="append events to this file")
    p.add_argument("--out-dir", help="write precision/weights/kappa CSVs here")
    p.set_defaults(func=cmd_experiment)


def cmd_experiment(args):
    model = build_corpus(args.corpus)
    config = ExperimentConfig(
        iterations=args.iterations, assessors=args.assessors, m=args.m,
        horizon=args.horizon, delta=args.delta, trap_rate=args.trap_rate,
        sigma_grouping=args.sigma_grouping,
    )
    log = EventLog(args.log) if args.log else None
    reports = run_experiment(model, config, seed=args.seed, log=log)
    if args.out_dir:
        for path in write_report_csvs(reports, args.out_dir):
            print(f"wrote {path}")
    else:
        print(json.dumps(reports, indent=2))


def _add_serve(sub):
    p = sub.add_parser("serve", help="run the judging HTTP service")
    p.add_argument("--corpus", required=True)
    p.add_argument("--log", help="event log file (default: in-memory)")
    p.add_argument("--state-dir", help="write bandit state snapshots here")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--horizon", type=int, default=100)
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--sigma-grouping", choices=("ruled", "scaled"),
                   default="ruled")
    p.set_defaults(func=cmd_serve)


def cmd_serve(args):
    import uvicorn

    from .webapi import create_app

    model = build_corpus(args.corpus)
    service = JudgeService(
        model,
        EventLog(args.log) if args.log else None,
        horizon=args.horizon, delta=args.delta,
        sigma_grouping=args.sigma_grouping, state_dir=args.state_dir,
    )
    uvicorn.run(create_app(service), host=args.host, port=args.port)


def _add_report(sub):
    p = sub.add_parser("report",
                       help="re-derive iteration reports from an event log")
    p.add_argument("--corpus", required=True)
    p.add_argument("--log", required=True)
    p.add_argument("--iteration", type=int)
    p.add_argument("--out-dir", help="write CSVs instead of JSON")
    p.set_defaults(func=cmd_report)


def cmd_report(args):
    model = build_corpus(args.corpus)
    service = JudgeService(model, EventLog(args.log))
    if args.iteration is not None:
        print(json.dumps(service.report(args.iteration), indent=2))
        return
    reports = [service.reports[i] for i in sorted(service.reports)]
    if args.out_dir:
        for path in write_report_csvs(reports, args.out_dir):
            print(f"wrote {path}")
    else:
        print(json.dumps(reports, indent=2))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="parkbandit",
        description="adaptive keyword extraction for archived parked domains",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_ingest(sub)
    _add_rank(sub)
    _add_simulate(sub)
    _add_experiment(sub)
    _add_serve(sub)
    _add_report(sub)
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ParkbanditError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
