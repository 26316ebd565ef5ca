"""
Command line front end over `hopfcomb.api`.

    hopfcomb product --algebra eqsym --basis M 1 22
    hopfcomb count --family parking-stalactic 5
    hopfcomb verify --algebra phisym --max-degree 4
    hopfcomb stalactic insert cabcb

Exit status is 0 on success, 1 when a verification fails and 2 on usage,
parse or unknown-id errors.
"""

import argparse
import json
import logging
import sys

from hopfcomb import __version__, api
from hopfcomb.utils import get_hooks

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

def _common(parser, algebra=True):
    if algebra:
        parser.add_argument("--algebra", required=True, help="one of: " + ", ".join(get_hooks("algebras")))
        parser.add_argument("--basis", help="basis id, defaults to the first registered basis")
        parser.add_argument("--q", type=int, help="specialize q to this integer")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--limit", type=int, help="override the max degree guard")
    parser.add_argument("--verbose", "-v", action="store_true")

def build_parser():
    parser = argparse.ArgumentParser(prog=get_hooks("app_name"), description=get_hooks("app_description"))
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    for name in ("product", "coproduct", "pair"):
        sub = commands.add_parser(name)
        _common(sub)
        sub.add_argument("elements", nargs="+")

    sub = commands.add_parser("convert")
    _common(sub)
    sub.add_argument("--to", required=True)
    sub.add_argument("elements", nargs="+")

    sub = commands.add_parser("count")
    _common(sub, algebra=False)
    sub.add_argument("--family", required=True, help="one of: " + ", ".join(sorted(get_hooks("count_families"))))
    sub.add_argument("n", type=int)

    sub = commands.add_parser("insert")
    _common(sub, algebra=False)
    sub.add_argument("word")

    sub = commands.add_parser("triangle")
    _common(sub, algebra=False)
    sub.add_argument("name", choices=get_hooks("triangles"))
    sub.add_argument("rows", type=int)

    sub = commands.add_parser("verify")
    _common(sub, algebra=False)
    sub.add_argument("--algebra")
    sub.add_argument("--basis")
    sub.add_argument("--check", help="one of: " + ", ".join(sorted(get_hooks("checks"))))
    sub.add_argument("--max-degree", type=int, default=3)

    stalactic = commands.add_parser("stalactic").add_subparsers(dest="stalactic_command")
    stalactic.required = True
    sub = stalactic.add_parser("insert")
    _common(sub, algebra=False)
    sub.add_argument("word")
    sub = stalactic.add_parser("count")
    _common(sub, algebra=False)
    sub.add_argument("family", choices=("parking", "endofunctions", "initial-words"))
    sub.add_argument("n", type=int)
    sub = stalactic.add_parser("triangle")
    _common(sub, algebra=False)
    sub.add_argument("name", choices=get_hooks("triangles"))
    sub.add_argument("rows", type=int)
    return parser

def dispatch(opts):
    command = opts.command
    if command == "stalactic":
        command = opts.stalactic_command
        if command == "count":
            opts.family = opts.family + "-stalactic"
    endpoint = api.get_endpoint(command)

    if command in ("product", "coproduct", "pair"):
        return endpoint(algebra=opts.algebra, basis=opts.basis, elements=opts.elements, q=opts.q, limit=opts.limit)
    if command == "convert":
        return endpoint(algebra=opts.algebra, basis=opts.basis, to=opts.to, elements=opts.elements, q=opts.q,
                        limit=opts.limit)
    if command == "count":
        return endpoint(family=opts.family, n=opts.n, limit=opts.limit)
    if command == "insert":
        return endpoint(word=opts.word, limit=opts.limit)
    if command == "triangle":
        return endpoint(name=opts.name, rows=opts.rows, limit=opts.limit)
    if not opts.check and not opts.algebra:
        return {"status": "error", "message": "verify needs --algebra or --check"}
    return endpoint(algebra=opts.algebra, basis=opts.basis, check=opts.check, max_degree=opts.max_degree,
                    limit=opts.limit)

def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_OK

    logging.basicConfig(level=logging.DEBUG if opts.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    response = dispatch(opts)
    status = response.get("status")

    if opts.format == "json":
        out.write(json.dumps(response, sort_keys=True, default=str) + "\n")
    elif status == "success":
        out.write(response["result"]["text"] + "\n")
    else:
        err.write(response.get("message", "") + "\n")

    if status == "success":
        return EXIT_OK
    if status == "failed":
        return EXIT_FAILED
    if opts.format == "text":
        parser.print_usage(err)
    return EXIT_USAGE

def main():
    sys.exit(run())

if __name__ == "__main__":
    main()
