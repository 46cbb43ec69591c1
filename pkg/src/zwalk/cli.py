"""Command-line front end.

Subcommands::

    zwalk reduce  [INPUT] [-o OUT] [--stream] [--delimiter D] [--debug-validate]
    zwalk detect  [INPUT] [-o OUT] [--delimiter D]
    zwalk graph   [INPUT] [-o OUT] [--format dot|json] [--delimiter D]
    zwalk verify  [--max-len N] [--alphabet LETTERS] [--random N] [--seed S]
    zwalk bench   [-o OUT] [--algos ...] [--sizes ...] [--sigmas ...]
                  [--adversarial ...] [--reps R] [--seed-base S]
                  [--naive-cap C] [--backend numba|python]

Every line of input is one string; symbols are Unicode scalar values unless
``--delimiter`` names a token separator.  ``-`` means stdin/stdout.

Exit codes: 0 success, 1 usage error, 2 input error, 3 verification failure.
Setting ``Z_DEBUG_VALIDATE=1`` is equivalent to ``--debug-validate``.
"""

import argparse
import codecs
import os
import sys
from typing import Optional

from . import _backend, bench, gen, graph, oracle, reducer
from .core import Alphabet, LabeledString
from .detector import detect_first_z


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="zwalk", description=__doc__, add_help=True)
    sub = p.add_subparsers(dest="command", metavar="command")

    def add_io(sp, with_format=False):
        sp.add_argument("input", nargs="?", default="-", help="input file or - for stdin")
        sp.add_argument("-o", "--output", default="-", help="output file or - for stdout")
        sp.add_argument("--delimiter", default=None, help="token separator for multi-character labels")

    sp = sub.add_parser("reduce", help="print the Z-normal form of every input line")
    add_io(sp)
    sp.add_argument("--stream", action="store_true", help="feed letters one at a time (online mode)")
    sp.add_argument("--debug-validate", action="store_true", help="revalidate internals with the oracle")

    sp = sub.add_parser("detect", help="report the first Z-shape of every input line")
    add_io(sp)

    sp = sub.add_parser("graph", help="emit the minimum path graph of every input line")
    add_io(sp)
    sp.add_argument("--format", choices=("dot", "json"), default="dot")

    sp = sub.add_parser("verify", help="differential test of the reducer against the oracle")
    sp.add_argument("--max-len", type=int, default=None, help="exhaustive check up to this length")
    sp.add_argument("--alphabet", default="ab", help="letters for generated inputs")
    sp.add_argument("--random", type=int, default=0, metavar="N", help="number of random trials")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("-o", "--output", default="-")

    sp = sub.add_parser("bench", help="run the timing/counter harness, emit CSV")
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--algos", default="reducer", help="comma list: reducer,naive_oracle,detect_and_contract")
    sp.add_argument("--sizes", default="", help="comma list of input lengths")
    sp.add_argument("--sigmas", default="", help="comma list of alphabet sizes")
    sp.add_argument("--adversarial", default="", help="comma list of adversarial levels m")
    sp.add_argument("--reps", type=int, default=10)
    sp.add_argument("--seed-base", type=int, default=1)
    sp.add_argument("--naive-cap", type=int, default=4096)
    sp.add_argument("--backend", choices=("numba", "python"), default=None)
    return p


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline="\n"), True


def _read_lines(path: str) -> list[str]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        # a missing file is the caller's input problem, not a usage problem
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InputError(str(exc))
    raw = data.split(b"\n")
    if raw and raw[-1] == b"":
        raw.pop()
    lines = []
    for i, chunk in enumerate(raw, start=1):
        try:
            lines.append(chunk.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise InputError(f"line {i}: {exc}")
    return lines


def _tokens(line: str, delimiter: Optional[str]) -> list[str]:
    if delimiter is None:
        return list(line)
    return [tok for tok in line.split(delimiter) if tok != ""]


def _cmd_reduce(args) -> int:
    debug = args.debug_validate or os.environ.get("Z_DEBUG_VALIDATE", "") == "1"
    out, closeit = _open_out(args.output)
    try:
        ab = Alphabet()
        if args.stream:
            for line_out in _stream_reduce(args.input, ab, args.delimiter, debug):
                out.write(line_out + "\n")
        else:
            for line in _read_lines(args.input):
                s = LabeledString([ab.intern(t) for t in _tokens(line, args.delimiter)], ab)
                out.write(reducer.reduce(s, debug_validate=debug).to_text(args.delimiter) + "\n")
    finally:
        if closeit:
            out.close()
    return 0


def _stream_reduce(path: str, ab: Alphabet, delimiter: Optional[str], debug: bool):
    """Online mode: letters are fed as they are decoded, memory stays
    proportional to the working string, one output line per input line."""
    fh = sys.stdin.buffer if path == "-" else open(path, "rb")
    decoder = codecs.getincrementaldecoder("utf-8")()
    machine = reducer.Reducer(ab, debug_validate=debug)
    token = ""
    lineno = 1
    try:
        while True:
            chunk = fh.read(65536)
            try:
                text = decoder.decode(chunk, final=not chunk)
            except UnicodeDecodeError as exc:
                raise InputError(f"line {lineno}: {exc}")
            for ch in text:
                if ch == "\n":
                    if delimiter is not None and token:
                        machine.feed(ab.intern(token))
                        token = ""
                    yield machine.finish().to_text(delimiter)
                    machine = reducer.Reducer(ab, debug_validate=debug)
                    lineno += 1
                elif delimiter is not None:
                    if ch == delimiter:
                        if token:
                            machine.feed(ab.intern(token))
                            token = ""
                    else:
                        token += ch
                else:
                    machine.feed(ab.intern(ch))
            if not chunk:
                break
        if machine.counters.appends > 1 or token:
            # final line without a trailing newline
            if delimiter is not None and token:
                machine.feed(ab.intern(token))
            yield machine.finish().to_text(delimiter)
    finally:
        if path != "-":
            fh.close()


def _cmd_detect(args) -> int:
    out, closeit = _open_out(args.output)
    try:
        ab = Alphabet()
        for line in _read_lines(args.input):
            s = LabeledString([ab.intern(t) for t in _tokens(line, args.delimiter)], ab)
            outcome = detect_first_z(s)
            if outcome.found is None:
                out.write("IRREDUCIBLE\n")
            else:
                out.write(f"Z {outcome.found.p1} {outcome.found.p2}\n")
    finally:
        if closeit:
            out.close()
    return 0


def _cmd_graph(args) -> int:
    out, closeit = _open_out(args.output)
    try:
        ab = Alphabet()
        for line in _read_lines(args.input):
            s = LabeledString([ab.intern(t) for t in _tokens(line, args.delimiter)], ab)
            g = graph.build_path_graph(reducer.reduce(s))
            names = ab.names()
            if args.format == "json":
                out.write(graph.to_json(g, names) + "\n")
            else:
                out.write(graph.to_dot(g, names))
    finally:
        if closeit:
            out.close()
    return 0


def _shrink(ids: list[int], mism) -> list[int]:
    """Trim the witness from both ends while it keeps mismatching."""
    cur = ids
    changed = True
    while changed:
        changed = False
        for cand in (cur[1:], cur[:-1]):
            if len(cand) < len(cur) and mism(cand):
                cur = cand
                changed = True
                break
    return cur


def verify_engine(
    letters: str,
    max_len: Optional[int],
    n_random: int,
    seed: int,
    report,
    reduce_fn=None,
) -> Optional[LabeledString]:
    """Differential check; returns a minimal failing input or None.

    ``reduce_fn`` exists so the tests can inject a corrupted implementation
    and watch the harness catch it."""
    ab = Alphabet()
    letter_ids = [ab.intern(ch) for ch in letters]
    fn = reduce_fn if reduce_fn is not None else reducer.reduce
    strategies = [
        oracle.Strategy.leftmost(),
        oracle.Strategy.shortest_then_leftmost(),
        oracle.Strategy.random(seed),
    ]

    def mismatch(ids: list[int]) -> bool:
        s = LabeledString(ids, ab)
        got = fn(s)
        return any(got != oracle.normal_form_naive(s, st) for st in strategies)

    def hunt(cases) -> Optional[LabeledString]:
        for ids in cases:
            if mismatch(ids):
                return LabeledString(_shrink(ids, mismatch), ab)
        return None

    if max_len is not None:
        def exhaustive():
            sigma = len(letter_ids)
            for length in range(max_len + 1):
                for code in range(sigma**length):
                    ids, v = [], code
                    for _ in range(length):
                        ids.append(letter_ids[v % sigma])
                        v //= sigma
                    yield ids

        witness = hunt(exhaustive())
        if witness is not None:
            return witness
        report(f"PASS exhaustive over {letters!r} up to length {max_len}")
    if n_random:
        rng = gen.SplitMix64(seed)

        def randoms():
            for _ in range(n_random):
                length = rng.next() % 65
                yield [letter_ids[rng.next() % len(letter_ids)] for _ in range(length)]

        witness = hunt(randoms())
        if witness is not None:
            return witness
        report(f"PASS {n_random} random trials (seed {seed})")
    return None


def _cmd_verify(args) -> int:
    if args.max_len is None and not args.random:
        raise UsageError("verify needs --max-len and/or --random")
    if not args.alphabet:
        raise UsageError("--alphabet must not be empty")
    out, closeit = _open_out(args.output)
    try:
        witness = verify_engine(
            args.alphabet,
            args.max_len,
            args.random,
            args.seed,
            lambda msg: out.write(msg + "\n"),
        )
        if witness is not None:
            out.write(f"FAIL witness={witness.to_text()!r}\n")
            return 3
        out.write("PASS\n")
        return 0
    finally:
        if closeit:
            out.close()


def _int_list(text: str) -> tuple:
    return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")


def _cmd_bench(args) -> int:
    if args.backend is not None:
        _backend.set_backend(args.backend)
    config = bench.BenchConfig(
        algos=tuple(tok for tok in args.algos.split(",") if tok),
        sizes=_int_list(args.sizes),
        sigmas=_int_list(args.sigmas),
        adversarial_ms=_int_list(args.adversarial),
        repetitions=args.reps,
        seed_base=args.seed_base,
        naive_cap=args.naive_cap,
    )
    records = bench.run_bench(config)
    out, closeit = _open_out(args.output)
    try:
        bench.write_csv(records, out)
    finally:
        if closeit:
            out.close()
    for line in bench.median_summary(records):
        print(line, file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        handler = {
            "reduce": _cmd_reduce,
            "detect": _cmd_detect,
            "graph": _cmd_graph,
            "verify": _cmd_verify,
            "bench": _cmd_bench,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"zwalk: usage error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"zwalk: input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
