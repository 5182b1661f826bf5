"""JSON-lines interchange for sequences and text renderings used by the CLI.

A sequence is a header line ``{"order":m,"len":L}`` followed by one
``{"n":..,"d":..,"s":..}`` object per triple, in sequence order.
"""

from __future__ import annotations

import json
from typing import IO, Iterable

from .errors import InvariantError
from .model import FareySequence


def triple_json(n: int, d: int, s: int) -> str:
    return f'{{"n":{n},"d":{d},"s":{s}}}'


def header_json(order: int, length: int) -> str:
    return f'{{"order":{order},"len":{length}}}'


def dumps_jsonl(seq: FareySequence) -> str:
    lines = [header_json(seq.order, len(seq))]
    lines.extend(triple_json(*t) for t in seq.entries)
    return "\n".join(lines) + "\n"


def write_jsonl(seq: FareySequence, fp: IO[str]) -> None:
    fp.write(dumps_jsonl(seq))


def read_jsonl(lines: Iterable[str]) -> FareySequence:
    """Parse and validate a JSON-lines sequence."""
    it = (ln for ln in lines if ln.strip())
    try:
        header = json.loads(next(it))
    except StopIteration:
        raise InvariantError("empty input: missing header line") from None
    except json.JSONDecodeError as exc:
        raise InvariantError(f"bad header line: {exc}") from None
    if not isinstance(header, dict) or "order" not in header or "len" not in header:
        raise InvariantError('header must be {"order": m, "len": L}')
    triples = []
    for lineno, ln in enumerate(it, start=2):
        try:
            obj = json.loads(ln)
            triples.append((obj["n"], obj["d"], obj["s"]))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InvariantError(f"line {lineno}: not a triple object ({exc})") from None
    if len(triples) != header["len"]:
        raise InvariantError(f"header announces {header['len']} triples, found {len(triples)}")
    return FareySequence.from_triples(int(header["order"]), triples)


def paper_display(seq: FareySequence) -> str:
    """``(0,1,1) || (1,2,1) || (1,1,0)`` style rendering."""
    return " || ".join(f"({n},{d},{s})" for n, d, s in seq.entries)
