"""Catalogue assembly and the command line interface.

Subcommands:

* ``generate``: orderly generation for one (rank, size) cell, optional
  connectivity/regularity filters and Tutte polynomials, written as one
  entry per line.
* ``dual-listing``: entries of a high rank obtained by dualizing the
  generated low-rank side; representatives are generally non-canonical and
  marked ``dualized`` unless re-canonicalized.
* ``counts``: table of class counts over a rank/size rectangle.

Output is deterministic: byte-identical across runs and thread counts.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, TypeVar

from .enumeration import (
    InvalidShape,
    MultiplicityFunction,
    _lex_larger_witness_columns,
    candidate_functions,
    generate,
    label_vector_of,
)
from .gf2 import Gf2Matrix, gl_column_tuples, gl_group_order, transform_bits
from .matroid import BinaryMatroid
from .regularity import is_regular
from .tutte import TuttePolynomial, tutte_by_activities

MATROID_CLASSES = (
    "loopless",
    "simple",
    "connected-loopless",
    "connected-simple",
)

MAX_SIZE = 15
MAX_RANK = 7

_T = TypeVar("_T")
_U = TypeVar("_U")


class ResourceGuard(Exception):
    """Request beyond the supported scale and not forced."""


@dataclass(frozen=True)
class CatalogueEntry:
    rank: int
    size: int
    labels: tuple[int, ...]
    flags: str  # subset of "LSCR", in that order
    tutte: Optional[TuttePolynomial] = None
    dualized: bool = False

    def to_line(self) -> str:
        parts = [
            f"k={self.rank}",
            f"n={self.size}",
            "r=(" + ",".join(str(r) for r in self.labels) + ")",
            f"flags={self.flags}",
        ]
        if self.tutte is not None:
            parts.append(
                "tutte="
                + ";".join(
                    ",".join(str(c) for c in row) for row in self.tutte.grid
                )
            )
        if self.dualized:
            parts.append("dualized")
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "CatalogueEntry":
        rank = size = None
        labels: tuple[int, ...] = ()
        flags = ""
        tutte = None
        dualized = False
        for token in line.split():
            if token.startswith("k="):
                rank = int(token[2:])
            elif token.startswith("n="):
                size = int(token[2:])
            elif token.startswith("r=("):
                labels = tuple(int(t) for t in token[3:-1].split(","))
            elif token.startswith("flags="):
                flags = token[6:]
            elif token.startswith("tutte="):
                grid = tuple(
                    tuple(int(c) for c in row.split(","))
                    for row in token[6:].split(";")
                )
                tutte = TuttePolynomial(grid)
            elif token == "dualized":
                dualized = True
            else:
                raise ValueError(f"unrecognized token {token!r}")
        if rank is None or size is None:
            raise ValueError("line is missing k= or n=")
        return cls(rank, size, labels, flags, tutte, dualized)


def matroid_of_labels(labels: Iterable[int], k: int) -> BinaryMatroid:
    """Matroid whose columns are the vectors named by the labels."""
    return BinaryMatroid(Gf2Matrix.from_columns(list(labels), k))


def compute_flags(m: BinaryMatroid) -> str:
    """Recompute the L, S, C, R properties from scratch."""
    cols = [m.column_of(e) for e in m.ground]
    flags = ""
    loopless = all(cols)
    if loopless:
        flags += "L"
    if loopless and len(set(cols)) == len(cols):
        flags += "S"
    if m.is_connected():
        flags += "C"
    if is_regular(m)[0]:
        flags += "R"
    return flags


def _worker_count(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("MATROID_THREADS")
    if env is not None and env.strip():
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError("MATROID_THREADS must be an integer") from None
    return os.cpu_count() or 1


def _ordered_map(
    fn: Callable[[_T], _U], items: Iterable[_T], threads: Optional[int]
) -> Iterator[_U]:
    """Apply fn preserving input order, optionally on a thread pool."""
    workers = _worker_count(threads)
    if workers == 1:
        yield from map(fn, items)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=16)


def _split_class(matroid_class: str) -> tuple[str, bool]:
    if matroid_class not in MATROID_CLASSES:
        raise ValueError(f"unknown class {matroid_class!r}")
    connected = matroid_class.startswith("connected-")
    base = matroid_class.removeprefix("connected-")
    return base, connected


def _guard(k: int, n: int, force: bool) -> None:
    if (n > MAX_SIZE or k > MAX_RANK) and not force:
        raise ResourceGuard(
            f"rank {k}, size {n} exceeds the supported scale "
            f"(rank <= {MAX_RANK}, size <= {MAX_SIZE}); pass --force to override"
        )


def run_generate(
    k: int,
    n: int,
    matroid_class: str,
    regular_only: bool = False,
    with_tutte: bool = False,
    out: Optional[str] = None,
    force: bool = False,
    threads: Optional[int] = None,
) -> list[CatalogueEntry]:
    """Generate one catalogue cell; write it to out when given."""
    base, need_connected = _split_class(matroid_class)
    if not 1 <= k <= n:
        raise InvalidShape(f"need 1 <= rank <= size, got rank {k}, size {n}")
    _guard(k, n, force)

    def process(values: tuple[int, ...]) -> Optional[CatalogueEntry]:
        if _lex_larger_witness_columns(values, k) is not None:
            return None
        labels = label_vector_of(MultiplicityFunction(values, k)).labels
        m = matroid_of_labels(labels, k)
        flags = compute_flags(m)
        if need_connected and "C" not in flags:
            return None
        if regular_only and "R" not in flags:
            return None
        tutte = tutte_by_activities(m) if with_tutte else None
        return CatalogueEntry(k, n, labels, flags, tutte, False)

    candidates = candidate_functions(k, n, base)
    entries = [e for e in _ordered_map(process, candidates, threads) if e]
    _write_entries(entries, out)
    return entries


def canonical_labels_bruteforce(
    labels: tuple[int, ...], k: int, max_group_order: int = 2_000_000
) -> tuple[int, ...]:
    """Lexicographically smallest label vector in the isomorphism class."""
    if gl_group_order(k) > max_group_order:
        raise ResourceGuard(
            f"brute-force canonicalization at rank {k} needs "
            f"{gl_group_order(k)} group elements (bound {max_group_order})"
        )
    best = tuple(sorted(labels))
    for g in gl_column_tuples(k):
        cand = tuple(sorted(transform_bits(g, c) for c in labels))
        if cand < best:
            best = cand
    return best


def run_dual_listing(
    k: int,
    n: int,
    matroid_class: str,
    out: Optional[str] = None,
    canonicalize: bool = False,
    threads: Optional[int] = None,
) -> list[CatalogueEntry]:
    """List rank-k entries as duals of generated rank-(n-k) representatives.

    The low-rank side is generated canonically, filtered by the class, and
    dualized; the emitted label vectors are sorted but generally not the
    standard representatives, hence the dualized marker.
    """
    base, need_connected = _split_class(matroid_class)
    if k < 1 or not 1 <= n - k <= MAX_RANK:
        raise InvalidShape(
            f"dual listing needs 1 <= size - rank <= {MAX_RANK} "
            f"and rank >= 1, got rank {k}, size {n}"
        )

    def process(lv) -> Optional[CatalogueEntry]:
        primal = matroid_of_labels(lv.labels, n - k)
        if need_connected and not primal.is_connected():
            return None
        dual = primal.dual()
        labels = tuple(sorted(dual.matrix.columns()))
        return CatalogueEntry(k, n, labels, compute_flags(dual), None, True)

    entries = [
        e
        for e in _ordered_map(process, generate(n - k, n, base), threads)
        if e
    ]
    if canonicalize:
        entries = sorted(
            (
                CatalogueEntry(
                    e.rank,
                    e.size,
                    canonical_labels_bruteforce(e.labels, e.rank),
                    e.flags,
                    e.tutte,
                    False,
                )
                for e in entries
            ),
            key=lambda e: e.labels,
        )
    _write_entries(entries, out)
    return entries


def run_counts(
    max_k: int,
    max_n: int,
    matroid_class: str,
    regular_only: bool = False,
    force: bool = False,
    threads: Optional[int] = None,
) -> str:
    """Class-count table over all cells with rank <= max_k, size <= max_n."""
    base, need_connected = _split_class(matroid_class)
    if max_k < 1 or max_n < 1:
        raise InvalidShape("table bounds must be at least 1")
    _guard(max_k, max_n, force)

    def count_cell(k: int, n: int) -> int:
        if k > n:
            return 0

        def keep(values: tuple[int, ...]) -> bool:
            if _lex_larger_witness_columns(values, k) is not None:
                return False
            if not need_connected and not regular_only:
                return True
            labels = label_vector_of(MultiplicityFunction(values, k)).labels
            m = matroid_of_labels(labels, k)
            if need_connected and not m.is_connected():
                return False
            if regular_only and not is_regular(m)[0]:
                return False
            return True

        return sum(
            1
            for kept in _ordered_map(keep, candidate_functions(k, n, base), threads)
            if kept
        )

    cells = {
        (k, n): count_cell(k, n)
        for k in range(1, max_k + 1)
        for n in range(1, max_n + 1)
    }
    width = max(
        [len(str(v)) for v in cells.values()]
        + [len(str(max_n)), len(f"k={max_k}")]
    )
    header = " ".join(
        ["k\\n".rjust(width)] + [str(n).rjust(width) for n in range(1, max_n + 1)]
    )
    lines = [header]
    for k in range(1, max_k + 1):
        row = [f"k={k}".rjust(width)] + [
            str(cells[k, n]).rjust(width) for n in range(1, max_n + 1)
        ]
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def _write_entries(entries: list[CatalogueEntry], out: Optional[str]) -> None:
    text = "".join(e.to_line() + "\n" for e in entries)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidcat",
        description="Catalogue of small binary matroids: generation, "
        "regularity, Tutte polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate one (rank, size) cell")
    gen.add_argument("--rank", type=int, required=True)
    gen.add_argument("--size", type=int, required=True)
    gen.add_argument(
        "--class",
        dest="matroid_class",
        choices=MATROID_CLASSES,
        required=True,
    )
    gen.add_argument("--regular-only", action="store_true")
    gen.add_argument("--tutte", action="store_true")
    gen.add_argument("--out")
    gen.add_argument("--force", action="store_true")

    dl = sub.add_parser(
        "dual-listing", help="list a high rank by dualizing the low-rank side"
    )
    dl.add_argument("--rank", type=int, required=True)
    dl.add_argument("--size", type=int, required=True)
    dl.add_argument(
        "--class",
        dest="matroid_class",
        choices=MATROID_CLASSES,
        required=True,
    )
    dl.add_argument("--out")
    dl.add_argument("--canonicalize", action="store_true")

    cnt = sub.add_parser("counts", help="print a table of class counts")
    cnt.add_argument("--max-rank", type=int, required=True)
    cnt.add_argument("--max-size", type=int, required=True)
    cnt.add_argument(
        "--class",
        dest="matroid_class",
        choices=MATROID_CLASSES,
        required=True,
    )
    cnt.add_argument("--regular-only", action="store_true")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            run_generate(
                args.rank,
                args.size,
                args.matroid_class,
                regular_only=args.regular_only,
                with_tutte=args.tutte,
                out=args.out,
                force=args.force,
            )
        elif args.command == "dual-listing":
            run_dual_listing(
                args.rank,
                args.size,
                args.matroid_class,
                out=args.out,
                canonicalize=args.canonicalize,
            )
        else:
            sys.stdout.write(
                run_counts(
                    args.max_rank,
                    args.max_size,
                    args.matroid_class,
                    regular_only=args.regular_only,
                )
            )
    except InvalidShape as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        # Bad environment configuration (e.g. a non-integer MATROID_THREADS)
        # is a usage error, same as a rejected argument.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
