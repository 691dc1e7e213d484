"""Isomorph-free enumeration of benzenoids and extremal-deficit reports.

Benzenoids are generated level by level: every shape with h hexagons is
obtained by attaching one free neighbour cell to a shape with h - 1,
deduplicated by the canonical cell key (12 lattice symmetries plus
translation) and filtered through the hole test.  Two shapes count as the
same benzenoid exactly when they agree up to rotation, reflection and
translation.  The hot loops run in bechex._kernel.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from . import _kernel as kernel
from .codes import Code, canonical, convexity_deficit, parse_code
from .errors import NotClosed, ResourceLimit, SelfIntersecting
from .lattice import condensation_class, embed

__all__ = [
    "DEFAULT_MAX_H",
    "EnumerationReport",
    "SearchConfig",
    "check_unimodal",
    "count_benzenoids",
    "enumerate_benzenoids",
    "enumerate_unbranched_fusenes",
    "max_cd_unbranched_benzenoids",
    "report",
    "run_search",
]

#: Levels above this size are refused unless the caller raises the cap; a
#: plain desk machine handles h = 12 in minutes, every extra level costs
#: roughly a factor of five.
DEFAULT_MAX_H = 14

SCHEMA_VERSION = 1

_PARALLEL_THRESHOLD = 2048


@dataclass(frozen=True, slots=True)
class SearchConfig:
    """Settings for a persistent enumeration run."""

    h_max: int
    workers: int = 1
    out_dir: Path | None = None
    resume: bool = False


@dataclass(frozen=True, slots=True)
class EnumerationReport:
    """Distribution of the convexity deficit over one level.

    ``distribution`` maps each occurring deficit to its count; ``mcd`` is
    the largest deficit, ``ex`` the number of benzenoids attaining it and
    ``extremal_codes`` their canonical codes.  ``extremal_breakdown``
    counts the extremal benzenoids per condensation class.
    """

    h: int
    count: int
    distribution: dict[int, int]
    mcd: int
    ex: int
    extremal_codes: tuple[str, ...]
    extremal_breakdown: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "h": self.h,
            "count": self.count,
            "distribution": {str(k): v for k, v in self.distribution.items()},
            "mcd": self.mcd,
            "ex": self.ex,
            "extremal_codes": list(self.extremal_codes),
            "extremal_breakdown": dict(self.extremal_breakdown),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _grow_chunk(chunk: list[bytes]) -> set[bytes]:
    return kernel.grow(chunk)


def _grow(parents: list[bytes], workers: int) -> set[bytes]:
    """Raw canonical child keys of one level, before the hole filter.

    The result is a set union over worker partitions, so it cannot depend
    on the worker count or on scheduling.
    """
    if workers > 1 and len(parents) >= _PARALLEL_THRESHOLD:
        chunks = [parents[i::workers] for i in range(workers)]
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_grow_chunk, chunks)
        out: set[bytes] = set()
        for part in parts:
            out |= part
        return out
    return kernel.grow(parents)


def _levels(h_max: int, workers: int = 1, start: tuple[int, list[bytes]] | None = None):
    """Yield (h, sorted canonical keys) for every level up to h_max."""
    if start is None:
        h, keys = 1, [kernel.pack_cells(((0, 0),))]
    else:
        h, keys = start
    yield h, keys
    while h < h_max:
        raw = _grow(keys, workers)
        keys = sorted(k for k in raw if kernel.simply_connected(k))
        h += 1
        yield h, keys


def _check_cap(h: int, max_h: int | None) -> None:
    if h < 1:
        raise ValueError("h must be >= 1")
    if max_h is not None and h > max_h:
        raise ResourceLimit(
            f"enumeration to h={h} exceeds the cap of {max_h}; pass max_h to raise it"
        )


def enumerate_benzenoids(
    h: int, *, workers: int = 1, max_h: int | None = DEFAULT_MAX_H
):
    """Yield every benzenoid with h hexagons exactly once, as its
    canonical normalised cell tuple, in deterministic (sorted) order."""
    _check_cap(h, max_h)
    for level, keys in _levels(h, workers):
        if level == h:
            for key in keys:
                yield kernel.unpack_cells(key)


def count_benzenoids(h: int, *, workers: int = 1, max_h: int | None = DEFAULT_MAX_H) -> int:
    _check_cap(h, max_h)
    for level, keys in _levels(h, workers):
        if level == h:
            return len(keys)
    raise AssertionError("unreachable")


def _report_from_pairs(h: int, pairs: list[tuple[str, bytes]]) -> EnumerationReport:
    distribution: Counter[int] = Counter()
    best = -1
    extremal: list[tuple[str, bytes]] = []
    for code, key in pairs:
        deficit = kernel.code_deficit(code)
        distribution[deficit] += 1
        if deficit > best:
            best = deficit
            extremal = [(code, key)]
        elif deficit == best:
            extremal.append((code, key))
    breakdown: Counter[str] = Counter(
        condensation_class(kernel.unpack_cells(key)).value for _, key in extremal
    )
    return EnumerationReport(
        h=h,
        count=sum(distribution.values()),
        distribution=dict(sorted(distribution.items())),
        mcd=best,
        ex=distribution[best],
        extremal_codes=tuple(sorted(code for code, _ in extremal)),
        extremal_breakdown=dict(sorted(breakdown.items())),
    )


def _traced(keys: list[bytes]) -> list[tuple[str, bytes]]:
    return [(kernel.trace_code(key), key) for key in keys]


def report(h: int, *, workers: int = 1, max_h: int | None = DEFAULT_MAX_H) -> EnumerationReport:
    """Enumerate level h and fold code and deficit over every benzenoid."""
    if h < 2:
        raise ValueError("reports are defined for h >= 2")
    _check_cap(h, max_h)
    for level, keys in _levels(h, workers):
        if level == h:
            return _report_from_pairs(h, _traced(keys))
    raise AssertionError("unreachable")


def _level_path(out_dir: Path, h: int) -> Path:
    return out_dir / f"benzenoids_h{h}.txt"


def _load_level(out_dir: Path, h: int) -> list[bytes]:
    keys = []
    for line in _level_path(out_dir, h).read_text("ascii").splitlines():
        cells = embed(parse_code(line)).cells
        keys.append(kernel.canonical_key(kernel.pack_cells(cells)))
    return sorted(keys)


def run_search(config: SearchConfig) -> list[EnumerationReport]:
    """Run the enumeration up to ``config.h_max``, optionally persisting
    each level, its report and its extremal codes to ``config.out_dir``.

    Written files are sorted and the whole output is byte-deterministic:
    it depends only on h, never on the worker count.  With ``resume``,
    levels present as files are reloaded instead of recomputed, so the
    returned reports always cover every level from 2 to ``h_max``.
    """
    out_dir = Path(config.out_dir) if config.out_dir is not None else None
    loaded_to = 0
    if config.resume and out_dir is not None:
        for h in range(config.h_max, 0, -1):
            if _level_path(out_dir, h).is_file():
                loaded_to = h
                break
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)

    def _all_levels():
        last = None
        for h in range(1, loaded_to + 1):
            last = (h, _load_level(out_dir, h))
            yield last
        if loaded_to < config.h_max:
            fresh = _levels(config.h_max, config.workers, start=last)
            if last is not None:
                next(fresh)  # _levels re-yields its start level
            yield from fresh

    reports = []
    for h, keys in _all_levels():
        pairs = _traced(keys) if (h >= 2 or out_dir is not None) else []
        if out_dir is not None:
            _level_path(out_dir, h).write_text(
                "".join(code + "\n" for code in sorted(code for code, _ in pairs)),
                "ascii",
            )
        if h >= 2:
            rep = _report_from_pairs(h, pairs)
            reports.append(rep)
            if out_dir is not None:
                (out_dir / f"report_h{h}.json").write_text(rep.to_json(), "ascii")
                (out_dir / f"extremal_h{h}.txt").write_text(
                    "".join(code + "\n" for code in rep.extremal_codes), "ascii"
                )
    return reports


def enumerate_unbranched_fusenes(h: int) -> list[Code]:
    """Boundary codes of the unbranched catacondensed fusenes with h
    hexagons, one canonical representative per class, sorted.

    An unbranched fusene walks out along one side of its hexagon chain
    and back along the other, so its code is 5 s_1..s_{h-2} 5 followed by
    the complements 4 - s_i of the side symbols in reverse order.  All
    such codes close with winding 6; helicene-like members overlap when
    embedded but still count as fusenes.
    """
    if h < 2:
        raise ValueError("unbranched fusenes need h >= 2")
    seen = set()
    for side in itertools.product((1, 2, 3), repeat=h - 2):
        back = tuple(4 - s for s in reversed(side))
        seen.add(canonical(Code((5,) + side + (5,) + back)).symbols)
    return [Code(symbols) for symbols in sorted(seen)]


def max_cd_unbranched_benzenoids(h: int) -> tuple[int, tuple[Code, ...]]:
    """Largest convexity deficit over the unbranched benzenoids with h
    hexagons (fusenes that embed), plus every code attaining it."""
    best = -1
    witnesses: list[Code] = []
    for code in enumerate_unbranched_fusenes(h):
        try:
            embed(code)
        except (NotClosed, SelfIntersecting):
            continue
        deficit = convexity_deficit(code)
        assert deficit is not None
        if deficit > best:
            best = deficit
            witnesses = [code]
        elif deficit == best:
            witnesses.append(code)
    return best, tuple(witnesses)


def check_unimodal(values) -> bool:
    """True when the sequence rises (weakly) then falls (weakly)."""
    values = list(values)
    if not values:
        raise ValueError("empty sequence")
    i = 0
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] >= values[i + 1]:
        i += 1
    return i == len(values) - 1
