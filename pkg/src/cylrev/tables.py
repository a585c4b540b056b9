"""Published period tables and their recomputation."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .families import exp_bound_check
from .spectrum import spectrum

#: (collection, published exact periods), in printed order
TABLE1: list[tuple[tuple[int, ...], tuple[int, ...]]] = [
    ((1, 2, 3), (3,)),
    ((2, 3, 4), (3,)),
    ((1, 3, 4), (7,)),
    ((1, 2, 4), (7,)),
    ((3, 4, 5), (3,)),
    ((2, 4, 5), (7,)),
    ((2, 3, 5), (7,)),
    ((1, 4, 5), (15,)),
    ((1, 3, 5), (6, 3)),
    ((1, 2, 5), (15,)),
    ((1, 4, 8), (127,)),
    ((1, 2, 16), (32767,)),
    ((1, 3, 10), (365, 31, 15)),
    ((1, 3, 11), (42, 14, 21, 7, 6, 3)),
    ((1, 3, 12), (2047,)),
    ((1, 3, 13), (126, 63)),
    ((1, 3, 14), (1785, 255, 21, 7, 3)),
    ((1, 3, 15), (254, 127)),
    ((1, 3, 16), (4599, 511, 63)),
    ((1, 4, 16), (63, 21, 9, 7)),
    ((1, 8, 16), (32767,)),
    ((2, 5, 7, 8, 9), (42, 21, 7, 6, 3)),
    ((2, 4, 6, 7, 9), (105, 15, 7)),
    ((1, 6, 7, 8, 9), (217, 31, 7)),
]

#: exponential collection index n -> published exact periods
TABLE2: dict[int, tuple[int, ...]] = {
    2: (7,),
    4: (31,),
    6: (127,),
    8: (511, 73, 7),
    10: (2047, 89, 23),
    12: (8191,),
}


@dataclass(frozen=True)
class TableRow:
    table: int
    row: int
    label: str
    published: frozenset[int]
    computed: frozenset[int]
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.published == self.computed

    def to_dict(self) -> dict:
        return {"table": self.table, "row": self.row, "label": self.label,
                "published": sorted(self.published, reverse=True),
                "computed": sorted(self.computed, reverse=True),
                "status": "PASS" if self.passed else "FAIL"}


def _table1_row(i: int) -> TableRow:
    c, published = TABLE1[i]
    s = spectrum(c)
    return TableRow(1, i + 1, ",".join(map(str, c)), frozenset(published), s.exact_periods)


def _table2_row(n: int) -> TableRow:
    rep = exp_bound_check(n)
    note = "" if rep.divisible else "p(x) does not divide x^N + 1"
    return TableRow(2, n, f"n={n}", frozenset(TABLE2[n]), rep.exact_periods, note)


def reproduce_table1(jobs: int = 1) -> list[TableRow]:
    idx = range(len(TABLE1))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_table1_row, idx))
    return [_table1_row(i) for i in idx]


def reproduce_table2() -> list[TableRow]:
    return [_table2_row(n) for n in sorted(TABLE2)]
