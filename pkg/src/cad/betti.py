"""
Betti Numbers of Arrangements
b0 and b1 of a union of ellipsoids and solid ellipsoids from the connected components of
their pairwise and triple intersections, through the ranks of the Mayer-Vietoris matrices
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, List, Sequence, Tuple

from src.arith.matrix import QMatrix
from src.arith.polynomial import MPoly
from src.core.errors import InvariantBreach, NotGenericError, ShearBudgetExceeded
from src.quadrics.prepare import regularize
from src.topology.arrangement import DEFAULT_SHEAR_BUDGET

from .components import Signature, component_of, components, signatures
from .decomposition import cad_quadrics
from .objects import Atom, ObjectDescriptor, Region, Relation

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


@dataclass
class BettiResult:
    """
    Betti numbers with the bookkeeping behind them

    ``pair_components`` counts the components of every nonempty pairwise intersection;
    ``triple_components`` lists, for each component of a triple intersection, the index of
    the component of the pairs (i, j), (i, l), (j, l) containing it.
    """
    b0: int
    b1: int
    d0: int
    d1: int
    rank_a: int
    rank_b: int
    matrix_a: QMatrix
    matrix_b: QMatrix
    pair_components: Dict[Pair, int] = field(default_factory=dict)
    triple_components: Dict[Triple, List[Tuple[int, int, int]]] = field(default_factory=dict)
    shear: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "b0": self.b0,
            "b1": self.b1,
            "d0": self.d0,
            "d1": self.d1,
            "rankA": self.rank_a,
            "rankB": self.rank_b,
            "pairComponents": {
                f"{i + 1},{j + 1}": n for (i, j), n in sorted(self.pair_components.items())
            },
            "tripleComponents": {
                f"{i + 1},{j + 1},{l + 1}": [list(row) for row in rows]
                for (i, j, l), rows in sorted(self.triple_components.items())
            },
        }


def _region(relations: Sequence[Relation], positions: Sequence[int]) -> Region:
    """Conjunction of the objects' relations, on 1-based positions of a decomposition"""
    return Region.conjunction([Atom(p, relations[p - 1]) for p in positions])


def pair_task(
    polys: Tuple[MPoly, MPoly], relations: Tuple[Relation, Relation], t: int
) -> List[Signature]:
    """Components of S_i and S_j, as signatures"""
    cad = cad_quadrics(polys, shear=t, complete=False)
    return signatures(cad, components(cad, _region(relations, (1, 2))))


def triple_task(
    polys: Tuple[MPoly, MPoly, MPoly], relations: Tuple[Relation, Relation, Relation], t: int
) -> List[Tuple[Signature, Signature, Signature]]:
    """
    Components of S_i, S_j and S_l, each given by the signatures of the components of
    S_i and S_j, S_i and S_l, S_j and S_l containing it
    """
    cad = cad_quadrics(polys, shear=t, complete=False)
    triple = components(cad, _region(relations, (1, 2, 3)))
    parents = []
    for positions in ((1, 2), (1, 3), (2, 3)):
        found = components(cad, _region(relations, positions))
        parents.append((component_of(found), signatures(cad, found)))
    rows = []
    for component in triple:
        cell = component.cells[0]
        rows.append(tuple(marks[owner[cell]] for owner, marks in parents))
    return rows


def _run(task: Callable, arguments: List[tuple], jobs: int) -> List[Any]:
    if jobs == 1 or len(arguments) < 2:
        return [task(*args) for args in arguments]
    workers = jobs if jobs > 0 else os.cpu_count()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, *zip(*arguments)))


def _locate(signature: Signature, known: List[Signature], pair: Pair) -> int:
    for index, candidate in enumerate(known):
        if candidate.matches(signature):
            return index
    raise InvariantBreach(f"orphan triple component: no component of pair {pair} matches")


def incidence(
    triples: Dict[Triple, List[Tuple[Signature, Signature, Signature]]],
    pairs: Dict[Pair, List[Signature]],
) -> Dict[Triple, List[Tuple[int, int, int]]]:
    """
    Containing pair components of every triple component

    Raises:
        InvariantBreach: a triple component has no matching pair component
    """
    result = {}
    for (i, j, l), rows in triples.items():
        parents = ((i, j), (i, l), (j, l))
        result[(i, j, l)] = [
            tuple(_locate(s, pairs[p], p) for s, p in zip(row, parents)) for row in rows
        ]
    return result


def mv_matrices(
    count: int,
    pair_components: Dict[Pair, int],
    triple_components: Dict[Triple, List[Tuple[int, int, int]]],
) -> Tuple[QMatrix, QMatrix, int, int]:
    """
    Matrices of the Mayer-Vietoris maps and the dimensions d0, d1

    A has a row per nonempty pairwise intersection with -1 at i and +1 at j. B has a row per
    triple component with +1, -1, +1 at its parents in (i, j), (i, l), (j, l); its columns are
    the pair components, pairs in lexicographic order.
    """
    nonempty = sorted(p for p, n in pair_components.items() if n > 0)
    offsets: Dict[Pair, int] = {}
    d1 = 0
    for pair in nonempty:
        offsets[pair] = d1
        d1 += pair_components[pair]

    rows_a = []
    for i, j in nonempty:
        row = [0] * count
        row[i], row[j] = -1, 1
        rows_a.append(row)

    rows_b = []
    for (i, j, l), rows in sorted(triple_components.items()):
        for a, b, c in rows:
            row = [0] * d1
            row[offsets[(i, j)] + a] += 1
            row[offsets[(i, l)] + b] -= 1
            row[offsets[(j, l)] + c] += 1
            rows_b.append(row)
    return QMatrix.from_rows(rows_a, count), QMatrix.from_rows(rows_b, d1), count, d1


def rank(matrix: QMatrix) -> int:
    return matrix.rank()


def _betti_sheared(polys: Tuple[MPoly, ...], relations: Tuple[Relation, ...], t: int,
                   jobs: int) -> BettiResult:
    count = len(polys)
    pairs = list(combinations(range(count), 2))
    pair_signatures = dict(zip(pairs, _run(
        pair_task,
        [((polys[i], polys[j]), (relations[i], relations[j]), t) for i, j in pairs],
        jobs,
    )))
    logger.info(f"Pairwise intersections: {sum(map(len, pair_signatures.values()))} components")

    triples = [
        (i, j, l) for i, j, l in combinations(range(count), 3)
        if pair_signatures[(i, j)] and pair_signatures[(i, l)] and pair_signatures[(j, l)]
    ]
    triple_signatures = dict(zip(triples, _run(
        triple_task,
        [(tuple(polys[k] for k in tr), tuple(relations[k] for k in tr), t) for tr in triples],
        jobs,
    )))

    pair_components = {p: len(s) for p, s in pair_signatures.items() if s}
    triple_components = {
        tr: rows for tr, rows in incidence(triple_signatures, pair_signatures).items() if rows
    }
    matrix_a, matrix_b, d0, d1 = mv_matrices(count, pair_components, triple_components)
    rank_a, rank_b = rank(matrix_a), rank(matrix_b)
    b0 = d0 - rank_a
    b1 = d1 - rank_b - rank_a
    if b0 < 0 or b1 < 0:
        raise InvariantBreach(f"negative Betti number: b0={b0}, b1={b1}")
    logger.info(f"Ranks: A {rank_a}, B {rank_b}; b0={b0}, b1={b1}")
    return BettiResult(
        b0, b1, d0, d1, rank_a, rank_b, matrix_a, matrix_b,
        pair_components, triple_components, t,
    )


def betti01(
    objects: Sequence[ObjectDescriptor],
    jobs: int = 1,
    budget: int = DEFAULT_SHEAR_BUDGET,
) -> BettiResult:
    """
    Zero-th and first Betti numbers of the union of the objects

    All decompositions share one frame: the objects are made X3-regular jointly and every
    decomposition uses the same plane shear, retried from scratch when one of them is not
    generic.

    Args:
        objects: validated ellipsoids and solid ellipsoids
        jobs: worker processes for the decompositions (0 = one per CPU, 1 = sequential)
        budget: shears tried before giving up

    Raises:
        ShearBudgetExceeded: no common shear is generic for every decomposition
        InvariantBreach: inconsistent decompositions
    """
    if not objects:
        raise ValueError("at least one object is required")
    regular, _ = regularize([o.poly for o in objects], budget)
    relations = tuple(o.relation for o in objects)
    attempted: List[int] = []
    last = None
    for t in range(budget):
        attempted.append(t)
        try:
            return _betti_sheared(regular, relations, t, jobs)
        except NotGenericError as error:
            logger.info(f"Shear t={t} rejected for the arrangement: {error}")
            last = error
    raise ShearBudgetExceeded(attempted, last)
