"""The modal K instance: unary diamonds as full operators.

Verification is an exhaustive search over Kripke models with at most
``bound`` worlds (every accessibility relation per diamond, every
valuation of the relevant propositions, every evaluation world), with the
diamond read existentially.  Refutation-complete only up to the bound;
a tableau decision procedure would be a separate extension.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..domain_system import DomainSystem, Generator
from ..errors import EngineError
from ..syntax import ConnectiveSig, Formula, LogicDef
from .base import Context, Oracle, OracleReport, mask_to_list, masks_to_pairs, split_relation_code

POINT = "*"


class _KripkeContext(Context):
    def __init__(self, worlds: int, relations: dict[str, tuple[int, ...]],
                 valuation: dict[str, int]):
        super().__init__()
        self.points = worlds
        self.full = (1 << worlds) - 1
        self.relations = relations
        self.valuation = valuation

    def prop_mask(self, name: str) -> int:
        try:
            return self.valuation[name]
        except KeyError:
            raise EngineError(f"proposition {name!r} has no valuation in this model")

    def app_mask(self, conn, arg_masks) -> int:
        rel = self.relations[conn.key]
        m = arg_masks[0]
        out = 0
        for w, succ in enumerate(rel):
            if succ & m:
                out |= 1 << w
        return out

    def describe(self) -> dict:
        return {
            "kind": "kripke",
            "worlds": self.points,
            "relations": {k: masks_to_pairs(r) for k, r in sorted(self.relations.items())},
            "valuation": {p: mask_to_list(v) for p, v in sorted(self.valuation.items())},
        }

    def point_desc(self, point: int) -> dict:
        return {"world": point}


class KripkeOracle(Oracle):
    """Bounded Kripke-model search; sound refuter, complete only up to bound."""

    exact = False

    def contexts(self, gen: Generator, bound: int):
        self.guard(gen, bound)
        props = sorted(gen.X)
        conns = gen.sorted_conns()
        for c in conns:
            if c.rank != 1:
                raise EngineError(f"Kripke search supports unary diamonds only, not {c.key}")
        for n in range(1, bound + 1):
            ones = (1 << n) - 1
            rel_codes = range(1 << (n * n))
            val_codes = range(1 << (n * len(props)))
            for combo in itertools.product(rel_codes, repeat=len(conns)):
                relations = {
                    c.key: split_relation_code(code, n) for c, code in zip(conns, combo)
                }
                for v in val_codes:
                    valuation = {p: (v >> (j * n)) & ones for j, p in enumerate(props)}
                    yield _KripkeContext(n, relations, valuation)

    def estimate_contexts(self, gen: Generator, bound: int) -> int:
        total = 0
        for n in range(1, bound + 1):
            total += (1 << (n * n * len(gen.Y))) * (1 << (n * len(gen.X)))
        return total


@dataclass
class ModalKInstance:
    logic: LogicDef
    oracle: KripkeOracle
    diamonds: tuple[ConnectiveSig, ...]

    @property
    def domain(self) -> DomainSystem:
        return self.logic.domain


def modal_k_instance(diamonds=("dia",), propositions=None) -> ModalKInstance:
    """Build the instance with one unary diamond per given name."""
    v = frozenset((POINT,))
    sigs = tuple(ConnectiveSig(name, 1) for name in diamonds)
    ds = DomainSystem(
        points=v,
        iota_atomic={},
        j1={s.key: frozenset() for s in sigs},
        j2={s.key: v for s in sigs},
        iota_default=v,
    )
    oracle = KripkeOracle()
    logic = LogicDef(
        name="modal-k",
        domain=ds,
        oracle=oracle,
        connectives={s.name: s for s in sigs},
        propositions=frozenset(propositions) if propositions is not None else None,
    )
    return ModalKInstance(logic=logic, oracle=oracle, diamonds=sigs)


def kripke_oracle(f: Formula, bound: int = 3) -> OracleReport:
    """Bounded-model verdict for ``f`` over its own vocabulary."""
    return KripkeOracle().check_valid(f, bound=bound)
