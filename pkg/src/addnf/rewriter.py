"""Rewriting a formula into an equivalent disjunction of constituents.

``normalize`` is a pure structural recursion over the formula; it never
consults a semantic oracle.  The five cases:

* a proposition keeps the members whose color contains it;
* negation complements the index set;
* conjunction intersects, disjunction unites;
* an application ``conn(a0..ah-1)`` normalizes each argument one degree
  down at the connective's j2 border, then keeps the members having at
  least one positively signed bar tuple drawn from the argument results.

Index sets are handled as big-int bitmasks internally and surfaced as
frozensets of member indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bitsets import iter_bits
from .constituents import DEFAULT_CAP, ConstituentSpace, space
from .domain_system import DomainSystem, Generator, suitable
from .errors import EngineError, UnsuitableGenerator
from .syntax import And, App, Formula, Not, Or, Prop, disj_all


@dataclass(frozen=True)
class NormalizationResult:
    generator: Generator
    sigma: frozenset[int]
    space: ConstituentSpace = field(compare=False, repr=False)
    trace: tuple[str, ...] | None = field(default=None, compare=False)

    def describe(self) -> dict:
        return {
            "generator": self.generator.describe(),
            "sigma": sorted(self.sigma),
            "size": len(self.sigma),
            "space_size": self.space.size,
        }


def normalize(
    f: Formula,
    gen: Generator,
    ds: DomainSystem,
    cap: int = DEFAULT_CAP,
    trace: bool = False,
) -> NormalizationResult:
    """Compute the member set of N(gen) equivalent to ``f``."""
    report = suitable(gen, f, ds)
    if not report:
        raise UnsuitableGenerator(report)
    sp = space(gen, ds, cap)
    steps: list[str] | None = [] if trace else None
    memo: dict = {}
    mask = _sigma_mask(f, sp, ds, cap, memo, steps)
    return NormalizationResult(
        generator=gen,
        sigma=frozenset(iter_bits(mask)),
        space=sp,
        trace=tuple(steps) if steps is not None else None,
    )


def _sigma_mask(f, sp, ds, cap, memo, steps):
    key = (id(sp), id(f))
    hit = memo.get(key)
    if hit is not None:
        return hit[1]
    if isinstance(f, Prop):
        mask = sp.literal_mask(f.name)
        if steps is not None:
            steps.append(f"prop {f.name} at degree {sp.k}")
    elif isinstance(f, Not):
        mask = sp.full_mask ^ _sigma_mask(f.child, sp, ds, cap, memo, steps)
        if steps is not None:
            steps.append(f"not at degree {sp.k}")
    elif isinstance(f, And):
        mask = _sigma_mask(f.left, sp, ds, cap, memo, steps) & _sigma_mask(
            f.right, sp, ds, cap, memo, steps
        )
        if steps is not None:
            steps.append(f"and at degree {sp.k}")
    elif isinstance(f, Or):
        mask = _sigma_mask(f.left, sp, ds, cap, memo, steps) | _sigma_mask(
            f.right, sp, ds, cap, memo, steps
        )
        if steps is not None:
            steps.append(f"or at degree {sp.k}")
    elif isinstance(f, App):
        mask = _app_mask(f, sp, ds, cap, memo, steps)
        if steps is not None:
            steps.append(f"{f.conn.key} at degree {sp.k}")
    else:
        raise TypeError(f"not a formula: {f!r}")
    memo[key] = (f, mask)
    return mask


def _app_mask(f, sp, ds, cap, memo, steps):
    gen = sp.gen
    conn = f.conn
    if sp.k < 1:
        raise EngineError(f"degree 0 space cannot host {conn.key}")
    if not ds.compatible(conn, gen.X, gen.E):
        raise EngineError(
            f"{conn.key} is not compatible with (X, E) of {gen.key}; "
            "the generator should have been rejected as unsuitable"
        )
    child_gen = Generator(gen.k - 1, gen.X, gen.Y, ds.j2_of(conn))
    child = space(child_gen, ds, cap)
    arg_masks = [_sigma_mask(a, child, ds, cap, memo, steps) for a in f.args]
    mask = 0
    for t, item in enumerate(sp.bar):
        if item.conn != conn:
            continue
        if all((arg_masks[j] >> c) & 1 for j, c in enumerate(item.children)):
            mask |= sp.bar_pos_mask(t)
    return mask


def disjunction(result: NormalizationResult) -> Formula:
    """Render the result as one formula, members in canonical index order.

    An empty member set renders as the designated contradiction ``q and
    not q`` over the least proposition of X-tilde.
    """
    sp = result.space
    if not result.sigma:
        q = Prop(sp.xtilde[0])
        return And(q, Not(q))
    return disj_all([sp.formula(i) for i in sorted(result.sigma)])


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    exact: bool
    contexts: int
    bound: int
    countermodel: dict | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "exact": self.exact,
            "contexts": self.contexts,
            "bound": self.bound,
            "countermodel": self.countermodel,
        }


def verify(f: Formula, result: NormalizationResult, oracle, bound: int = 3) -> VerifyReport:
    """Search for a model point separating ``f`` from its disjunction.

    Exact for exact oracles, refutation-complete only up to ``bound``
    otherwise.  The disjunction is evaluated member by member (disjunction
    of truths equals truth of the disjunction).
    """
    sp = result.space
    sigma = sorted(result.sigma)
    checked = 0
    for ctx in oracle.contexts(sp.gen, bound):
        checked += 1
        fm = ctx.eval(f)
        dm = 0
        for i in sigma:
            dm |= ctx.eval(sp.formula(i))
            if dm == ctx.full:
                break
        if fm != dm:
            point = next(iter_bits(fm ^ dm))
            return VerifyReport(
                ok=False,
                exact=oracle.exact,
                contexts=checked,
                bound=bound,
                countermodel={
                    "context": ctx.describe(),
                    "point": ctx.point_desc(point),
                    "formula_holds": bool(fm >> point & 1),
                    "disjunction_holds": bool(dm >> point & 1),
                },
            )
    return VerifyReport(ok=True, exact=oracle.exact, contexts=checked, bound=bound)


def verify_many(sp: ConstituentSpace, items, oracle, bound: int = 3) -> list[VerifyReport]:
    """Batch form of ``verify`` for many (formula, sigma) pairs on one space.

    Member truths are computed once per model and shared across the batch,
    which is what makes large randomized suites affordable.
    """
    items = [(f, frozenset(sigma)) for f, sigma in items]
    failures: dict[int, VerifyReport] = {}
    checked = 0
    for ctx in oracle.contexts(sp.gen, bound):
        checked += 1
        masks = [ctx.eval(sp.formula(i)) for i in range(sp.size)]
        true_at = [
            frozenset(i for i, m in enumerate(masks) if m >> point & 1)
            for point in range(ctx.points)
        ]
        for j, (f, sigma) in enumerate(items):
            if j in failures:
                continue
            fm = ctx.eval(f)
            for point in range(ctx.points):
                holds_f = bool(fm >> point & 1)
                holds_d = not true_at[point].isdisjoint(sigma)
                if holds_f != holds_d:
                    failures[j] = VerifyReport(
                        ok=False,
                        exact=oracle.exact,
                        contexts=checked,
                        bound=bound,
                        countermodel={
                            "context": ctx.describe(),
                            "point": ctx.point_desc(point),
                            "formula_holds": holds_f,
                            "disjunction_holds": holds_d,
                        },
                    )
                    break
    ok = VerifyReport(ok=True, exact=oracle.exact, contexts=checked, bound=bound)
    return [failures.get(j, ok) for j in range(len(items))]
