"""Shared test utilities: independent evaluators and formula generators.

The evaluators here are deliberately separate from the package's oracle
code paths: expected values in the tests are computed by these brute-force
routines, never by the code under test.
"""
from __future__ import annotations

import itertools

from hypothesis import strategies as st

from addnf import And, App, Not, Or, Prop


def formula_strategy(props):
    atoms = st.sampled_from([Prop(p) for p in props])
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            kids.map(Not),
            st.tuples(kids, kids).map(lambda t: And(*t)),
            st.tuples(kids, kids).map(lambda t: Or(*t)),
        ),
        max_leaves=12,
    )


# -- independent propositional semantics --------------------------------------


def eval_bool(f, true_props) -> bool:
    if isinstance(f, Prop):
        return f.name in true_props
    if isinstance(f, Not):
        return not eval_bool(f.child, true_props)
    if isinstance(f, And):
        return eval_bool(f.left, true_props) and eval_bool(f.right, true_props)
    if isinstance(f, Or):
        return eval_bool(f.left, true_props) or eval_bool(f.right, true_props)
    raise TypeError(f"not a propositional formula: {f!r}")


def assignment_code(props, true_props) -> int:
    """Member index of the minterm for an assignment, first prop most
    significant, a cleared bit meaning the proposition is positive."""
    props = tuple(props)
    n = len(props)
    return sum(1 << (n - 1 - j) for j, p in enumerate(props) if p not in true_props)


def minterm_sigma(f, props) -> frozenset[int]:
    """Truth-table member set of ``f`` over ``props``."""
    props = tuple(props)
    out = set()
    for choice in itertools.product((True, False), repeat=len(props)):
        true = frozenset(p for p, c in zip(props, choice) if c)
        if eval_bool(f, true):
            out.add(assignment_code(props, true))
    return frozenset(out)


# -- formula generators --------------------------------------------------------


def random_prop_formula(rng, props, size):
    if size <= 1 or rng.random() < 0.25:
        return Prop(rng.choice(props))
    op = rng.choice(("not", "and", "or"))
    if op == "not":
        return Not(random_prop_formula(rng, props, size - 1))
    cut = rng.randint(1, size - 1)
    left = random_prop_formula(rng, props, cut)
    right = random_prop_formula(rng, props, size - 1 - cut)
    return And(left, right) if op == "and" else Or(left, right)


def exhaustive_prop_formulas(props, height):
    """Every formula over ``props`` of AST height up to ``height``."""
    layer = {Prop(p) for p in props}
    seen = set(layer)
    for _ in range(height - 1):
        grown = set(seen)
        grown.update(Not(f) for f in seen)
        grown.update(And(a, b) for a in seen for b in seen)
        grown.update(Or(a, b) for a in seen for b in seen)
        seen = grown
    return sorted(seen, key=lambda f: (ast_height(f), repr(f)))


def ast_height(f) -> int:
    if isinstance(f, Prop):
        return 1
    if isinstance(f, Not):
        return 1 + ast_height(f.child)
    if isinstance(f, (And, Or)):
        return 1 + max(ast_height(f.left), ast_height(f.right))
    if isinstance(f, App):
        return 1 + max(ast_height(a) for a in f.args)
    raise TypeError(f)


def random_modal_formula(rng, dia, d, size, props=("p",)):
    if size <= 1 or rng.random() < 0.2:
        return Prop(rng.choice(props))
    ops = ["not", "and", "or"] + (["dia", "dia"] if d > 0 else [])
    op = rng.choice(ops)
    if op == "dia":
        return App(dia, (random_modal_formula(rng, dia, d - 1, size - 1, props),))
    if op == "not":
        return Not(random_modal_formula(rng, dia, d, size - 1, props))
    cut = rng.randint(1, size - 1)
    left = random_modal_formula(rng, dia, d, cut, props)
    right = random_modal_formula(rng, dia, d, size - 1 - cut, props)
    return And(left, right) if op == "and" else Or(left, right)


def random_gf_formula(rng, inst, d, size, allowed, pool, quants):
    """Random guarded formula over a small atom pool and quantifier menu."""
    local = [a for a in pool if set(inst.atoms[a][1]) <= allowed]
    if (d == 0 or size <= 1 or rng.random() < 0.3) and local:
        return Prop(rng.choice(local))
    ops = ["not", "and", "or"] if local else []
    if d > 0 and quants:
        ops += ["ex", "ex"]
    op = rng.choice(ops)
    if op == "ex":
        bound, guard = rng.choice(quants)
        gvars = frozenset(inst.atoms[guard][1])
        body = random_gf_formula(rng, inst, d - 1, size - 2, gvars, pool, quants)
        return App(inst.quantifier(bound, guard), (body,))
    if op == "not":
        return Not(random_gf_formula(rng, inst, d, size - 1, allowed, pool, quants))
    cut = max(1, (size - 1) // 2)
    left = random_gf_formula(rng, inst, d, cut, allowed, pool, quants)
    right = random_gf_formula(rng, inst, d, size - 1 - cut, allowed, pool, quants)
    return And(left, right) if op == "and" else Or(left, right)


def random_gf_case(rng, inst, d=1, size=8):
    """A random GF formula whose vocabulary keeps the generated spaces small:
    one or two atoms plus a single quantifier shape guarded from the pool."""
    all_atoms = sorted(inst.atoms)
    pool = rng.sample(all_atoms, rng.randint(1, 2))
    guard = rng.choice(pool)
    gvars = sorted(set(inst.atoms[guard][1]))
    bound = tuple(sorted(rng.sample(gvars, rng.randint(0, len(gvars)))))
    quants = [(bound, guard)]
    return random_gf_formula(rng, inst, d, size, frozenset(inst.variables), pool, quants)
