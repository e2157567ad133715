"""Finite abstraction algebras, valuations, evaluation and model checking.

Universes are finite and carrier values are represented as indices
0..size-1.  Operations are extensional tables; operators are tables keyed
by argument tuples where a binder-covered argument position carries the
entry tuple of the argument operation.  Everything is then checkable by
exhaustive enumeration.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Mapping, Sequence

from .errors import (
    ArityCapExceeded,
    ArityMismatch,
    DuplicateName,
    IllFormedTemplate,
    IllFormedTerm,
    NotLogicAlgebra,
    NotLogicSignature,
    TermError,
)
from .logics import (
    ALL,
    AND,
    EQ,
    EX,
    FALSE,
    IFF,
    IMP,
    NEQ,
    NOT,
    OR,
    SIG_K,
    TRUE,
)
from .shape import BINOP_SHAPE, Shape, Signature, is_logic_signature, make_shape
from .subst import Substitution, apply_subst
from .term import Abs, Term, Var, check_wellformed, free_vars


@dataclass(frozen=True)
class Universe:
    value_names: tuple[str, ...]

    def __post_init__(self):
        if not self.value_names:
            raise ValueError("universe must contain at least one value")
        if len(set(self.value_names)) != len(self.value_names):
            raise DuplicateName("universe value names must be distinct")

    @property
    def size(self) -> int:
        return len(self.value_names)

    def index(self, name: str) -> int:
        return self.value_names.index(name)


@dataclass(frozen=True)
class OperationTable:
    """Total n-ary operation over a carrier of the given size; entries are
    listed row-major over argument tuples."""
    size: int
    arity: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.size ** self.arity:
            raise ArityMismatch(
                f"table of arity {self.arity} over {self.size} values needs "
                f"{self.size ** self.arity} entries, got {len(self.entries)}")

    def apply(self, args: Sequence[int]) -> int:
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return self.entries[idx]


def constant_table(size: int, arity: int, value: int) -> OperationTable:
    return OperationTable(size, arity, (value,) * size ** arity)


def argument_keys(size: int, shape: Shape) -> Iterator[tuple]:
    """Every tuple of arguments a shape-compatible operator can receive:
    a value index for p_i = ∅, the entry tuple of a |p_i|-ary operation
    otherwise."""
    spaces = []
    for p in shape.binder_sets:
        if not p:
            spaces.append(tuple(range(size)))
        else:
            spaces.append(tuple(product(range(size), repeat=size ** len(p))))
    return product(*spaces)


@dataclass(frozen=True)
class OperatorImpl:
    shape: Shape
    rule: Mapping[tuple, int]

    def check_total(self, size: int) -> None:
        for key in argument_keys(size, self.shape):
            if key not in self.rule:
                raise ArityMismatch(f"operator rule missing entry for {key}")


@dataclass(frozen=True)
class AbstractionAlgebra:
    universe: Universe
    signature: Signature
    interp: Mapping[str, OperatorImpl]

    def __post_init__(self):
        for d in self.signature.decls:
            impl = self.interp.get(d.name)
            if impl is None:
                raise IllFormedTerm(f"abstraction {d.name!r} is uninterpreted")
            if impl.shape != d.shape:
                raise IllFormedTerm(
                    f"interpretation of {d.name!r} has shape {impl.shape}, "
                    f"declared {d.shape}")
            impl.check_total(self.universe.size)

    @property
    def size(self) -> int:
        return self.universe.size

    def value_of(self, name: str) -> int:
        """Interpretation of a value-shaped abstraction."""
        return self.interp[name].rule[()]

    def lookup(self, name: str, key: tuple) -> int:
        impl = self.interp.get(name)
        if impl is None:
            raise IllFormedTerm(f"abstraction {name!r} is uninterpreted")
        return impl.rule[key]


@dataclass(frozen=True)
class Valuation:
    """Finite overrides over the default valuation that assigns the
    constant value-0 operation at every (name, arity)."""
    size: int
    overrides: Mapping[tuple[str, int], OperationTable] = field(default_factory=dict)

    def get(self, name: str, arity: int) -> OperationTable:
        table = self.overrides.get((name, arity))
        if table is None:
            return constant_table(self.size, arity, 0)
        return table


def update_valuation(nu: Valuation, bindings: Sequence[tuple[str, int]]) -> Valuation:
    """nu[x0 := u0, ..., xk-1 := uk-1]: updated at arity 0 only."""
    names = [x for x, _ in bindings]
    if len(set(names)) != len(names):
        raise DuplicateName(f"update binds {names} with repeats")
    if not bindings:
        return nu
    overrides = dict(nu.overrides)
    for x, u in bindings:
        overrides[(x, 0)] = constant_table(nu.size, 0, u)
    return Valuation(nu.size, overrides)


def _eval(lookup: Callable[[str, tuple], int], size: int, nu: Valuation,
          t: Term) -> int:
    if isinstance(t, Var):
        f = nu.get(t.name, t.arity)
        return f.apply([_eval(lookup, size, nu, a) for a in t.args])
    key = []
    for i, a in enumerate(t.args):
        frame = t.frame(i)
        if not frame:
            key.append(_eval(lookup, size, nu, a))
        else:
            entries = []
            for us in product(range(size), repeat=len(frame)):
                nu2 = update_valuation(nu, list(zip(frame, us)))
                entries.append(_eval(lookup, size, nu2, a))
            key.append(tuple(entries))
    return lookup(t.name, tuple(key))


def eval_term(alg: AbstractionAlgebra, nu: Valuation, t: Term) -> int:
    """Value of t in alg under nu; requires t well-formed over alg's
    signature."""
    try:
        check_wellformed(t, alg.signature)
    except TermError as e:
        raise IllFormedTerm(str(e)) from e
    return _eval(alg.lookup, alg.size, nu, t)


def valuation_from_subst(nu: Valuation, sigma: Substitution,
                         alg: AbstractionAlgebra) -> Valuation:
    """The valuation ν_σ: mapped variables take the value of their
    (resolved) template under ν, unmapped ones fall through to ν."""
    if not isinstance(sigma, Substitution):
        sigma = Substitution(sigma)
    overrides = dict(nu.overrides)
    for (name, arity), tmpl in sigma.items():
        try:
            check_wellformed(tmpl.body, alg.signature)
        except TermError as e:
            raise IllFormedTemplate(str(e)) from e
        if arity == 0:
            u = _eval(alg.lookup, alg.size, nu, tmpl.body)
            overrides[(name, 0)] = constant_table(alg.size, 0, u)
        else:
            entries = []
            for us in product(range(alg.size), repeat=arity):
                nu2 = update_valuation(nu, list(zip(tmpl.binders, us)))
                entries.append(_eval(alg.lookup, alg.size, nu2, tmpl.body))
            overrides[(name, arity)] = OperationTable(alg.size, arity, tuple(entries))
    return Valuation(alg.size, overrides)


# --- logic algebras and model checking -------------------------------------

def is_logic_algebra(alg: AbstractionAlgebra) -> bool:
    """Check the two minimum requirements on ⇒ and ∀ by enumeration."""
    if not is_logic_signature(alg.signature):
        raise NotLogicSignature("signature lacks ⊤/⇒/∀ with their required shapes")
    top = alg.value_of(TRUE)
    imp = alg.interp[IMP]
    for u in range(alg.size):
        if imp.rule[(top, u)] == top and u != top:
            return False
    const_top = (top,) * alg.size
    return alg.interp[ALL].rule[(const_top,)] == top


@dataclass(frozen=True)
class AxiomVerdict:
    label: str
    axiom: Term
    passed: bool
    # on failure: the valuation restricted to the axiom's free variables,
    # and the value the axiom evaluated to
    failing_valuation: tuple[tuple[tuple[str, int], tuple[int, ...]], ...] | None = None
    value: int | None = None


@dataclass(frozen=True)
class ModelReport:
    verdicts: tuple[AxiomVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def all_tables(size: int, arity: int) -> Iterator[OperationTable]:
    for entries in product(range(size), repeat=size ** arity):
        yield OperationTable(size, arity, entries)


def check_model(alg: AbstractionAlgebra, axioms: Sequence[Term],
                arity_cap: int = 2,
                labels: Sequence[str] | None = None) -> ModelReport:
    """Exhaustively check that every axiom evaluates to I(⊤) under every
    assignment of operations to its free variables."""
    if not is_logic_algebra(alg):
        raise NotLogicAlgebra("⇒ or ∀ violates the logic-algebra conditions")
    top = alg.value_of(TRUE)
    size = alg.size
    if labels is None:
        labels = [str(i + 1) for i in range(len(axioms))]
    verdicts = []
    for label, axiom in zip(labels, axioms):
        check_wellformed(axiom, alg.signature)
        fvs = sorted(free_vars(axiom))
        for name, arity in fvs:
            if arity > arity_cap:
                raise ArityCapExceeded(
                    f"axiom {label}: free variable {name} has arity {arity} > "
                    f"cap {arity_cap}")
        verdict = AxiomVerdict(label, axiom, True)
        for tables in product(*(all_tables(size, n) for _, n in fvs)):
            nu = Valuation(size, dict(zip(fvs, tables)))
            value = _eval(alg.lookup, size, nu, axiom)
            if value != top:
                verdict = AxiomVerdict(
                    label, axiom, False,
                    tuple((fv, tb.entries) for fv, tb in zip(fvs, tables)),
                    value)
                break
        verdicts.append(verdict)
    return ModelReport(tuple(verdicts))


# --- builtin models ---------------------------------------------------------

def _value_impl(u: int) -> OperatorImpl:
    return OperatorImpl(make_shape(0, []), {(): u})


def _table_impl(size: int, arity: int, fn) -> OperatorImpl:
    shape = make_shape(0, [()] * arity)
    rule = {key: fn(*key) for key in argument_keys(size, shape)}
    return OperatorImpl(shape, rule)


def _binder_impl(size: int, fn) -> OperatorImpl:
    shape = make_shape(1, [(0,)])
    rule = {key: fn(key[0]) for key in argument_keys(size, shape)}
    return OperatorImpl(shape, rule)


def boolean_model() -> AbstractionAlgebra:
    """Two-element boolean algebra over the classical signature, with ∀
    true on the constantly-true operation only and ∃ true when some entry
    is true."""
    T, F = 0, 1
    b = lambda cond: T if cond else F
    interp = {
        TRUE: _value_impl(T),
        FALSE: _value_impl(F),
        IMP: _table_impl(2, 2, lambda a, c: b(a == F or c == T)),
        NOT: _table_impl(2, 1, lambda a: b(a == F)),
        AND: _table_impl(2, 2, lambda a, c: b(a == T and c == T)),
        OR: _table_impl(2, 2, lambda a, c: b(a == T or c == T)),
        IFF: _table_impl(2, 2, lambda a, c: b(a == c)),
        EQ: _table_impl(2, 2, lambda a, c: b(a == c)),
        NEQ: _table_impl(2, 2, lambda a, c: b(a != c)),
        ALL: _binder_impl(2, lambda f: b(all(u == T for u in f))),
        EX: _binder_impl(2, lambda f: b(any(u == T for u in f))),
    }
    return AbstractionAlgebra(Universe(("T", "F")), SIG_K, interp)


def degenerate_model(sig: Signature) -> AbstractionAlgebra:
    """One-value universe; each abstraction gets the unique compatible
    operator."""
    interp = {}
    for d in sig.decls:
        rule = {key: 0 for key in argument_keys(1, d.shape)}
        interp[d.name] = OperatorImpl(d.shape, rule)
    return AbstractionAlgebra(Universe(("*",)), sig, interp)


# --- enumeration and model search -------------------------------------------

def enumerate_algebras(sig: Signature, size: int,
                       limit: int = 10 ** 6) -> Iterator[AbstractionAlgebra]:
    """All abstraction algebras over sig with the given carrier size.
    Only feasible for tiny signatures; guarded by a count limit."""
    names = [str(i) for i in range(size)]
    keyspaces = [tuple(argument_keys(size, d.shape)) for d in sig.decls]
    total = 1
    for keys in keyspaces:
        total *= size ** len(keys)
    if total > limit:
        raise ArityCapExceeded(
            f"enumeration of {total} algebras exceeds limit {limit}")
    for assignment in product(*(product(range(size), repeat=len(keys))
                                for keys in keyspaces)):
        interp = {
            d.name: OperatorImpl(d.shape, dict(zip(keys, values)))
            for d, keys, values in zip(sig.decls, keyspaces, assignment)
        }
        yield AbstractionAlgebra(Universe(tuple(names)), sig, interp)


class _Need(Exception):
    def __init__(self, key):
        self.key = key


def find_models(sig: Signature, axioms: Sequence[Term], size: int,
                limit: int = 1) -> list[AbstractionAlgebra]:
    """Search for logic algebras of the given carrier size in which every
    axiom holds under every valuation.

    Interpretation entries are chosen lazily: a constraint that needs an
    undetermined table entry branches on its value, so the search never
    materialises the full (often astronomically large) space of operator
    tables.  It is exhaustive: an empty result means no model exists.
    """
    if not is_logic_signature(sig):
        raise NotLogicSignature("signature lacks ⊤/⇒/∀ with their required shapes")
    # The constraint set is closed under renaming carrier values (axiom
    # instances range over all argument tables), so every model is isomorphic
    # to one interpreting ⊤ as value 0; fixing that cuts the search threefold.
    entries: dict[tuple[str, tuple], int] = {(TRUE, ()): 0}
    top = 0

    def query(name: str, key: tuple) -> int:
        k = (name, key)
        if k not in entries:
            raise _Need(k)
        return entries[k]

    # logic-algebra conditions, then axiom instances over all assignments of
    # operations to their free variables (equivalent to all valuations);
    # smaller instances first so unit propagation fires early
    conditions: list[Callable[[], bool]] = []
    for u in range(size):
        conditions.append(
            lambda u=u: not (query(IMP, (top, u)) == top and u != top))
    conditions.append(
        lambda: query(ALL, ((top,) * size,)) == top)

    def _term_size(t: Term) -> int:
        return 1 + sum(_term_size(a) for a in t.args)

    instances = []
    for axiom in axioms:
        check_wellformed(axiom, sig)
        fvs = sorted(free_vars(axiom))
        weight = _term_size(axiom)
        for tables in product(*(tuple(all_tables(size, n)) for _, n in fvs)):
            nu = Valuation(size, dict(zip(fvs, tables)))
            instances.append((weight, axiom, nu))
    instances.sort(key=lambda inst: inst[0])

    constraints: list[Callable[[], bool]] = []
    for _, axiom, nu in instances:
        # redundant modus-ponens consequence of the instance: when every
        # antecedent on the implication spine is ⊤, the conclusion must be ⊤
        # (follows from the instance constraint plus the ⇒ condition); stated
        # separately it propagates without touching the ⇒ table entries
        spine: list[Term] = []
        core = axiom
        while (isinstance(core, Abs) and core.name == IMP
               and core.shape == BINOP_SHAPE):
            spine.append(core.args[0])
            core = core.args[1]
        if spine:
            def mp_consequence(spine=tuple(spine), core=core, nu=nu):
                for antecedent in spine:
                    if _eval(query, size, nu, antecedent) != top:
                        return True
                return _eval(query, size, nu, core) == top
            constraints.append(mp_consequence)
    constraints.extend(conditions)
    for _, axiom, nu in instances:
        constraints.append(
            lambda axiom=axiom, nu=nu: _eval(query, size, nu, axiom) == top)

    found: list[dict] = []

    def solve(cs: list) -> None:
        # propagate: drop satisfied constraints, intersect the viable values
        # of every queried-but-unassigned entry, assign forced entries; then
        # branch on an entry with the fewest viable values
        if len(found) >= limit:
            return
        trail: list = []
        viable: dict[tuple, set] = {}
        while True:
            remaining = []
            viable = {}
            progress = False
            failed = False
            for c in cs:
                try:
                    ok = c()
                except _Need as need:
                    k = need.key
                    ok_vals = set()
                    for value in viable.get(k, range(size)):
                        entries[k] = value
                        try:
                            if c() is not False:
                                ok_vals.add(value)
                        except _Need:
                            ok_vals.add(value)
                    del entries[k]
                    if not ok_vals:
                        failed = True
                        break
                    if len(ok_vals) == 1:
                        entries[k] = next(iter(ok_vals))
                        trail.append(k)
                        viable.pop(k, None)
                        progress = True
                    else:
                        viable[k] = ok_vals
                    remaining.append(c)
                    continue
                if not ok:
                    failed = True
                    break
            if failed:
                for k in trail:
                    del entries[k]
                return
            cs = remaining
            if not cs:
                found.append(dict(entries))
                for k in trail:
                    del entries[k]
                return
            if not progress:
                break
        k = min(viable, key=lambda k: len(viable[k]))
        for value in sorted(viable[k]):
            entries[k] = value
            solve(cs)
            if len(found) >= limit:
                break
        del entries[k]
        for k in trail:
            del entries[k]

    solve(constraints)

    models = []
    names = tuple(str(i) for i in range(size))
    for partial in found:
        interp = {}
        for d in sig.decls:
            rule = {key: partial.get((d.name, key), 0)
                    for key in argument_keys(size, d.shape)}
            interp[d.name] = OperatorImpl(d.shape, rule)
        models.append(AbstractionAlgebra(Universe(names), sig, interp))
    return models


# --- model description files -------------------------------------------------

def _key_to_str(key: tuple, names: tuple[str, ...]) -> str:
    parts = []
    for k in key:
        if isinstance(k, tuple):
            parts.append(",".join(names[e] for e in k))
        else:
            parts.append(names[k])
    return ";".join(parts)


def load_model(path: str, sig: Signature,
               aliases: Mapping[str, str] | None = None) -> AbstractionAlgebra:
    """Load a model description from a JSON file.

    Schema: {"carrier": [names...], "interp": {abstraction: spec}} where a
    spec is a value name for value shapes, a nested array for pure
    operations, or an object keyed by ";"-separated argument keys (table
    arguments are ","-joined entry lists) for general operators.
    """
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    universe = Universe(tuple(doc["carrier"]))
    names = universe.value_names
    idx = {n: i for i, n in enumerate(names)}
    aliases = aliases or {}
    raw = {aliases.get(k, k): v for k, v in doc["interp"].items()}
    interp = {}
    for d in sig.decls:
        if d.name not in raw:
            raise IllFormedTerm(f"model file interprets no abstraction {d.name!r}")
        spec = raw[d.name]
        rule = {}
        if d.shape.arity == 0:
            rule[()] = idx[spec]
        elif isinstance(spec, list):
            # nested array for operations: spec[a0][a1]... = value name
            for key in argument_keys(universe.size, d.shape):
                cell = spec
                for a in key:
                    cell = cell[a]
                rule[key] = idx[cell]
        else:
            table = {k: idx[v] for k, v in spec.items()}
            for key in argument_keys(universe.size, d.shape):
                rule[key] = table[_key_to_str(key, names)]
        interp[d.name] = OperatorImpl(d.shape, rule)
    return AbstractionAlgebra(universe, sig, interp)
