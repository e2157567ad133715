"""Untrusted glue between parsed theory files and the trusted kernel.

The elaborator computes a target term for every proof step, builds the
corresponding kernel proof node and asks the kernel to certify it.  The
kernel re-derives everything, so a bug here can only produce a spurious
failure, never a bogus theorem.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AbstractionAlgebra,
    ModelReport,
    OperatorImpl,
    Universe,
    argument_keys,
    boolean_model,
    check_model,
    degenerate_model,
    load_model,
)
from .errors import AbslogError, ProofError
from .kernel import All, Ax, Lemma, Mp, Proof, Subst, TheoremDB, check_proof
from .logics import IMP, Logic, all_
from .shape import BINOP_SHAPE, Signature, extends_signature
from .subst import apply_subst
from .syntax import (
    ALIAS,
    Diagnostic,
    ModelBlock,
    ProofStep,
    TheoremBlock,
    TheoryFile,
)
from .term import Abs, Term, alpha_eq


@dataclass(frozen=True)
class BlockResult:
    name: str
    kind: str
    verdict: str  # "proved" | "failed"
    statement: Term | None
    diagnostics: tuple[Diagnostic, ...]

    @property
    def passed(self) -> bool:
        return self.verdict == "proved"

    def to_json(self):
        return {"name": self.name, "kind": self.kind, "verdict": self.verdict,
                "diagnostics": [d.to_json() for d in self.diagnostics]}


@dataclass(frozen=True)
class CheckReport:
    results: tuple[BlockResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def _err(step: ProofStep, message: str, code: str) -> Diagnostic:
    return Diagnostic("error", step.line, step.col, message, code)


def _elaborate(step: ProofStep, trees: dict, stmts: dict) -> Proof:
    def ref(name: str) -> Proof:
        if name not in trees:
            e = AbslogError(
                f"step {step.name}: no earlier step named {name!r}")
            e.code = "UnknownStep"
            raise e
        return trees[name]

    if step.rule == "ax":
        return Ax(step.label if step.label is not None else step.term)
    if step.rule == "lemma":
        return Lemma(step.label)
    if step.rule == "subst":
        sub = ref(step.refs[0])
        target = step.claimed
        if target is None:
            target = apply_subst(step.sigma, stmts[step.refs[0]])
        return Subst(target, step.sigma, sub)
    if step.rule == "mp":
        sub_h, sub_g = ref(step.refs[0]), ref(step.refs[1])
        target = step.claimed
        if target is None:
            g = stmts[step.refs[1]]
            if isinstance(g, Abs) and g.name == IMP and g.shape == BINOP_SHAPE:
                target = g.args[1]
            else:
                target = g  # kernel will reject with NotAnImplication
        return Mp(target, sub_h, sub_g)
    if step.rule == "all":
        sub = ref(step.refs[0])
        target = step.claimed
        if target is None:
            target = all_(step.binder, stmts[step.refs[0]])
        return All(target, step.binder, sub)
    raise AbslogError(f"unknown proof rule {step.rule!r}")


def check_theorem(logic: Logic, block: TheoremBlock,
                  db: TheoremDB) -> BlockResult:
    trees: dict[str, Proof] = {}
    stmts: dict[str, Term] = {}
    last = None
    for step in block.steps:
        if step.name in trees:
            return BlockResult(block.name, "theorem", "failed", None,
                               (_err(step, f"step {step.name!r} defined twice",
                                     "DuplicateStep"),))
        try:
            node = _elaborate(step, trees, stmts)
            thm = check_proof(logic, node, db)
        except ProofError as e:
            return BlockResult(block.name, "theorem", "failed", None,
                               (_err(step, e.message, e.code),))
        except AbslogError as e:
            return BlockResult(block.name, "theorem", "failed", None,
                               (_err(step, e.message, e.code),))
        if step.claimed is not None and not alpha_eq(thm.statement, step.claimed):
            return BlockResult(block.name, "theorem", "failed", None,
                               (_err(step, "step proves a different statement "
                                           "than annotated", "ClaimMismatch"),))
        trees[step.name] = node
        stmts[step.name] = thm.statement
        last = (node, thm)
    if last is None:
        d = Diagnostic("error", block.line, block.col, "empty proof",
                       "EmptyProof")
        return BlockResult(block.name, "theorem", "failed", None, (d,))
    node, thm = last
    if not alpha_eq(thm.statement, block.statement):
        d = Diagnostic("error", block.line, block.col,
                       "final step does not prove the stated theorem",
                       "ConclusionMismatch")
        return BlockResult(block.name, "theorem", "failed", None, (d,))
    db.add(block.name, thm)
    return BlockResult(block.name, "theorem", "proved", thm.statement, ())


def check_theory(tf: TheoryFile, db: TheoremDB | None = None,
                 logic_name: str = "file") -> CheckReport:
    """Check every theorem block in order, accumulating proved theorems so
    later blocks can cite earlier ones as lemmas."""
    logic = tf.logic(logic_name)
    if db is None:
        db = TheoremDB()
    results = [check_theorem(logic, block, db) for block in tf.theorems]
    return CheckReport(tuple(results))


# --- model checking for theory files ------------------------------------------

_MODEL_ALIASES = dict(ALIAS)


def build_model(block: ModelBlock, sig: Signature) -> AbstractionAlgebra:
    """Turn a parsed in-file model block into an abstraction algebra."""
    universe = Universe(block.carrier)
    idx = {n: i for i, n in enumerate(block.carrier)}

    def value(name: str) -> int:
        if name not in idx:
            raise AbslogError(
                f"model {block.name}: {name!r} is not a carrier value")
        return idx[name]

    raw = {_MODEL_ALIASES.get(k, k): v for k, v in block.interp}
    interp = {}
    for d in sig.decls:
        if d.name not in raw:
            raise AbslogError(
                f"model {block.name} interprets no abstraction {d.name!r}")
        spec = raw[d.name]
        rule = {}
        if isinstance(spec, str):
            if d.shape.arity != 0:
                raise AbslogError(
                    f"model {block.name}: {d.name} needs a table, not a value")
            rule[()] = value(spec)
        else:
            table = {}
            for key, out in spec:
                enc = tuple(
                    tuple(value(e) for e in part) if isinstance(part, tuple)
                    else value(part)
                    for part in key)
                table[enc] = value(out)
            for key in argument_keys(universe.size, d.shape):
                if key not in table:
                    raise AbslogError(
                        f"model {block.name}: table for {d.name} misses an "
                        f"argument tuple")
                rule[key] = table[key]
        interp[d.name] = OperatorImpl(d.shape, rule)
    return AbstractionAlgebra(universe, sig, interp)


def model_for(tf: TheoryFile, spec: str) -> AbstractionAlgebra:
    """Resolve a --model argument: "boolean", "degenerate", the name of a
    model block in the file, or a path to a JSON model description."""
    sig = tf.signature
    block = tf.model_block(spec)
    if block is not None:
        return build_model(block, sig)
    if spec == "degenerate":
        return degenerate_model(sig)
    if spec == "boolean":
        base = boolean_model()
        if not extends_signature(base.signature, sig):
            raise AbslogError(
                "the boolean model only interprets the classical connectives")
        return AbstractionAlgebra(base.universe, sig, base.interp)
    return load_model(spec, sig, _MODEL_ALIASES)


def model_check_theory(tf: TheoryFile, spec: str,
                       arity_cap: int = 2,
                       logic_name: str = "file") -> ModelReport:
    logic = tf.logic(logic_name)
    alg = model_for(tf, spec)
    return check_model(alg, logic.axiom_terms, arity_cap, logic.labels)
