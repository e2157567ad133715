"""Templates, substitutions and capture-avoiding application.

Substitution is implemented on a nameless (de Bruijn) form: free variables
stay named there, so inserting a template body under a binder can never
capture anything.  The result is converted back to named syntax with a
deterministic renaming scheme, so byte-equal inputs give byte-equal
outputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ArityMismatch, DuplicateBinder
from .term import Abs, Term, Var


def fresh_var(avoid: Iterable[str], base: str) -> str:
    """First of base, base′, base″, ... not in avoid."""
    avoid = set(avoid)
    name = base
    while name in avoid:
        name += "′"
    return name


@dataclass(frozen=True)
class Template:
    binders: tuple[str, ...]
    body: Term

    def __post_init__(self):
        if len(set(self.binders)) != len(self.binders):
            raise DuplicateBinder(f"template binders {self.binders} are not distinct")

    @property
    def arity(self) -> int:
        return len(self.binders)


class Substitution:
    """Finite map from (name, arity) to a template of that arity."""

    def __init__(self, mapping: Mapping[tuple[str, int], Template | Term]):
        out: dict[tuple[str, int], Template] = {}
        for (name, arity), tmpl in mapping.items():
            if not isinstance(tmpl, Template):
                tmpl = Template((), tmpl)
            if tmpl.arity != arity:
                raise ArityMismatch(
                    f"template for ({name}, {arity}) has {tmpl.arity} binders")
            out[(name, arity)] = tmpl
        self.mapping = out

    def __contains__(self, key):
        return key in self.mapping

    def __getitem__(self, key):
        return self.mapping[key]

    def items(self):
        return self.mapping.items()

    def __len__(self):
        return len(self.mapping)

    def __eq__(self, other):
        return isinstance(other, Substitution) and self.mapping == other.mapping

    def __repr__(self):
        return f"Substitution({self.mapping!r})"


# --- hinted de Bruijn form -------------------------------------------------
#
# Like term.to_debruijn but binder name hints are kept for the trip back to
# named syntax, and template parameters are encoded as ("s", i) slots:
#   ("b", k) bound index / ("s", i) slot / ("v", name, args)
#   ("A", absname, shape, hints, args)

def _lookup(name, frames):
    idx = 0
    for fr in reversed(frames):
        for b in reversed(fr):
            if b == name:
                return idx
            idx += 1
    return None


def _encode(t: Term, frames: list, slots: tuple[str, ...]) -> tuple:
    if isinstance(t, Var):
        if t.arity == 0:
            k = _lookup(t.name, frames)
            if k is not None:
                return ("b", k)
            if t.name in slots:
                return ("s", slots.index(t.name))
            return ("v", t.name, ())
        return ("v", t.name, tuple(_encode(a, frames, slots) for a in t.args))
    args = []
    for i, a in enumerate(t.args):
        fr = t.frame(i)
        if fr:
            frames.append(fr)
            args.append(_encode(a, frames, slots))
            frames.pop()
        else:
            args.append(_encode(a, frames, slots))
    return ("A", t.name, t.shape, t.binders, tuple(args))


def _lift(node: tuple, k: int, depth: int = 0) -> tuple:
    """Add k to every bound index that escapes `depth` enclosing binders."""
    tag = node[0]
    if tag == "b":
        j = node[1]
        return ("b", j + k) if j >= depth else node
    if tag == "s":
        return node
    if tag == "v":
        return ("v", node[1], tuple(_lift(a, k, depth) for a in node[2]))
    _, name, shape, hints, args = node
    new_args = []
    for i, a in enumerate(args):
        new_args.append(_lift(a, k, depth + len(shape.binder_sets[i])))
    return ("A", name, shape, hints, tuple(new_args))


def _instantiate(body: tuple, args: tuple, under: int = 0) -> tuple:
    """Plug args into the slots of an encoded template body."""
    tag = body[0]
    if tag == "b":
        return body
    if tag == "s":
        return _lift(args[body[1]], under)
    if tag == "v":
        return ("v", body[1], tuple(_instantiate(a, args, under) for a in body[2]))
    _, name, shape, hints, sub = body
    new_args = []
    for i, a in enumerate(sub):
        new_args.append(_instantiate(a, args, under + len(shape.binder_sets[i])))
    return ("A", name, shape, hints, tuple(new_args))


def _subst_node(node: tuple, enc_sigma: dict) -> tuple:
    tag = node[0]
    if tag in ("b", "s"):
        return node
    if tag == "v":
        _, name, args = node
        new_args = tuple(_subst_node(a, enc_sigma) for a in args)
        key = (name, len(args))
        if key in enc_sigma:
            return _instantiate(enc_sigma[key], new_args)
        return ("v", name, new_args)
    _, name, shape, hints, args = node
    return ("A", name, shape, hints, tuple(_subst_node(a, enc_sigma) for a in args))


def _free_names(node: tuple, out: set) -> None:
    tag = node[0]
    if tag in ("b", "s"):
        return
    if tag == "v":
        out.add(node[1])
        for a in node[2]:
            _free_names(a, out)
        return
    for a in node[4]:
        _free_names(a, out)


def _decode(node: tuple, frames: list, path: frozenset) -> Term:
    tag = node[0]
    if tag == "b":
        idx = node[1]
        for fr in reversed(frames):
            for b in reversed(fr):
                if idx == 0:
                    return Var(b)
                idx -= 1
        raise AssertionError("dangling de Bruijn index")
    if tag == "s":
        raise AssertionError("unresolved template slot")
    if tag == "v":
        return Var(node[1], tuple(_decode(a, frames, path) for a in node[2]))
    _, name, shape, hints, args = node
    avoid = set()
    _free_names(node, avoid)
    avoid |= path
    chosen = []
    for j in range(shape.valence):
        nm = fresh_var(avoid, hints[j] if j < len(hints) else "x")
        avoid.add(nm)
        chosen.append(nm)
    inner_path = path | set(chosen)
    new_args = []
    for i, a in enumerate(args):
        fr = tuple(chosen[j] for j in shape.binder_sets[i])
        if fr:
            frames.append(fr)
            new_args.append(_decode(a, frames, inner_path))
            frames.pop()
        else:
            new_args.append(_decode(a, frames, inner_path))
    return Abs(name, shape, tuple(chosen), tuple(new_args))


def _encode_sigma(sigma: Substitution) -> dict:
    return {
        key: _encode(tmpl.body, [], tmpl.binders)
        for key, tmpl in sigma.items()
    }


def apply_subst(sigma: Substitution | Mapping, t: Term) -> Term:
    """Capture-avoiding substitution; result is a canonical representative
    of the α-class of the substituted term."""
    if not isinstance(sigma, Substitution):
        sigma = Substitution(sigma)
    node = _subst_node(_encode(t, [], ()), _encode_sigma(sigma))
    return _decode(node, [], frozenset())


def resolve_template(tmpl: Template, args: list[Term] | tuple[Term, ...]) -> Term:
    """Apply an n-ary template to n argument terms, capture-avoidingly."""
    if len(args) != tmpl.arity:
        raise ArityMismatch(
            f"template of arity {tmpl.arity} applied to {len(args)} arguments")
    node = _instantiate(
        _encode(tmpl.body, [], tmpl.binders),
        tuple(_encode(a, [], ()) for a in args))
    return _decode(node, [], frozenset())


def canonical(t: Term) -> Term:
    """Deterministic representative of t's α-class (binder hints kept when
    no renaming is forced)."""
    return _decode(_encode(t, [], ()), [], frozenset())
