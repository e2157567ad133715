"""Builtin logics D, E, F, I, K, P, U, U′ and the logic-extension relation.

Abstractions use their glyphs as canonical names; the concrete syntax also
accepts ASCII aliases (see the syntax module).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownLogic
from .shape import (
    BINDER_SHAPE,
    BINOP_SHAPE,
    Signature,
    UNOP_SHAPE,
    VALUE_SHAPE,
    extends_signature,
    is_logic_signature,
    signature,
)
from .term import Abs, Term, Var, alpha_eq, check_wellformed

TRUE, IMP, ALL = "⊤", "⇒", "∀"
EQ, FALSE, NOT, NEQ = "=", "⊥", "¬", "≠"
AND, OR, IFF, EX = "∧", "∨", "⇔", "∃"
FAIL, EX1, THE, SOME = "⅄", "∃₁", "the", "some"
ZERO, SUC, NAT, ADD, MUL = "zero", "suc", "nat", "add", "mul"

SIG_D = signature([(TRUE, VALUE_SHAPE), (IMP, BINOP_SHAPE), (ALL, BINDER_SHAPE)])
SIG_E = SIG_D.extend(signature([(EQ, BINOP_SHAPE)]).decls)
SIG_F = SIG_E.extend(signature(
    [(FALSE, VALUE_SHAPE), (NOT, UNOP_SHAPE), (NEQ, BINOP_SHAPE)]).decls)
SIG_I = SIG_F.extend(signature(
    [(AND, BINOP_SHAPE), (OR, BINOP_SHAPE), (IFF, BINOP_SHAPE), (EX, BINDER_SHAPE)]).decls)
SIG_K = SIG_I
SIG_P = SIG_K.extend(signature(
    [(ZERO, VALUE_SHAPE), (SUC, UNOP_SHAPE), (NAT, UNOP_SHAPE),
     (ADD, BINOP_SHAPE), (MUL, BINOP_SHAPE)]).decls)
SIG_U = SIG_K.extend(signature(
    [(FAIL, VALUE_SHAPE), (EX1, BINDER_SHAPE), (THE, BINDER_SHAPE)]).decls)
SIG_U_PRIME = SIG_K.extend(signature(
    [(FAIL, VALUE_SHAPE), (EX1, BINDER_SHAPE), (SOME, BINDER_SHAPE)]).decls)


# term builders

def v(name: str, *args: Term) -> Var:
    return Var(name, tuple(args))


def const(name: str) -> Abs:
    return Abs(name, VALUE_SHAPE)


def op1(name: str, a: Term) -> Abs:
    return Abs(name, UNOP_SHAPE, (), (a,))


def op2(name: str, a: Term, b: Term) -> Abs:
    return Abs(name, BINOP_SHAPE, (), (a, b))


def binder(name: str, x: str, body: Term) -> Abs:
    return Abs(name, BINDER_SHAPE, (x,), (body,))


def imp(a: Term, b: Term) -> Abs:
    return op2(IMP, a, b)


def eq(a: Term, b: Term) -> Abs:
    return op2(EQ, a, b)


def neg(a: Term) -> Abs:
    return op1(NOT, a)


def all_(x: str, body: Term) -> Abs:
    return binder(ALL, x, body)


@dataclass(frozen=True)
class Logic:
    name: str
    signature: Signature
    axioms: tuple[tuple[str, Term], ...]  # (label, term), order fixed

    def __post_init__(self):
        assert is_logic_signature(self.signature)
        for _, a in self.axioms:
            check_wellformed(a, self.signature)

    def axiom(self, label: str) -> Term | None:
        for lbl, t in self.axioms:
            if lbl == label:
                return t
        return None

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lbl for lbl, _ in self.axioms)

    @property
    def axiom_terms(self) -> tuple[Term, ...]:
        return tuple(t for _, t in self.axioms)

    def extend(self, name, decls=(), axioms=()) -> "Logic":
        return Logic(name, self.signature.extend(decls), self.axioms + tuple(axioms))


def _axioms_d():
    A, B, C, x = v("A"), v("B"), v("C"), v("x")
    Ax = lambda t: v("A", t)
    Bx = lambda t: v("B", t)
    return (
        ("D1", const(TRUE)),
        ("D2", imp(A, imp(B, A))),
        ("D3", imp(imp(A, imp(B, C)), imp(imp(A, B), imp(A, C)))),
        ("D4", imp(all_("x", Ax(v("x"))), Ax(x))),
        ("D5", imp(all_("x", imp(A, Bx(v("x")))), imp(A, all_("x", Bx(v("x")))))),
    )


def _axioms_e():
    A, x, y = v("A"), v("x"), v("y")
    Ax = lambda t: v("A", t)
    return (
        ("E1", eq(x, x)),
        ("E2", imp(eq(x, y), imp(Ax(x), Ax(y)))),
        ("E3", imp(A, eq(A, const(TRUE)))),
    )


def _axioms_f():
    A, x, y = v("A"), v("x"), v("y")
    return (
        ("F1", eq(const(FALSE), all_("x", v("x")))),
        ("F2", eq(neg(A), imp(A, const(FALSE)))),
        ("F3", eq(op2(NEQ, x, y), neg(eq(x, y)))),
    )


def _axioms_i():
    A, B, C = v("A"), v("B"), v("C")
    Ax = lambda t: v("A", t)
    return (
        ("I1", imp(op2(AND, A, B), A)),
        ("I2", imp(op2(AND, A, B), B)),
        ("I3", imp(A, imp(B, op2(AND, A, B)))),
        ("I4", imp(A, op2(OR, A, B))),
        ("I5", imp(B, op2(OR, A, B))),
        ("I6", imp(op2(OR, A, B), imp(imp(A, C), imp(imp(B, C), C)))),
        ("I7", eq(op2(IFF, A, B), op2(AND, imp(A, B), imp(B, A)))),
        ("I8", imp(Ax(v("x")), binder(EX, "x", Ax(v("x"))))),
        ("I9", imp(binder(EX, "x", Ax(v("x"))),
                   imp(all_("x", imp(Ax(v("x")), B)), B))),
    )


def _axioms_k():
    A = v("A")
    return (("K", op2(OR, A, neg(A))),)


def _axioms_p():
    n, m = v("n"), v("m")
    Px = lambda t: v("P", t)
    nat = lambda t: op1(NAT, t)
    suc = lambda t: op1(SUC, t)
    add = lambda a, b: op2(ADD, a, b)
    mul = lambda a, b: op2(MUL, a, b)
    zero = const(ZERO)
    return (
        ("P1", nat(zero)),
        ("P2", imp(nat(n), nat(suc(n)))),
        ("P3", imp(nat(n), op2(NEQ, suc(n), zero))),
        ("P4", imp(nat(n), imp(nat(m), imp(eq(suc(n), suc(m)), eq(n, m))))),
        ("P5", imp(Px(zero),
                   imp(all_("n", imp(nat(v("n")), imp(Px(v("n")), Px(suc(v("n")))))),
                       imp(nat(n), Px(n))))),
        ("P6", imp(nat(n), eq(add(n, zero), n))),
        ("P7", imp(op2(AND, nat(n), nat(m)),
                   eq(add(n, suc(m)), suc(add(n, m))))),
        ("P8", imp(nat(n), eq(mul(n, zero), zero))),
        ("P9", imp(op2(AND, nat(n), nat(m)),
                   eq(mul(n, suc(m)), add(mul(n, m), n)))),
    )


def _axioms_u_shared():
    Ax = lambda t: v("A", t)
    x, y = v("x"), v("y")
    ex1 = binder(EX1, "x", Ax(v("x")))
    return (
        ("U1", op2(AND, op2(NEQ, const(FAIL), const(TRUE)),
                   op2(NEQ, const(FAIL), const(FALSE)))),
        ("U2", eq(ex1,
                  binder(EX, "x", op2(AND, Ax(v("x")),
                                      all_("y", imp(Ax(v("y")), eq(v("x"), v("y")))))))),
    )


def _axioms_u():
    Ax = lambda t: v("A", t)
    x = v("x")
    ex1 = binder(EX1, "x", Ax(v("x")))
    the = binder(THE, "x", Ax(v("x")))
    return _axioms_u_shared() + (
        ("U3", imp(ex1, op2(IFF, Ax(x), eq(the, x)))),
        ("U4", imp(neg(ex1), eq(the, const(FAIL)))),
    )


def _axioms_u_prime():
    Ax = lambda t: v("A", t)
    x = v("x")
    some = binder(SOME, "x", Ax(v("x")))
    return _axioms_u_shared() + (
        ("U'3", imp(Ax(x), Ax(some))),
        ("U'4", imp(neg(binder(EX, "x", Ax(v("x")))), eq(some, const(FAIL)))),
    )


def builtin_logic(name: str, peano_base: str = "K") -> Logic:
    """Return a builtin logic by name: D, E, F, I, K, P, U or U'.

    P is based on K by default; pass peano_base="I" for the intuitionistic
    variant.
    """
    if name == "D":
        return Logic("D", SIG_D, _axioms_d())
    if name == "E":
        return Logic("E", SIG_E, _axioms_d() + _axioms_e())
    if name == "F":
        return Logic("F", SIG_F, _axioms_d() + _axioms_e() + _axioms_f())
    if name == "I":
        return Logic("I", SIG_I,
                     _axioms_d() + _axioms_e() + _axioms_f() + _axioms_i())
    if name == "K":
        return Logic("K", SIG_K,
                     _axioms_d() + _axioms_e() + _axioms_f() + _axioms_i() + _axioms_k())
    if name == "P":
        base = builtin_logic(peano_base)
        if peano_base not in ("I", "K"):
            raise UnknownLogic(f"P must be based on I or K, not {peano_base!r}")
        sig = base.signature.extend(
            d for d in SIG_P.decls if d.name not in base.signature)
        return Logic("P", sig, base.axioms + _axioms_p())
    if name == "U":
        return Logic("U", SIG_U, builtin_logic("K").axioms + _axioms_u())
    if name in ("U'", "U′"):
        return Logic("U'", SIG_U_PRIME,
                     builtin_logic("K").axioms + _axioms_u_prime())
    raise UnknownLogic(f"no builtin logic named {name!r}")


BUILTIN_NAMES = ("D", "E", "F", "I", "K", "P", "U", "U'")


def is_extension(child: Logic, parent: Logic) -> bool:
    """True iff child's signature extends parent's and every parent axiom
    appears among child's axioms modulo α-equivalence."""
    if not extends_signature(child.signature, parent.signature):
        return False
    child_terms = child.axiom_terms
    return all(any(alpha_eq(a, c) for c in child_terms) for a in parent.axiom_terms)
