"""Simple-type inference for de Bruijn terms and typable-term counts.

Inference is plain first-order unification with an occurs check.  Each
lambda introduces one type variable; free indices are typed in an implicit
context, so every occurrence of the same free variable shares one type
variable.  A term is typable when unification succeeds.

Internally a type is either an ``int`` (a type variable) or a pair
``(dom, cod)`` (an arrow); the public :class:`TVar` / :class:`Arrow` values
are only built for the final answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from binlambda.term import Index, Abs, Term
from binlambda.unrank import enumerate_terms


@dataclass(frozen=True)
class TVar:
    id: int

    def __str__(self):
        return render_type(self)


@dataclass(frozen=True)
class Arrow:
    dom: SimpleType
    cod: SimpleType

    def __str__(self):
        return render_type(self)


SimpleType = Union[TVar, Arrow]


class UnificationError(Exception):
    pass


class Substitution:
    """Triangular substitution: bindings may mention other bound variables.

    :meth:`resolved` flattens it into an idempotent mapping.
    """

    def __init__(self):
        self.bindings: dict[int, object] = {}

    def walk(self, t):
        b = self.bindings
        while type(t) is int and t in b:
            t = b[t]
        return t

    def occurs(self, v: int, t) -> bool:
        stack = [t]
        while stack:
            t = self.walk(stack.pop())
            if type(t) is int:
                if t == v:
                    return True
            else:
                stack.append(t[0])
                stack.append(t[1])
        return False

    def unify(self, a, b) -> None:
        work = [(a, b)]
        while work:
            a, b = work.pop()
            a = self.walk(a)
            b = self.walk(b)
            if a is b:
                continue
            if type(a) is int:
                if type(b) is int:
                    if a != b:
                        self.bindings[a] = b
                    continue
                if self.occurs(a, b):
                    raise UnificationError(f"occurs check: {a} in {b}")
                self.bindings[a] = b
            elif type(b) is int:
                if self.occurs(b, a):
                    raise UnificationError(f"occurs check: {b} in {a}")
                self.bindings[b] = a
            else:
                work.append((a[0], b[0]))
                work.append((a[1], b[1]))

    def apply(self, t):
        """Fully substitute ``t`` (iteratively, so deep types are fine)."""
        out = []
        stack = [(t, False)]
        while stack:
            t, ready = stack.pop()
            if ready:
                cod = out.pop()
                dom = out.pop()
                out.append((dom, cod))
                continue
            t = self.walk(t)
            if type(t) is int:
                out.append(t)
            else:
                stack.append((None, True))
                stack.append((t[1], False))
                stack.append((t[0], False))
        return out[0]

    def resolved(self) -> dict:
        return {v: self.apply(v) for v in self.bindings}


def _infer_raw(t: Term, constraints: Optional[list] = None):
    """Unify the typing constraints of ``t``; returns (root type, subst).

    Raises UnificationError on failure.  When ``constraints`` is a list,
    every equation handed to the unifier is appended to it.
    """
    sub = Substitution()
    fresh = 1
    free: dict[int, int] = {}

    def eq(a, b):
        if constraints is not None:
            constraints.append((a, b))
        sub.unify(a, b)

    # (term, binder chain, depth, expected type); the chain is a linked
    # list (type of innermost binder, rest)
    stack = [(t, None, 0, 0)]
    while stack:
        t, ctx, depth, expected = stack.pop()
        if type(t) is Index:
            i = t.i
            if i <= depth:
                for _ in range(i - 1):
                    ctx = ctx[1]
                eq(expected, ctx[0])
            else:
                key = i - depth
                v = free.get(key)
                if v is None:
                    free[key] = expected
                else:
                    eq(expected, v)
        elif type(t) is Abs:
            e = sub.walk(expected)
            if type(e) is int:
                dom, cod = fresh, fresh + 1
                fresh += 2
                eq(e, (dom, cod))
            else:
                dom, cod = e
            stack.append((t.body, (dom, ctx), depth + 1, cod))
        else:
            a = fresh
            fresh += 1
            stack.append((t.arg, ctx, depth, a))
            stack.append((t.fun, ctx, depth, (a, expected)))
    return 0, sub


def _to_public(t) -> SimpleType:
    """Rename variables 0, 1, 2, ... in left-to-right first-use order."""
    names: dict[int, int] = {}
    out = []
    stack = [(t, False)]
    while stack:
        t, ready = stack.pop()
        if ready:
            cod = out.pop()
            dom = out.pop()
            out.append(Arrow(dom, cod))
        elif type(t) is int:
            out.append(TVar(names.setdefault(t, len(names))))
        else:
            stack.append((None, True))
            stack.append((t[1], False))
            stack.append((t[0], False))
    return out[0]


def infer(t: Term, check: bool = False) -> Optional[SimpleType]:
    """Principal simple type of ``t``, or None if ``t`` is untypable.

    With ``check=True`` the final substitution is verified to be idempotent
    and to solve every generated equation.
    """
    constraints = [] if check else None
    try:
        root, sub = _infer_raw(t, constraints)
    except UnificationError:
        return None
    if check:
        _check_solution(sub, constraints)
    return _to_public(sub.apply(root))


def _check_solution(sub: Substitution, constraints) -> None:
    flat = sub.resolved()
    final = Substitution()
    final.bindings = flat
    for v, ty in flat.items():
        assert final.apply(ty) == ty, f"substitution not idempotent at {v}"
    for a, b in constraints:
        assert final.apply(a) == final.apply(b), f"unsolved equation {a} = {b}"


def is_typable(t: Term) -> bool:
    try:
        _infer_raw(t)
    except UnificationError:
        return False
    return True


def count_typable(m, n: int) -> int:
    """Number of typable terms of size ``n`` with at most ``m`` free indices.

    ``m`` may be ``math.inf``.  Every term of the class is checked.
    """
    return sum(1 for t in enumerate_terms(m, n) if is_typable(t))


_GREEK = "αβγδεζηθικλμνξοπρστυφχψω"


def type_var_name(i: int) -> str:
    if i < len(_GREEK):
        return _GREEK[i]
    return f"{_GREEK[i % len(_GREEK)]}{i // len(_GREEK)}"


def render_type(ty: SimpleType) -> str:
    """Arrows associate to the right: ``(α → β) → α → β``."""
    if isinstance(ty, TVar):
        return type_var_name(ty.id)
    dom = render_type(ty.dom)
    if isinstance(ty.dom, Arrow):
        dom = f"({dom})"
    return f"{dom} → {render_type(ty.cod)}"
