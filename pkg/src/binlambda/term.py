"""De Bruijn terms, their binary (Tromp) code and a small concrete syntax.

Indices start at 1.  The size of a term is the length of its code:

    |i|   = i + 1        code 1^i 0
    |\\M|  = |M| + 2      code 00 M
    |M N| = |M| + |N| + 2 code 01 M N

Every traversal here uses an explicit stack, so terms with millions of
nodes (as produced by the Boltzmann samplers) are handled without hitting
the interpreter's recursion limit; that includes ``==`` and ``hash``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from binlambda.errors import MalformedCode, TermSyntaxError, TrailingBits


@dataclass(frozen=True, slots=True, eq=False)
class Index:
    i: int

    def __post_init__(self):
        if self.i < 1:
            raise ValueError(f"de Bruijn index must be >= 1, got {self.i}")

    def __str__(self):
        return render_term(self)


@dataclass(frozen=True, slots=True, eq=False)
class Abs:
    body: Term

    def __str__(self):
        return render_term(self)


@dataclass(frozen=True, slots=True, eq=False)
class App:
    fun: Term
    arg: Term

    def __str__(self):
        return render_term(self)


Term = Union[Index, Abs, App]


def _term_eq(a, b):
    if not isinstance(b, (Index, Abs, App)):
        return NotImplemented
    stack = [(a, b)]
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        if type(a) is not type(b):
            return False
        if type(a) is Index:
            if a.i != b.i:
                return False
        elif type(a) is Abs:
            stack.append((a.body, b.body))
        else:
            stack.append((a.arg, b.arg))
            stack.append((a.fun, b.fun))
    return True


def _term_hash(t):
    # the code determines the term, so equal terms hash equally
    return hash(encode(t))


for _cls in (Index, Abs, App):
    _cls.__eq__ = _term_eq
    _cls.__hash__ = _term_hash


def size(t: Term) -> int:
    total = 0
    stack = [t]
    while stack:
        t = stack.pop()
        if type(t) is Index:
            total += t.i + 1
        elif type(t) is Abs:
            total += 2
            stack.append(t.body)
        else:
            total += 2
            stack.append(t.arg)
            stack.append(t.fun)
    return total


def free_bound(t: Term) -> int:
    """Smallest m such that ``t`` has at most m distinct free indices.

    An occurrence of index i under d lambdas is free when i > d and then
    refers to the (i - d)-th free variable, so the answer is the largest
    such i - d (0 for a closed term).
    """
    best = 0
    stack = [(t, 0)]
    while stack:
        t, depth = stack.pop()
        if type(t) is Index:
            if t.i - depth > best:
                best = t.i - depth
        elif type(t) is Abs:
            stack.append((t.body, depth + 1))
        else:
            stack.append((t.arg, depth))
            stack.append((t.fun, depth))
    return best


def is_closed(t: Term) -> bool:
    return free_bound(t) == 0


def encode(t: Term) -> str:
    out = []
    stack = [t]
    while stack:
        t = stack.pop()
        if type(t) is Index:
            out.append("1" * t.i + "0")
        elif type(t) is Abs:
            out.append("00")
            stack.append(t.body)
        else:
            out.append("01")
            stack.append(t.arg)
            stack.append(t.fun)
    return "".join(out)


# Prefix tokens: 0 = abstraction, -1 = application, i > 0 = index i.
_ABS = 0
_APP = -1


def build_from_prefix(tokens) -> Term:
    """Assemble a term from a complete pre-order token list."""
    stack = []
    for tok in reversed(tokens):
        if tok > 0:
            stack.append(Index(tok))
        elif tok == _ABS:
            stack.append(Abs(stack.pop()))
        else:
            fun = stack.pop()
            stack.append(App(fun, stack.pop()))
    if len(stack) != 1:
        raise ValueError("token list does not describe exactly one term")
    return stack[0]


def decode(bits: str) -> Term:
    """Inverse of :func:`encode`.

    Raises MalformedCode when the bits run out before a term is complete
    (or contain something other than '0'/'1'), and TrailingBits when a
    complete term is followed by extra bits.
    """
    tokens = []
    pending = 1
    pos = 0
    n = len(bits)
    while pending:
        if pos >= n:
            raise MalformedCode(f"code ends after {n} bits with {pending} subterm(s) missing")
        c = bits[pos]
        if c == "0":
            if pos + 1 >= n:
                raise MalformedCode(f"code ends inside a constructor at bit {pos}")
            nxt = bits[pos + 1]
            if nxt == "0":
                tokens.append(_ABS)
            elif nxt == "1":
                tokens.append(_APP)
                pending += 1
            else:
                raise MalformedCode(f"invalid character {nxt!r} at bit {pos + 1}")
            pos += 2
        elif c == "1":
            end = bits.find("0", pos)
            if end < 0:
                raise MalformedCode(f"index starting at bit {pos} has no terminating 0")
            run = bits[pos:end]
            if run.count("1") != len(run):
                bad = next(k for k, ch in enumerate(run) if ch != "1")
                raise MalformedCode(f"invalid character {run[bad]!r} at bit {pos + bad}")
            tokens.append(end - pos)
            pending -= 1
            pos = end + 1
        else:
            raise MalformedCode(f"invalid character {c!r} at bit {pos}")
    if pos != n:
        raise TrailingBits(f"{n - pos} trailing bit(s) after a complete term of size {pos}", pos)
    return build_from_prefix(tokens)


def render_term(t: Term) -> str:
    """Print ``t`` with the fewest parentheses the syntax needs.

    Application is left-associative and a lambda body extends as far right
    as possible, so a lambda is parenthesized whenever it is applied or is
    an argument, and an application only when it is an argument.
    """
    out = []
    # items are either strings to emit or (term, position) pairs;
    # position: 0 = top/body, 1 = function side, 2 = argument side
    stack = [(t, 0)]
    while stack:
        item = stack.pop()
        if type(item) is str:
            out.append(item)
            continue
        t, where = item
        if type(t) is Index:
            out.append(str(t.i))
        elif type(t) is Abs:
            wrap = where != 0
            if wrap:
                out.append("(")
                stack.append(")")
            out.append("\\ ")
            stack.append((t.body, 0))
        else:
            wrap = where == 2
            if wrap:
                out.append("(")
                stack.append(")")
            stack.append((t.arg, 2))
            stack.append(" ")
            stack.append((t.fun, 1))
    return "".join(out)


def _tokenize(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        c = text[pos]
        if c.isspace():
            pos += 1
        elif c == "λ":
            yield "\\", pos
            pos += 1
        elif c in "\\()":
            yield c, pos
            pos += 1
        elif c in "0123456789":
            start = pos
            while pos < n and text[pos] in "0123456789":
                pos += 1
            yield int(text[start:pos]), start
        else:
            raise TermSyntaxError(f"unexpected character {c!r}", pos)


def parse_term(text: str) -> Term:
    """Parse the concrete syntax produced by :func:`render_term`.

    ``\\`` (or ``λ``) starts an abstraction whose body runs to the closing
    parenthesis or the end of input; juxtaposition is left-associative
    application; indices are positive decimal integers.
    """
    # Each frame: [kind, accumulated application or None, opening position]
    stack = [["top", None, 0]]

    def push_atom(atom):
        frame = stack[-1]
        frame[1] = atom if frame[1] is None else App(frame[1], atom)

    def close_lambdas(pos):
        while stack[-1][0] == "lam":
            _, body, opened = stack.pop()
            if body is None:
                raise TermSyntaxError("abstraction without a body", opened)
            push_atom(Abs(body))

    for tok, pos in _tokenize(text):
        if tok == "\\":
            stack.append(["lam", None, pos])
        elif tok == "(":
            stack.append(["paren", None, pos])
        elif tok == ")":
            close_lambdas(pos)
            kind, inner, opened = stack[-1]
            if kind != "paren":
                raise TermSyntaxError("unbalanced ')'", pos)
            if inner is None:
                raise TermSyntaxError("empty parentheses", opened)
            stack.pop()
            push_atom(inner)
        else:
            if tok < 1:
                raise TermSyntaxError("de Bruijn indices start at 1", pos)
            push_atom(Index(tok))
    close_lambdas(len(text))
    if stack[-1][0] == "paren":
        raise TermSyntaxError("unclosed '('", stack[-1][2])
    result = stack[0][1]
    if result is None:
        raise TermSyntaxError("empty term", len(text))
    return result
