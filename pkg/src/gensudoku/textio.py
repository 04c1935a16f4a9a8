"""Plain-text grid format and symbol alphabets.

Format: one line per grid row, tokens separated by single spaces, ``.`` for
an empty cell, LF line endings.  Lines starting with ``#`` are comments,
except two optional headers::

    #order: 3
    #alphabet: a b c d e f g h i

Blank lines are ignored.
"""
from __future__ import annotations

import re
import string
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import AlphabetError, LineCountError, ParseError, RowShapeError, UnknownTokenError
from .grid import EMPTY, Grid, Order, _from_array, as_order

EMPTY_TOKEN = "."

_ORDER_RE = re.compile(r"#order:\s*(\S*)\s*$")
_ALPHABET_RE = re.compile(r"#alphabet:(.*)$")


@dataclass(frozen=True)
class SymbolAlphabet:
    tokens: tuple[str, ...]

    def __post_init__(self):
        tokens = tuple(self.tokens)
        object.__setattr__(self, "tokens", tokens)
        N = len(tokens)
        n = isqrt(N)
        if N == 0 or n * n != N:
            raise AlphabetError(f"alphabet needs n*n tokens, got {N}")
        seen = set()
        for tok in tokens:
            if not isinstance(tok, str) or not tok or any(ch.isspace() for ch in tok):
                raise AlphabetError(f"alphabet token {tok!r} must be a non-empty string without whitespace")
            if tok == EMPTY_TOKEN:
                raise AlphabetError(f"{EMPTY_TOKEN!r} is reserved for empty cells")
            if tok.startswith("#"):
                raise AlphabetError(f"alphabet token {tok!r} would read as a comment")
            if tok in seen:
                raise AlphabetError(f"duplicate alphabet token {tok!r}")
            seen.add(tok)

    @property
    def order(self) -> Order:
        return Order(isqrt(len(self.tokens)))

    def __len__(self):
        return len(self.tokens)

    def token(self, index: int) -> str:
        return EMPTY_TOKEN if index == EMPTY else self.tokens[index]

    def index(self, token: str) -> int:
        if token == EMPTY_TOKEN:
            return EMPTY
        return self.tokens.index(token)

    @classmethod
    def decimal(cls, order) -> "SymbolAlphabet":
        N = as_order(order).side
        return cls(tuple(str(i) for i in range(1, N + 1)))

    @classmethod
    def letters(cls) -> "SymbolAlphabet":
        return cls(tuple(string.ascii_uppercase[:16]))

    @classmethod
    def default(cls, order) -> "SymbolAlphabet":
        """Digits 1-9 for n=3, letters A-P for n=4, decimal numbering otherwise."""
        if as_order(order).n == 4:
            return cls.letters()
        return cls.decimal(order)


def builtin_alphabets(order) -> list[SymbolAlphabet]:
    order = as_order(order)
    if order.n == 4:
        return [SymbolAlphabet.letters(), SymbolAlphabet.decimal(order)]
    return [SymbolAlphabet.decimal(order)]


@dataclass(frozen=True)
class GridDocument:
    alphabet: SymbolAlphabet
    grid: Grid

    def __post_init__(self):
        if self.alphabet.order != self.grid.order:
            raise AlphabetError(
                f"alphabet has {len(self.alphabet)} tokens but the grid needs {self.grid.side}"
            )

    @property
    def order(self) -> Order:
        return self.grid.order

    @classmethod
    def with_default_alphabet(cls, grid: Grid) -> "GridDocument":
        return cls(SymbolAlphabet.default(grid.order), grid)


def render_grid(doc: GridDocument, header: bool = False) -> str:
    """Text form of ``doc``.

    ``#order:`` is written only when ``header`` is set.  ``#alphabet:`` is
    written whenever the alphabet differs from the order's default, since
    the parser could not recover it otherwise.
    """
    lines = []
    if header:
        lines.append(f"#order: {doc.order.n}")
    if doc.alphabet != SymbolAlphabet.default(doc.order):
        lines.append("#alphabet: " + " ".join(doc.alphabet.tokens))
    tok = doc.alphabet.tokens + (EMPTY_TOKEN,)
    for row in doc.grid.cells.tolist():
        lines.append(" ".join(tok[v] for v in row))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> GridDocument:
    order = None
    alphabet_tokens = None
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _ORDER_RE.match(line)
            if m:
                try:
                    order = Order(int(m.group(1)))
                except (ValueError, TypeError):
                    raise ParseError(f"bad order header {line!r}", lineno) from None
                continue
            m = _ALPHABET_RE.match(line)
            if m:
                alphabet_tokens = (m.group(1).split(), lineno)
            continue
        rows.append((lineno, line.split()))

    N = len(rows)
    if order is None:
        n = isqrt(N)
        if N == 0 or n * n != N:
            raise LineCountError(f"found {N} grid rows; the row count must be N = n*n for an integer n")
        order = Order(n)
    elif N != order.side:
        raise LineCountError(f"order {order.n} needs {order.side} rows, found {N}")
    N = order.side

    for lineno, toks in rows:
        if len(toks) != N:
            raise RowShapeError(f"row has {len(toks)} tokens, expected {N}", lineno)

    if alphabet_tokens is not None:
        toks, lineno = alphabet_tokens
        try:
            alphabet = SymbolAlphabet(tuple(toks))
        except AlphabetError as exc:
            raise AlphabetError(str(exc), lineno) from None
        if len(alphabet) != N:
            raise AlphabetError(f"alphabet has {len(alphabet)} tokens, grid needs {N}", lineno)
        candidates = [alphabet]
    else:
        candidates = builtin_alphabets(order)

    used = {t for _, toks in rows for t in toks} - {EMPTY_TOKEN}
    alphabet = next((a for a in candidates if used <= set(a.tokens)), None)
    if alphabet is None:
        known = set(candidates[0].tokens)
        for lineno, toks in rows:
            for t in toks:
                if t != EMPTY_TOKEN and t not in known:
                    raise UnknownTokenError(f"unknown token {t!r}", lineno)

    lookup = {t: i for i, t in enumerate(alphabet.tokens)}
    lookup[EMPTY_TOKEN] = EMPTY
    cells = np.array([[lookup[t] for t in toks] for _, toks in rows], dtype=np.int16).reshape(N, N)
    return GridDocument(alphabet, _from_array(order, cells))


def read_grid(path) -> GridDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_grid(fh.read())


def write_grid(path, doc: GridDocument, header: bool = False) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_grid(doc, header=header))
