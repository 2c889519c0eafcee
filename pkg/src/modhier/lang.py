"""Regular-language front end: regexes, DFAs, transition monoids.

Input languages arrive as regular expressions over a fixed alphabet,
are compiled to minimal complete DFAs, and a family of DFAs sharing an
alphabet is folded into a single monoid morphism (the transition monoid
of their product automaton) recognizing every language in the family.

Regex grammar (whitespace ignored):

    expr    := term ('|' term)*          union, lowest precedence
    term    := factor ('&' factor)*      intersection
    factor  := item+                     juxtaposition = concatenation
    item    := '~' item | atom ('*'|'+')*
    atom    := letter | '0' | 'e' | '(' expr ')'

`0` is the empty language, `e` the empty word, `~` complement (so `~a*`
reads as `~(a*)` and `~ab` as `(~a)b`). Since `e` is grammar syntax it
cannot be used as an alphabet letter.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import BudgetExceededError, RegexSyntaxError

DEFAULT_STATE_BUDGET = 4096
DEFAULT_MONOID_BUDGET = 20000

_RESERVED = frozenset("0e")


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of single-character letters, fixed for a whole query."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet must be non-empty")
        seen = set()
        for a in self.letters:
            if len(a) != 1 or not ("a" <= a <= "z"):
                raise ValueError(f"alphabet letter {a!r} must be a lowercase ascii letter")
            if a in _RESERVED:
                raise ValueError(f"letter {a!r} is reserved regex syntax")
            if a in seen:
                raise ValueError(f"duplicate alphabet letter {a!r}")
            seen.add(a)

    @classmethod
    def of(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    def index(self, letter: str) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise ValueError(f"letter {letter!r} not in alphabet {''.join(self.letters)!r}") from None

    def __contains__(self, letter: str) -> bool:
        return letter in self.letters

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)


# ---------------------------------------------------------------------------
# Regex AST


class Regex:
    """Base class for regex AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(Regex):
    pass


@dataclass(frozen=True)
class Eps(Regex):
    pass


@dataclass(frozen=True)
class Sym(Regex):
    letter: str


@dataclass(frozen=True)
class Alt(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class And(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Seq(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


@dataclass(frozen=True)
class Plus(Regex):
    inner: Regex


@dataclass(frozen=True)
class Not(Regex):
    inner: Regex


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def error(self, message: str):
        raise RegexSyntaxError(message, self.pos)

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        c = self.peek()
        assert c is not None
        self.pos += 1
        return c

    def parse(self) -> Regex:
        node = self.union()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()!r}")
        return node

    def union(self) -> Regex:
        node = self.inter()
        while self.peek() == "|":
            self.take()
            node = Alt(node, self.inter())
        return node

    def inter(self) -> Regex:
        node = self.concat()
        while self.peek() == "&":
            self.take()
            node = And(node, self.concat())
        return node

    _STOP = frozenset(")|&")

    def concat(self) -> Regex:
        parts = [self.item()]
        while True:
            c = self.peek()
            if c is None or c in self._STOP:
                break
            parts.append(self.item())
        node = parts[0]
        for p in parts[1:]:
            node = Seq(node, p)
        return node

    def item(self) -> Regex:
        if self.peek() == "~":
            self.take()
            return Not(self.item())
        node = self.atom()
        while self.peek() in ("*", "+"):
            node = Star(node) if self.take() == "*" else Plus(node)
        return node

    def atom(self) -> Regex:
        c = self.peek()
        if c is None:
            self.error("unexpected end of input")
        if c == "(":
            self.take()
            node = self.union()
            if self.peek() != ")":
                self.error("unbalanced parenthesis")
            self.take()
            return node
        if c == "0":
            self.take()
            return Empty()
        if c == "e":
            self.take()
            return Eps()
        if "a" <= c <= "z":
            if c not in self.alphabet:
                self.error(f"letter {c!r} outside alphabet")
            self.take()
            return Sym(c)
        self.error(f"unexpected {c!r}")


def parse_regex(text: str, alphabet: Alphabet) -> Regex:
    """Parse `text` into an AST; letters must belong to `alphabet`."""
    if not text.strip():
        raise RegexSyntaxError("empty expression", 0)
    return _Parser(text, alphabet).parse()


# ---------------------------------------------------------------------------
# DFAs


@dataclass(frozen=True)
class Dfa:
    """Complete DFA: `transitions[state][letter_index]` is total."""

    alphabet: Alphabet
    transitions: tuple[tuple[int, ...], ...]
    initial: int
    accepting: frozenset[int]

    def __post_init__(self):
        n = len(self.transitions)
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row does not match alphabet")
            if any(not 0 <= t < n for t in row):
                raise ValueError("transition target out of range")
        if any(not 0 <= q < n for q in self.accepting):
            raise ValueError("accepting state out of range")

    @property
    def num_states(self) -> int:
        return len(self.transitions)

    def step(self, state: int, letter: str) -> int:
        return self.transitions[state][self.alphabet.index(letter)]

    def run(self, word: str) -> int:
        q = self.initial
        for a in word:
            q = self.step(q, a)
        return q

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA, states renumbered in BFS order from the initial.

    The canonical numbering makes minimal DFAs of equal languages
    structurally equal, so `==` doubles as a language-equality check on
    minimized values.
    """
    nletters = len(dfa.alphabet)
    reach = _bfs_order(dfa.transitions, dfa.initial, nletters)
    # Moore partition refinement on the reachable part.
    block = {q: (1 if q in dfa.accepting else 0) for q in reach}
    nblocks = 2 if len(set(block.values())) == 2 else 1
    while True:
        sigs = {}
        newblock = {}
        for q in reach:
            sig = (block[q], tuple(block[dfa.transitions[q][l]] for l in range(nletters)))
            if sig not in sigs:
                sigs[sig] = len(sigs)
            newblock[q] = sigs[sig]
        if len(sigs) == nblocks:
            block = newblock
            break
        block, nblocks = newblock, len(sigs)
    # Quotient transitions, then canonical renumbering by BFS.
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    qtrans = {
        b: tuple(block[dfa.transitions[q][l]] for l in range(nletters)) for b, q in rep.items()
    }
    order = _bfs_order_map(qtrans, block[dfa.initial], nletters)
    transitions = tuple(
        tuple(order[t] for t in qtrans[b]) for b in sorted(qtrans, key=order.__getitem__)
    )
    accepting = frozenset(order[b] for b in qtrans if rep[b] in dfa.accepting)
    return Dfa(dfa.alphabet, transitions, 0, accepting)


def _bfs_order(transitions, initial: int, nletters: int) -> list[int]:
    seen = {initial}
    order = [initial]
    queue = deque([initial])
    while queue:
        q = queue.popleft()
        for l in range(nletters):
            t = transitions[q][l]
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def _bfs_order_map(trans_map: dict, initial, nletters: int) -> dict:
    order = {initial: 0}
    queue = deque([initial])
    while queue:
        q = queue.popleft()
        for l in range(nletters):
            t = trans_map[q][l]
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    return order


def _determinize(
    alphabet: Alphabet,
    start: frozenset[int],
    move: Callable[[int, int], Iterable[int]],
    is_accept: Callable[[frozenset[int]], bool],
    max_states: int,
) -> Dfa:
    """Subset construction over an implicit NFA given by `move`."""
    index = {start: 0}
    rows = []
    accepting = set()
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        if is_accept(subset):
            accepting.add(index[subset])
        row = []
        for l in range(len(alphabet)):
            nxt = frozenset(t for s in subset for t in move(s, l))
            if nxt not in index:
                if len(index) >= max_states:
                    raise BudgetExceededError("state", max_states)
                index[nxt] = len(index)
                queue.append(nxt)
            row.append(index[nxt])
        rows.append(tuple(row))
    return Dfa(alphabet, tuple(rows), 0, frozenset(accepting))


def _product(x: Dfa, y: Dfa, keep: Callable[[bool, bool], bool], max_states: int) -> Dfa:
    if x.alphabet != y.alphabet:
        raise ValueError("alphabet mismatch")
    nletters = len(x.alphabet)
    index = {(x.initial, y.initial): 0}
    rows = []
    accepting = set()
    queue = deque([(x.initial, y.initial)])
    while queue:
        p, q = queue.popleft()
        if keep(p in x.accepting, q in y.accepting):
            accepting.add(index[(p, q)])
        row = []
        for l in range(nletters):
            nxt = (x.transitions[p][l], y.transitions[q][l])
            if nxt not in index:
                if len(index) >= max_states:
                    raise BudgetExceededError("state", max_states)
                index[nxt] = len(index)
                queue.append(nxt)
            row.append(index[nxt])
        rows.append(tuple(row))
    return Dfa(x.alphabet, tuple(rows), 0, frozenset(accepting))


def union(x: Dfa, y: Dfa, max_states: int = DEFAULT_STATE_BUDGET) -> Dfa:
    return minimize(_product(x, y, lambda a, b: a or b, max_states))


def intersect(x: Dfa, y: Dfa, max_states: int = DEFAULT_STATE_BUDGET) -> Dfa:
    return minimize(_product(x, y, lambda a, b: a and b, max_states))


def complement(x: Dfa) -> Dfa:
    # Flipping the accepting set of a complete minimal DFA keeps it minimal.
    return Dfa(x.alphabet, x.transitions, x.initial, frozenset(range(x.num_states)) - x.accepting)


def _reachable_pairs(x: Dfa, y: Dfa) -> Iterator[tuple[int, int]]:
    if x.alphabet != y.alphabet:
        raise ValueError("alphabet mismatch")
    seen = {(x.initial, y.initial)}
    queue = deque(seen)
    while queue:
        p, q = queue.popleft()
        yield p, q
        for l in range(len(x.alphabet)):
            nxt = (x.transitions[p][l], y.transitions[q][l])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)


def included(x: Dfa, y: Dfa) -> bool:
    return all(q in y.accepting for p, q in _reachable_pairs(x, y) if p in x.accepting)


def disjoint(x: Dfa, y: Dfa) -> bool:
    return not any(p in x.accepting and q in y.accepting for p, q in _reachable_pairs(x, y))


def is_empty(x: Dfa) -> bool:
    seen = {x.initial}
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        if q in x.accepting:
            return False
        for t in x.transitions[q]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return True


def equivalent(x: Dfa, y: Dfa) -> bool:
    return included(x, y) and included(y, x)


def short_words(dfa: Dfa, max_len: int) -> list[str]:
    """Accepted words of length <= max_len, ordered by length then letters."""
    found = []
    layer = [("", dfa.initial)]
    for _ in range(max_len + 1):
        found.extend(w for w, q in layer if q in dfa.accepting)
        layer = [(w + a, dfa.transitions[q][l]) for w, q in layer for l, a in enumerate(dfa.alphabet)]
    return found


# ---------------------------------------------------------------------------
# Regex compilation


def compile_regex(regex: Regex, alphabet: Alphabet, max_states: int = DEFAULT_STATE_BUDGET) -> Dfa:
    """Minimal complete DFA for `regex`; raises on state-budget overrun."""
    return _build(regex, alphabet, max_states)


def _dfa_empty(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset())


def _dfa_eps(alphabet: Alphabet) -> Dfa:
    sink = (1,) * len(alphabet)
    return Dfa(alphabet, (sink, sink), 0, frozenset({0}))


def _dfa_letter(alphabet: Alphabet, letter: str) -> Dfa:
    l = alphabet.index(letter)
    sink = (2,) * len(alphabet)
    first = tuple(1 if i == l else 2 for i in range(len(alphabet)))
    return Dfa(alphabet, (first, sink, sink), 0, frozenset({1}))


def _concat(x: Dfa, y: Dfa, max_states: int) -> Dfa:
    off = x.num_states

    def move(s: int, l: int) -> list[int]:
        if s < off:
            targets = [x.transitions[s][l]]
            if s in x.accepting:
                targets.append(off + y.transitions[y.initial][l])
            return targets
        return [off + y.transitions[s - off][l]]

    eps_in_y = y.initial in y.accepting
    start = frozenset({x.initial} | ({off + y.initial} if x.initial in x.accepting else set()))

    def is_accept(subset: frozenset[int]) -> bool:
        for s in subset:
            if s >= off and (s - off) in y.accepting:
                return True
            if eps_in_y and s < off and s in x.accepting:
                return True
        return False

    return minimize(_determinize(x.alphabet, start, move, is_accept, max_states))


def _star(x: Dfa, max_states: int, plus: bool) -> Dfa:
    # Fresh start state avoids false accepts from loops through the old
    # initial state; for plus it accepts only when x itself accepts eps.
    s0 = x.num_states
    start_accepts = (not plus) or (x.initial in x.accepting)

    def move(s: int, l: int) -> list[int]:
        if s == s0:
            return [x.transitions[x.initial][l]]
        targets = [x.transitions[s][l]]
        if s in x.accepting:
            targets.append(x.transitions[x.initial][l])
        return targets

    def is_accept(subset: frozenset[int]) -> bool:
        if s0 in subset:
            return start_accepts
        return any(s in x.accepting for s in subset)

    return minimize(_determinize(x.alphabet, frozenset({s0}), move, is_accept, max_states))


def _build(r: Regex, alp: Alphabet, budget: int) -> Dfa:
    if isinstance(r, Empty):
        return _dfa_empty(alp)
    if isinstance(r, Eps):
        return _dfa_eps(alp)
    if isinstance(r, Sym):
        return minimize(_dfa_letter(alp, r.letter))
    if isinstance(r, Alt):
        return union(_build(r.left, alp, budget), _build(r.right, alp, budget), budget)
    if isinstance(r, And):
        return intersect(_build(r.left, alp, budget), _build(r.right, alp, budget), budget)
    if isinstance(r, Seq):
        return _concat(_build(r.left, alp, budget), _build(r.right, alp, budget), budget)
    if isinstance(r, Star):
        return _star(_build(r.inner, alp, budget), budget, plus=False)
    if isinstance(r, Plus):
        return _star(_build(r.inner, alp, budget), budget, plus=True)
    if isinstance(r, Not):
        return complement(_build(r.inner, alp, budget))
    raise TypeError(f"not a regex node: {r!r}")


# ---------------------------------------------------------------------------
# Transition monoids


class MonoidMorphism:
    """Transition monoid of a product automaton, as a morphism.

    Elements are integer indices; index 0 is the unit (the identity
    transformation). `accept_sets[i]` holds the elements sending the
    initial product state into a configuration accepting for the i-th
    input DFA, so a word w lies in L_i iff its image lies there.

    Multiplication composes transformation tuples on demand (a full
    table for a 20000-element monoid would not fit); results are cached.
    """

    def __init__(self, alphabet, transformations, letter_image, accept_sets, word_for):
        self.alphabet = alphabet
        self._transformations = tuple(transformations)
        self._index = {t: i for i, t in enumerate(self._transformations)}
        self.letter_image = dict(letter_image)
        self.accept_sets = tuple(frozenset(f) for f in accept_sets)
        self.word_for = tuple(word_for)
        self.unit = 0
        self._cache: dict[tuple[int, int], int] = {}
        npoints = len(self._transformations[0])
        if self._transformations[0] != tuple(range(npoints)):
            raise ValueError("element 0 must be the identity transformation")

    @property
    def size(self) -> int:
        return len(self._transformations)

    def __len__(self) -> int:
        return self.size

    def elements(self) -> range:
        return range(self.size)

    def mult(self, i: int, j: int) -> int:
        """Index of element i followed by element j."""
        key = (i, j)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        tj = self._transformations[j]
        composed = tuple(map(tj.__getitem__, self._transformations[i]))
        result = self._index[composed]
        self._cache[key] = result
        return result

    def image_of_word(self, word: str) -> int:
        m = self.unit
        for a in word:
            m = self.mult(m, self.letter_image[a])
        return m

    def validate(self, assoc_limit: int = 200) -> None:
        """Check unit laws (always) and associativity (exhaustively, when small)."""
        for i in self.elements():
            if self.mult(self.unit, i) != i or self.mult(i, self.unit) != i:
                raise ValueError(f"unit law fails at element {i}")
        if self.size <= assoc_limit:
            for i in self.elements():
                for j in self.elements():
                    ij = self.mult(i, j)
                    for k in self.elements():
                        if self.mult(ij, k) != self.mult(i, self.mult(j, k)):
                            raise ValueError(f"associativity fails at ({i},{j},{k})")


def transition_monoid(dfas: list[Dfa], max_elements: int = DEFAULT_MONOID_BUDGET) -> MonoidMorphism:
    """Close the letter transformations of the product DFA under composition.

    The product-state space is restricted to states reachable from the
    tuple of initials; transformations act on that set. Closure is a
    worklist walk from the identity, appending generators on the right,
    so `word_for[m]` is the length-lexicographically least word mapping
    to m (letters compared in alphabet order).
    """
    if not dfas:
        raise ValueError("need at least one DFA")
    alphabet = dfas[0].alphabet
    if any(d.alphabet != alphabet for d in dfas):
        raise ValueError("alphabet mismatch")

    init = tuple(d.initial for d in dfas)
    states = {init: 0}
    state_list = [init]
    queue = deque([init])
    while queue:
        s = queue.popleft()
        for l in range(len(alphabet)):
            nxt = tuple(d.transitions[q][l] for d, q in zip(dfas, s))
            if nxt not in states:
                states[nxt] = len(states)
                state_list.append(nxt)
                queue.append(nxt)

    npoints = len(state_list)
    letter_maps = []
    for l in range(len(alphabet)):
        letter_maps.append(
            tuple(
                states[tuple(d.transitions[q][l] for d, q in zip(dfas, s))] for s in state_list
            )
        )

    identity = tuple(range(npoints))
    index = {identity: 0}
    transformations = [identity]
    word_for = [""]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        t = transformations[i]
        for l, a in enumerate(alphabet):
            composed = tuple(map(letter_maps[l].__getitem__, t))
            if composed not in index:
                if len(transformations) >= max_elements:
                    raise BudgetExceededError("monoid", max_elements)
                index[composed] = len(transformations)
                transformations.append(composed)
                word_for.append(word_for[i] + a)
                queue.append(index[composed])

    letter_image = {a: index[letter_maps[l]] for l, a in enumerate(alphabet)}
    accept_sets = []
    for i, d in enumerate(dfas):
        accept_sets.append(
            frozenset(
                m for m, t in enumerate(transformations) if state_list[t[0]][i] in d.accepting
            )
        )
    return MonoidMorphism(alphabet, transformations, letter_image, accept_sets, word_for)
