"""Counting and enumerating words that avoid a set of forbidden subwords.

An Aho-Corasick automaton over the rule left-hand sides recognises normal
words; dimensions of graded pieces are then path counts, so no normal word
ever has to be materialised to compute a Hilbert series.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterator, List, Sequence

from .ncpoly import GeneratorSet, Word

DEAD = -1


class NormalWordAutomaton:
    def __init__(self, gens: GeneratorSet, forbidden: Sequence[Word]):
        self.gens = gens
        G = len(gens)
        goto: List[Dict[int, int]] = [{}]
        terminal = [False]
        for w in forbidden:
            s = 0
            for x in w:
                nxt = goto[s].get(x)
                if nxt is None:
                    goto.append({})
                    terminal.append(False)
                    nxt = len(goto) - 1
                    goto[s][x] = nxt
                s = nxt
            terminal[s] = True
        n = len(goto)
        fail = [0] * n
        delta = [[0] * G for _ in range(n)]
        order = []
        queue = deque()
        for x in range(G):
            t = goto[0].get(x)
            if t is None:
                delta[0][x] = 0
            else:
                delta[0][x] = t
                fail[t] = 0
                queue.append(t)
        while queue:
            s = queue.popleft()
            order.append(s)
            terminal[s] = terminal[s] or terminal[fail[s]]
            for x in range(G):
                t = goto[s].get(x)
                if t is None:
                    delta[s][x] = delta[fail[s]][x]
                else:
                    delta[s][x] = t
                    fail[t] = delta[fail[s]][x]
                    queue.append(t)
        # Collapse forbidden states into DEAD.
        for s in range(n):
            row = delta[s]
            for x in range(G):
                if terminal[row[x]]:
                    row[x] = DEAD
        self.delta = delta
        self.terminal = terminal
        self.n_states = n

    def count_by_degree(self, D: int) -> List[int]:
        """Number of normal words of each degree ``0..D``."""
        degs = self.gens.degrees
        G = len(degs)
        delta = self.delta
        # layers[d] maps state -> number of normal words of degree d ending there
        layers: List[Dict[int, int]] = [dict() for _ in range(D + 1)]
        layers[0][0] = 1
        counts = [0] * (D + 1)
        for d in range(D + 1):
            layer = layers[d]
            counts[d] = sum(layer.values())
            for s, c in layer.items():
                row = delta[s]
                for x in range(G):
                    t = row[x]
                    if t == DEAD:
                        continue
                    e = d + degs[x]
                    if e > D:
                        continue
                    tgt = layers[e]
                    tgt[t] = tgt.get(t, 0) + c
            layers[d] = None
        return counts

    def words_of_degree(self, d: int) -> Iterator[Word]:
        degs = self.gens.degrees
        delta = self.delta
        G = len(degs)

        def rec(state, word, rem):
            if rem == 0:
                yield tuple(word)
                return
            row = delta[state]
            for x in range(G):
                t = row[x]
                if t == DEAD or degs[x] > rem:
                    continue
                word.append(x)
                yield from rec(t, word, rem - degs[x])
                word.pop()

        return rec(0, [], d)

    def is_finite(self) -> bool:
        """True iff only finitely many normal words exist (no reachable cycle)."""
        color = {}
        stack = [(0, iter(range(len(self.gens))))]
        color[0] = 1
        while stack:
            s, it = stack[-1]
            advanced = False
            for x in it:
                t = self.delta[s][x]
                if t == DEAD:
                    continue
                c = color.get(t, 0)
                if c == 1:
                    return False
                if c == 0:
                    color[t] = 1
                    stack.append((t, iter(range(len(self.gens)))))
                    advanced = True
                    break
            if not advanced:
                color[s] = 2
                stack.pop()
        return True

    def all_words(self) -> List[Word]:
        """Every normal word; only valid when ``is_finite()``."""
        out = []
        stack = [(0, ())]
        while stack:
            s, w = stack.pop()
            out.append(w)
            for x in range(len(self.gens)):
                t = self.delta[s][x]
                if t != DEAD:
                    stack.append((t, w + (x,)))
        return out
