"""Multi-pattern substring matcher for unsegmented scripts.

Aho-Corasick automaton over the normalized entry surfaces. Scanning reports
every occurrence of every pattern; ``find_leftmost_longest`` then keeps the
standard gazetteer selection: earliest start wins, ties go to the longest
match, matches never overlap.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping


class SubstringMatcher:
    """Immutable after construction; safe to share across workers."""

    def __init__(self, patterns: Mapping[str, int]):
        # states as parallel arrays: transition dict, fail link, and the
        # (length, mask) outputs collected through the fail chain
        self._goto: list[dict[str, int]] = [{}]
        self._fail: list[int] = [0]
        self._out: list[tuple[tuple[int, int], ...]] = [()]
        self._n_patterns = 0
        for pattern, mask in patterns.items():
            if pattern:
                self._add(pattern, mask)
        self._build_links()

    def __len__(self) -> int:
        return self._n_patterns

    def _add(self, pattern: str, mask: int) -> None:
        state = 0
        for ch in pattern:
            nxt = self._goto[state].get(ch)
            if nxt is None:
                nxt = len(self._goto)
                self._goto[state][ch] = nxt
                self._goto.append({})
                self._fail.append(0)
                self._out.append(())
            state = nxt
        self._out[state] = self._out[state] + ((len(pattern), mask),)
        self._n_patterns += 1

    def _build_links(self) -> None:
        queue = deque()
        for state in self._goto[0].values():
            self._fail[state] = 0
            queue.append(state)
        while queue:
            state = queue.popleft()
            for ch, nxt in self._goto[state].items():
                queue.append(nxt)
                fall = self._fail[state]
                while fall and ch not in self._goto[fall]:
                    fall = self._fail[fall]
                target = self._goto[fall].get(ch, 0)
                if target == nxt:
                    target = 0
                self._fail[nxt] = target
                self._out[nxt] = self._out[nxt] + self._out[target]

    def find_all(self, text: str) -> Iterable[tuple[int, int, int]]:
        """Yield every (start, end, classmask) occurrence, in end order."""
        goto = self._goto
        fail = self._fail
        out = self._out
        state = 0
        for i, ch in enumerate(text):
            while state and ch not in goto[state]:
                state = fail[state]
            state = goto[state].get(ch, 0)
            for length, mask in out[state]:
                yield i + 1 - length, i + 1, mask

    def find_leftmost_longest(self, text: str) -> list[tuple[int, int, int]]:
        """Non-overlapping (start, end, classmask) matches, text order."""
        matches = sorted(self.find_all(text), key=lambda m: (m[0], m[0] - m[1]))
        selected = []
        cursor = 0
        for start, end, mask in matches:
            if start >= cursor:
                selected.append((start, end, mask))
                cursor = end
        return selected
