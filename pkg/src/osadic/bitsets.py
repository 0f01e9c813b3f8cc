"""Subsets of {1, ..., n} as machine words.

Element i occupies bit i-1, so the word for {1, 2, 5} is 0b10011.  All
set-level operations downstream (circuit scans, closures, monomial bookkeeping)
reduce to integer bit twiddling on these words.
"""

from itertools import combinations


def word_of(labels):
    """Word for an iterable of 1-based element labels."""
    w = 0
    for i in labels:
        w |= 1 << (i - 1)
    return w


def elements(word):
    """Increasing tuple of 1-based labels packed in word."""
    out = []
    while word:
        low = word & -word
        out.append(low.bit_length())
        word ^= low
    return tuple(out)


def size(word):
    return word.bit_count()


def full_word(n):
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def words_of_size(n, k):
    """All k-subsets of {1..n} as words, lexicographic by element tuple."""
    for combo in combinations(range(1, n + 1), k):
        yield word_of(combo)


def subwords(word):
    """All subsets of word, descending word order, ending with 0."""
    s = word
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & word


def word_key(word):
    """Canonical sort key: cardinality, then element tuple."""
    return (word.bit_count(), elements(word))


def format_word(word):
    return "{" + ",".join(str(i) for i in elements(word)) + "}"
