"""
Words in the free group F_n on x_1..x_n.

A word is a tuple of letters ``(i, e)`` meaning x_{i+1}^e with e = +1 or -1.
Evaluating a word against a generating vector gives an element of G;
evaluating it against a sign vector gives its value under omega: F_n -> C2.
"""

from __future__ import annotations


def letter(i, exponent=1):
    return ((i, exponent),)


def inverse(word):
    return tuple((i, -e) for i, e in reversed(word))


def free_reduce(word):
    reduced = []
    for i, e in word:
        if reduced and reduced[-1] == (i, -e):
            reduced.pop()
        else:
            reduced.append((i, e))
    return tuple(reduced)


def evaluate(group, word, g):
    """gamma(word) for the homomorphism x_i -> g_i."""
    rows = group.rows
    inverses = group.inverses
    result = group.identity
    for i, e in word:
        result = rows[result][g[i] if e > 0 else inverses[g[i]]]
    return result


def evaluate_signs(word, v):
    """omega(word) for x_i -> v_i; inverses do not matter in C2."""
    result = 1
    for i, _ in word:
        result *= v[i]
    return result


def format_word(word):
    if not word:
        return "1"
    return "*".join(f"x{i + 1}" if e > 0 else f"x{i + 1}^-1" for i, e in word)
