"""Brute-force reference computations, kept apart from the library code paths.

Weights come from normalizing raw positional scores (or, for type-2, from
the step-by-step recurrence w_j = w_{j-1} - alpha), never from closed forms.
"""

from collections import defaultdict
from fractions import Fraction


def normalize(scores):
    total = sum(scores, Fraction(0))
    return [Fraction(s) / total for s in scores]


def raw_weights(scheme: str, k: int, alpha=None) -> list[Fraction]:
    if scheme == "equal":
        return normalize([1] * k)
    if scheme == "type1":
        return normalize([k - j + 1 for j in range(1, k + 1)])
    if scheme == "geometric":
        return normalize([2 ** (k - j) for j in range(1, k + 1)])
    if scheme == "harmonic":
        return normalize([Fraction(1, j) for j in range(1, k + 1)])
    if scheme == "type2":
        # k*w1 - alpha*(0 + 1 + ... + k-1) = 1, then step down by alpha
        steps = sum(range(k))
        w = (1 + Fraction(alpha) * steps) / k
        out = []
        for _ in range(k):
            out.append(w)
            w -= Fraction(alpha)
        return out
    raise ValueError(scheme)


def brute_h(values) -> int:
    values = list(values)
    best = 0
    for h in range(len(values) + 1):
        if sum(1 for v in values if v >= h) >= h:
            best = h
    return best


def brute_profiles(papers, scheme: str, alpha=None) -> dict[str, tuple[int, int]]:
    """author -> (paper count, weighted h)."""
    shares = defaultdict(list)
    for paper_id, citations, authors in papers:
        w = raw_weights(scheme, len(authors), alpha)
        for pos, a in enumerate(authors):
            shares[a].append(citations * w[pos])
    return {a: (len(v), brute_h(v)) for a, v in shares.items()}
