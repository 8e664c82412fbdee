"""Weighted citation indices: split each paper's citations among its authors
by positional weight, then compute an h-index on the shares."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from credit_weights.schemes import CreditWeightsError, SchemeSpec, WeightVector


class AuthorNotFound(CreditWeightsError):
    def __init__(self, paper_id: str, author_id: str):
        super().__init__(f"author {author_id!r} is not on paper {paper_id!r}")
        self.paper_id = paper_id
        self.author_id = author_id


class DuplicatePaper(CreditWeightsError):
    def __init__(self, paper_id: str):
        super().__init__(f"duplicate paper id {paper_id!r}")
        self.paper_id = paper_id


class InvalidPaper(CreditWeightsError):
    pass


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    citations: int
    authors: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "authors", tuple(self.authors))
        if isinstance(self.citations, bool) or not isinstance(self.citations, int):
            raise InvalidPaper(f"{self.paper_id}: citations must be an integer")
        if self.citations < 0:
            raise InvalidPaper(f"{self.paper_id}: negative citations {self.citations}")
        if not self.authors:
            raise InvalidPaper(f"{self.paper_id}: empty author list")
        if len(set(self.authors)) != len(self.authors):
            raise InvalidPaper(f"{self.paper_id}: duplicate author in byline")

    @property
    def k(self) -> int:
        return len(self.authors)

    def position(self, author_id: str) -> int:
        try:
            return self.authors.index(author_id) + 1
        except ValueError:
            raise AuthorNotFound(self.paper_id, author_id) from None


@dataclass(frozen=True)
class AuthorProfile:
    """Effective citations of one author, sorted descending (ties by paper id).

    ``paper_ids`` is aligned with ``effective_citations``.
    """

    author_id: str
    effective_citations: tuple[Fraction, ...]
    paper_ids: tuple[str, ...]
    weighted_h: int

    @property
    def paper_count(self) -> int:
        return len(self.paper_ids)


def effective_citations(
    p: PaperRecord,
    author_id: str,
    scheme: SchemeSpec,
    weights: WeightVector | None = None,
) -> Fraction:
    j = p.position(author_id)
    if weights is None:
        weights = scheme.weights(p.k)
    return p.citations * weights[j]


def h_index(values: Iterable[Fraction | int]) -> int:
    """Largest h such that at least h values are >= h. Comparisons are exact."""
    ranked = sorted(values, reverse=True)
    h = 0
    for i, v in enumerate(ranked, start=1):
        if v < 0:
            raise ValueError(f"negative citation value {v}")
        if v >= i:
            h = i
        else:
            break
    return h


def build_profiles(
    corpus: Iterable[PaperRecord], scheme: SchemeSpec
) -> dict[str, AuthorProfile]:
    """Compute every author's profile. The result ignores corpus order."""
    seen: set[str] = set()
    cache: dict[int, WeightVector] = {}
    shares: dict[str, list[tuple[Fraction, str]]] = defaultdict(list)
    for paper in corpus:
        if paper.paper_id in seen:
            raise DuplicatePaper(paper.paper_id)
        seen.add(paper.paper_id)
        if paper.k not in cache:
            cache[paper.k] = scheme.weights(paper.k)
        weights = cache[paper.k]
        for j, author in enumerate(paper.authors, start=1):
            shares[author].append((paper.citations * weights[j], paper.paper_id))

    profiles = {}
    for author in sorted(shares):
        entries = sorted(shares[author], key=lambda e: (-e[0], e[1]))
        values = tuple(v for v, _ in entries)
        profiles[author] = AuthorProfile(
            author_id=author,
            effective_citations=values,
            paper_ids=tuple(pid for _, pid in entries),
            weighted_h=h_index(values),
        )
    return profiles


def ranked(profiles: Mapping[str, AuthorProfile]) -> list[AuthorProfile]:
    """Profiles ordered by weighted h descending, then author id."""
    return sorted(profiles.values(), key=lambda p: (-p.weighted_h, p.author_id))
