'''Corpus statistics: summary lengths, BLEU overlap, factual-error rates and error-type shares.

Except for the error rate, statistics only count items whose original summary has a factual
error, i.e. whose reference correction differs from it.
'''

import math
from collections import Counter
from dataclasses import dataclass, field
from statistics import mean
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from nltk.util import ngrams

from factum.align import EditSet
from factum.annotate import tokenize
from factum.types import ContentCode, ContractViolation

MAX_ORDER = 4
ALL_GROUP = 'all'


def corpus_bleu(candidates: Sequence[Sequence[str]], references: Sequence[Sequence[str]],
                max_order: int = MAX_ORDER) -> float:
    '''Corpus-level BLEU with uniform weights, no smoothing and one reference per candidate.

    Clipped n-gram matches are summed over the corpus before the precisions are taken. Orders
    for which the candidates contain no n-gram at all are left out of the geometric mean.
    '''
    if not candidates:
        raise ContractViolation('BLEU of an empty corpus')
    if len(candidates) != len(references):
        raise ContractViolation('{} candidates but {} references'.format(
            len(candidates), len(references)))

    matches = [0] * (max_order + 1)
    totals = [0] * (max_order + 1)
    cand_len = ref_len = 0
    for cand, ref in zip(candidates, references):
        cand_len += len(cand)
        ref_len += len(ref)
        for n in range(1, max_order + 1):
            cand_counts = Counter(ngrams(cand, n))
            ref_counts = Counter(ngrams(ref, n))
            matches[n] += sum(min(count, ref_counts[gram]) for gram, count in cand_counts.items())
            totals[n] += sum(cand_counts.values())

    if cand_len == 0:
        return 1.0 if ref_len == 0 else 0.0

    log_precisions = []
    for n in range(1, max_order + 1):
        if totals[n] == 0:
            continue
        if matches[n] == 0:
            return 0.0
        log_precisions.append(math.log(matches[n] / totals[n]))

    brevity = 1.0 if cand_len >= ref_len else math.exp(1 - ref_len / cand_len)
    return min(1.0, brevity * math.exp(sum(log_precisions) / len(log_precisions)))


def has_error(original: Sequence[str], reference: Sequence[str]) -> bool:
    '''A reference correction that differs from the original marks a factual error.'''
    return list(original) != list(reference)


def error_rate(items, tokenize: Callable[[str], List[str]] = tokenize) -> float:
    '''Percentage of items whose tokenized reference differs from the tokenized original.'''
    items = list(items)
    if not items:
        raise ContractViolation('error rate of an empty corpus')
    changed = sum(1 for item in items if has_error(tokenize(item.original),
                                                   tokenize(item.reference)))
    return round(100 * changed / len(items), 2)


@dataclass(frozen=True)
class LengthStats:
    '''Mean token counts; None when no item qualifies.'''
    original: Optional[float]
    reference: Optional[float]
    corrected: Optional[float]


def _mean(values: List[int]) -> Optional[float]:
    return float(mean(values)) if values else None


def avg_lengths(rows: Iterable[Tuple[Sequence[str], Optional[Sequence[str]], Sequence[str]]]
                ) -> LengthStats:
    '''Mean lengths of (original, reference summary, correction) token sequences.

    Only rows whose correction differs from the original are counted; rows without a reference
    summary do not count towards its mean.
    '''
    originals, summaries, corrections = [], [], []
    for original, summary, corrected in rows:
        if not has_error(original, corrected):
            continue
        originals.append(len(original))
        corrections.append(len(corrected))
        if summary is not None:
            summaries.append(len(summary))
    return LengthStats(_mean(originals), _mean(summaries), _mean(corrections))


def category_distribution(editsets: Iterable[EditSet]) -> Dict[ContentCode, float]:
    '''Share of each content code among all classified edits, in code order.'''
    counts = Counter(edit.content for editset in editsets for edit in editset.edits
                     if edit.content is not None)
    total = sum(counts.values())
    if not total:
        return {}
    return {code: counts[code] / total for code in ContentCode if counts[code]}


@dataclass(frozen=True)
class CorpusStats:
    corpus: str
    system: str
    items: int
    error_rate: float
    lengths: LengthStats
    bleu_origin_vs_reference: Optional[float]
    bleu_origin_vs_corrected: Optional[float]
    category_distribution: Dict[ContentCode, float] = field(default_factory=dict)


@dataclass(frozen=True)
class StatsRow:
    '''What the statistics need to know about one dataset item.'''
    corpus: str
    system: str
    original: Tuple[str, ...]
    summary: Optional[Tuple[str, ...]]
    corrected: Tuple[str, ...]
    editset: EditSet  # original -> reference correction, classified


def _group_stats(corpus: str, system: str, rows: Sequence[StatsRow]) -> CorpusStats:
    flagged = [row for row in rows if has_error(row.original, row.corrected)]
    with_summary = [row for row in flagged if row.summary is not None]
    changed = len(flagged)
    return CorpusStats(
        corpus=corpus,
        system=system,
        items=len(rows),
        error_rate=round(100 * changed / len(rows), 2),
        lengths=avg_lengths((row.original, row.summary, row.corrected) for row in rows),
        bleu_origin_vs_reference=corpus_bleu(
            [row.original for row in with_summary],
            [row.summary for row in with_summary]) if with_summary else None,
        bleu_origin_vs_corrected=corpus_bleu(
            [row.original for row in flagged],
            [row.corrected for row in flagged]) if flagged else None,
        category_distribution=category_distribution(row.editset for row in rows),
    )


def corpus_stats(rows: Sequence[StatsRow]) -> List[CorpusStats]:
    '''Statistics per (corpus, system) group in order of appearance, then the pooled corpus.'''
    if not rows:
        raise ContractViolation('statistics of an empty corpus')
    groups: Dict[Tuple[str, str], List[StatsRow]] = {}
    for row in rows:
        groups.setdefault((row.corpus, row.system), []).append(row)
    result = [_group_stats(corpus, system, group) for (corpus, system), group in groups.items()]
    result.append(_group_stats(ALL_GROUP, ALL_GROUP, rows))
    return result
