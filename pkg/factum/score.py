'''Comparing hypothesis edits with reference edits, and precision/recall/F-beta per category.

An edit is a true positive when the hypothesis and the reference both contain it, with the same
original span and the same correction string. Counts are summed over the corpus before any
ratio is taken (micro-averaging).
'''

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from factum.align import Edit, EditSet
from factum.types import (UNCLASSIFIED, Axis, CombinedCode, ContentCode, ContractViolation,
                          FormCode)

DEFAULT_BETA = Fraction(1, 2)
TOTAL = 'Total'


@dataclass(frozen=True)
class CategoryCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __add__(self, other: 'CategoryCounts') -> 'CategoryCounts':
        return CategoryCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)

    @property
    def empty(self) -> bool:
        return self.tp == self.fp == self.fn == 0


@dataclass(frozen=True)
class ScoreTriple:
    '''Precision, recall and F-beta; all three are None when there is nothing to score.'''
    precision: Optional[Fraction]
    recall: Optional[Fraction]
    f: Optional[Fraction]
    beta: Fraction = DEFAULT_BETA

    @property
    def defined(self) -> bool:
        return self.f is not None


def f_beta(counts: CategoryCounts, beta=DEFAULT_BETA) -> ScoreTriple:
    '''Precision, recall and F-beta of one category.

    With no hypothesis edits precision is 1, with no reference edits recall is 1, and with no
    edits at all the triple is undefined.
    '''
    beta = Fraction(beta)
    if beta <= 0:
        raise ContractViolation('beta must be positive, got {}'.format(beta))
    if counts.empty:
        return ScoreTriple(None, None, None, beta)

    tp, fp, fn = counts.tp, counts.fp, counts.fn
    precision = Fraction(tp, tp + fp) if tp + fp else Fraction(1)
    recall = Fraction(tp, tp + fn) if tp + fn else Fraction(1)
    b2 = beta * beta
    denominator = b2 * precision + recall
    f = (1 + b2) * precision * recall / denominator if denominator else Fraction(0)
    return ScoreTriple(precision, recall, f, beta)


@dataclass(frozen=True)
class EditMatch:
    '''Result of comparing the hypothesis and reference edits of one sentence.'''
    matched: Tuple[Tuple[Edit, Edit], ...]  # (hypothesis, reference) pairs
    false_positives: Tuple[Edit, ...]
    false_negatives: Tuple[Edit, ...]


def _key(edit: Edit):
    return (edit.o_start, edit.o_end, edit.correction)


def match_edits(hyp: EditSet, ref: EditSet) -> EditMatch:
    '''Pair up hypothesis and reference edits with equal original spans and corrections.'''
    if hyp.original.surfaces != ref.original.surfaces:
        raise ContractViolation('hypothesis and reference of {!r} have different originals'.format(
            ref.id))

    remaining: Dict[tuple, List[Edit]] = {}
    for edit in ref.edits:
        remaining.setdefault(_key(edit), []).append(edit)

    matched = []
    false_positives = []
    for edit in hyp.edits:
        candidates = remaining.get(_key(edit))
        if candidates:
            matched.append((edit, candidates.pop(0)))
        else:
            false_positives.append(edit)

    matched_refs = {id(r) for _, r in matched}
    false_negatives = tuple(e for e in ref.edits if id(e) not in matched_refs)
    return EditMatch(tuple(matched), tuple(false_positives), false_negatives)


def code_of(edit: Edit, axis: Axis) -> str:
    '''The label `edit` is counted under on `axis`.'''
    if axis == Axis.Total:
        return TOTAL
    if axis == Axis.Form:
        return edit.form.value
    if edit.content is None:
        return UNCLASSIFIED if axis == Axis.Content else '{}:{}'.format(edit.form.value,
                                                                       UNCLASSIFIED)
    if axis == Axis.Content:
        return edit.content.value
    return str(edit.combined)


def axis_labels(axis: Axis) -> List[str]:
    '''All labels of an axis, in report order.'''
    return {
        Axis.Form: lambda: [code.value for code in FormCode],
        Axis.Content: lambda: [code.value for code in ContentCode],
        Axis.Combined: lambda: [str(code) for code in CombinedCode.all_codes()],
        Axis.Total: lambda: [TOTAL],
    }[axis]()


class CountMap(Mapping):
    '''Counts per label on one axis.'''
    def __init__(self, axis: Axis, counts: Optional[Mapping[str, CategoryCounts]] = None):
        self.axis = axis
        self._counts: Dict[str, CategoryCounts] = dict(counts or {})

    def __getitem__(self, label: str) -> CategoryCounts:
        return self._counts[label]

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def __repr__(self):
        return 'CountMap({}, {})'.format(self.axis, self._counts)

    def __eq__(self, other):
        if not isinstance(other, CountMap):
            return NotImplemented
        return self.axis == other.axis and self._counts == other._counts

    def add(self, label: str, counts: CategoryCounts):
        self._counts[label] = self._counts.get(label, CategoryCounts()) + counts


def tally(match: EditMatch, axis: Axis) -> CountMap:
    '''Count one sentence's TP/FP/FN per label.

    True positives and false negatives take the reference edit's label, false positives the
    hypothesis edit's label.
    '''
    counts = CountMap(axis)
    for _, ref_edit in match.matched:
        counts.add(code_of(ref_edit, axis), CategoryCounts(tp=1))
    for edit in match.false_positives:
        counts.add(code_of(edit, axis), CategoryCounts(fp=1))
    for edit in match.false_negatives:
        counts.add(code_of(edit, axis), CategoryCounts(fn=1))
    return counts


@dataclass(frozen=True)
class CategoryScore:
    counts: CategoryCounts
    scores: ScoreTriple


@dataclass(frozen=True)
class ScoreReport:
    axis: Axis
    beta: Fraction
    categories: Dict[str, CategoryScore]
    total: CategoryScore


def make_report(counts: CountMap, beta=DEFAULT_BETA) -> ScoreReport:
    '''Score summed counts; rows cover the whole axis inventory plus any extra labels seen.'''
    beta = Fraction(beta)
    labels = axis_labels(counts.axis)
    labels += sorted(label for label in counts if label not in labels)

    categories = {}
    total = CategoryCounts()
    for label in labels:
        c = counts.get(label, CategoryCounts())
        categories[label] = CategoryScore(c, f_beta(c, beta))
        total += c
    return ScoreReport(counts.axis, beta, categories, CategoryScore(total, f_beta(total, beta)))


def aggregate(count_maps: Iterable[CountMap], axis: Optional[Axis] = None,
              beta=DEFAULT_BETA) -> ScoreReport:
    '''Sum per-sentence counts into a corpus report.'''
    summed: Optional[CountMap] = CountMap(axis) if axis is not None else None
    for count_map in count_maps:
        if summed is None:
            summed = CountMap(count_map.axis)
        elif count_map.axis != summed.axis:
            raise ContractViolation('cannot aggregate counts of axis {} with axis {}'.format(
                count_map.axis, summed.axis))
        for label, c in count_map.items():
            summed.add(label, c)
    if summed is None:
        raise ContractViolation('nothing to aggregate and no axis given')
    return make_report(summed, beta)


def compare(pairs: Sequence[Tuple[EditSet, EditSet]], axis: Axis,
            beta=DEFAULT_BETA) -> ScoreReport:
    '''Score (hypothesis, reference) edit sets of a corpus on one axis.'''
    return aggregate((tally(match_edits(hyp, ref), axis) for hyp, ref in pairs), axis, beta)
