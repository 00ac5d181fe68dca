import random
from fractions import Fraction

import pytest

from factum.align import Edit, EditSet, edit_pair
from factum.classify import classify_all
from factum.score import (TOTAL, CategoryCounts, CountMap, aggregate, axis_labels, code_of,
                          compare, f_beta, make_report, match_edits, tally)
from factum.types import Axis, ContentCode, ContractViolation
from test.utils import make_sentence, random_pair

ORIGINAL = make_sentence('Laura/PROPN is/AUX/be at/ADP home/NOUN ./PUNCT', 'o')
CORRECTED = make_sentence('Paul/PROPN is/AUX/be at/ADP work/NOUN ./PUNCT', 'c')


def _percent(value):
    return round(float(value) * 100, 2)


@pytest.mark.parametrize('counts,p,r,f', [
    ((9, 25, 155), 26.47, 5.49, 15.00),
    ((14, 55, 248), 20.29, 5.34, 13.01),
])
def test_f_half(counts, p, r, f):
    scores = f_beta(CategoryCounts(*counts))
    assert (_percent(scores.precision), _percent(scores.recall), _percent(scores.f)) == (p, r, f)


def test_exact_values():
    scores = f_beta(CategoryCounts(1, 1, 0))
    assert scores.precision == Fraction(1, 2)
    assert scores.recall == 1
    assert scores.f == Fraction(5, 9)


def test_no_hypothesis_edits():
    scores = f_beta(CategoryCounts(0, 0, 4))
    assert (scores.precision, scores.recall, scores.f) == (1, 0, 0)


def test_no_reference_edits():
    scores = f_beta(CategoryCounts(0, 3, 0))
    assert (scores.precision, scores.recall, scores.f) == (0, 1, 0)


def test_nothing_to_score():
    scores = f_beta(CategoryCounts())
    assert not scores.defined
    assert scores.precision is None and scores.recall is None


@pytest.mark.parametrize('beta', [0, -1, Fraction(-1, 2)])
def test_beta_must_be_positive(beta):
    with pytest.raises(ContractViolation):
        f_beta(CategoryCounts(1, 0, 0), beta)


def test_duality():
    '''With beta 1, swapping hypothesis and reference swaps precision and recall.'''
    for tp in range(4):
        for fp in range(4):
            for fn in range(4):
                a = f_beta(CategoryCounts(tp, fp, fn), 1)
                b = f_beta(CategoryCounts(tp, fn, fp), 1)
                assert (a.precision, a.recall, a.f) == (b.recall, b.precision, b.f)


def test_monotonic_in_true_positives():
    for beta in (Fraction(1, 2), 1, 2):
        for fp in range(4):
            for fn in range(4):
                fs = [f_beta(CategoryCounts(tp, fp, fn), beta).f for tp in range(1, 6)]
                assert fs == sorted(fs)
                assert all(0 <= f <= 1 for f in fs)


def _editset(edits, id_='s'):
    return EditSet(id_, ORIGINAL, CORRECTED, tuple(edits))


def test_match_edits():
    hyp = _editset([Edit(0, 1, 0, 1, 'Paul'), Edit(3, 4, 3, 4, 'office')])
    ref = _editset([Edit(0, 1, 0, 1, 'Paul'), Edit(3, 4, 3, 4, 'work')])
    match = match_edits(hyp, ref)
    assert match.matched == ((hyp.edits[0], ref.edits[0]),)
    assert match.false_positives == (hyp.edits[1],)
    assert match.false_negatives == (ref.edits[1],)


def test_match_ignores_corrected_offsets():
    hyp = _editset([Edit(3, 4, 4, 5, 'work')])
    ref = _editset([Edit(3, 4, 3, 4, 'work')])
    assert len(match_edits(hyp, ref).matched) == 1


def test_match_needs_same_original():
    other = make_sentence('Paul/PROPN left/VERB/leave', 'o')
    with pytest.raises(ContractViolation):
        match_edits(EditSet('s', other, other), _editset([]))


def test_reference_label_wins_for_true_positives():
    hyp = _editset([Edit(0, 1, 0, 1, 'Paul', ContentCode.Coref)])
    ref = _editset([Edit(0, 1, 0, 1, 'Paul', ContentCode.EntObj)])
    counts = tally(match_edits(hyp, ref), Axis.Content)
    assert dict(counts) == {'Ent:ObjE': CategoryCounts(tp=1)}
    counts = tally(match_edits(hyp, ref), Axis.Combined)
    assert dict(counts) == {'R:Ent:Obj': CategoryCounts(tp=1)}


def test_false_positive_takes_hypothesis_label():
    hyp = _editset([Edit(1, 1, 1, 2, 'not', ContentCode.PredNeg)])
    counts = tally(match_edits(hyp, _editset([])), Axis.Combined)
    assert dict(counts) == {'M:Pred:Neg': CategoryCounts(fp=1)}


def test_unclassified_labels():
    edit = Edit(0, 1, 0, 1, 'Paul')
    assert code_of(edit, Axis.Form) == 'R'
    assert code_of(edit, Axis.Content) == 'NA'
    assert code_of(edit, Axis.Combined) == 'R:NA'
    assert code_of(edit, Axis.Total) == TOTAL


def test_axis_labels():
    assert axis_labels(Axis.Form) == ['M', 'R', 'U']
    assert len(axis_labels(Axis.Content)) == 11
    assert len(axis_labels(Axis.Combined)) == 33
    assert axis_labels(Axis.Total) == [TOTAL]


def test_report_rows_cover_inventory():
    counts = CountMap(Axis.Content)
    counts.add('NA', CategoryCounts(fn=2))
    report = make_report(counts)
    assert list(report.categories) == axis_labels(Axis.Content) + ['NA']
    assert report.total.counts == CategoryCounts(fn=2)
    assert not report.categories['Ent:ObjE'].scores.defined


def _random_corpus(seed, n=150):
    rng = random.Random(seed)
    pairs = []
    for k in range(n):
        original, reference = random_pair(rng)
        _, hypothesis = random_pair(rng)
        if rng.random() < 0.5:
            hypothesis = reference
        ref = classify_all(edit_pair(original, reference))
        hyp = classify_all(edit_pair(original, hypothesis))
        pairs.append((hyp, ref))
    return pairs


def test_conservation():
    pairs = _random_corpus(3)
    n_hyp = sum(len(hyp) for hyp, _ in pairs)
    n_ref = sum(len(ref) for _, ref in pairs)
    for axis in Axis:
        total = compare(pairs, axis).total.counts
        assert total.tp + total.fp == n_hyp
        assert total.tp + total.fn == n_ref


def test_totals_agree_across_axes():
    pairs = _random_corpus(4)
    totals = {axis: compare(pairs, axis).total for axis in Axis}
    assert len({t.counts for t in totals.values()}) == 1
    assert len({t.scores.f for t in totals.values()}) == 1


def _shard_sums(maps, rng):
    shuffled = list(maps)
    rng.shuffle(shuffled)
    cuts = sorted(rng.sample(range(1, len(shuffled)), rng.randint(1, 6)))
    shards = [shuffled[i:j] for i, j in zip([0] + cuts, cuts + [len(shuffled)])]
    for shard in shards:
        report = aggregate(shard, shard[0].axis)
        yield CountMap(report.axis, {label: cs.counts for label, cs in report.categories.items()})


@pytest.mark.parametrize('axis', list(Axis))
def test_aggregation_partition_invariant(axis):
    pairs = _random_corpus(6)
    maps = [tally(match_edits(hyp, ref), axis) for hyp, ref in pairs]
    whole = aggregate(maps, axis)
    assert aggregate(reversed(maps), axis) == whole
    rng = random.Random(len(axis.value))
    for _ in range(10):
        assert aggregate(_shard_sums(maps, rng), axis) == whole


def test_identical_hypothesis_scores_one():
    pairs = [(ref, ref) for _, ref in _random_corpus(5, 40)]
    total = compare(pairs, Axis.Form).total
    if total.counts.tp:
        assert total.scores.f == 1
        assert total.counts.fp == total.counts.fn == 0


def test_aggregate_sums_before_scoring():
    a = CountMap(Axis.Form, {'R': CategoryCounts(1, 0, 0)})
    b = CountMap(Axis.Form, {'R': CategoryCounts(0, 3, 1)})
    report = aggregate([a, b])
    assert report.categories['R'].counts == CategoryCounts(1, 3, 1)
    assert report.categories['R'].scores.precision == Fraction(1, 4)


def test_aggregate_axis_mismatch():
    with pytest.raises(ContractViolation):
        aggregate([CountMap(Axis.Form), CountMap(Axis.Content)])


def test_aggregate_nothing():
    with pytest.raises(ContractViolation):
        aggregate([])
    report = aggregate([], Axis.Form)
    assert not report.total.scores.defined
