import random
from dataclasses import replace

import pytest

from factum.align import Edit, EditSet, edit_pair
from factum.classify import (DETECTORS, EditView, classify, classify_all, detect_coreference,
                             majority_tag)
from factum.textmodel import AnnotatedToken
from factum.types import CombinedCode, ContentCode, FormCode
from test.utils import make_sentence

# (original, corrected, expected edit spans, expected code); every pair differs in a single
# merged edit, with the annotations a standard UD tagger gives these words
GOLDEN = [
    ('Laura/PROPN will/AUX call/VERB ./PUNCT',
     'Paul/PROPN will/AUX call/VERB ./PUNCT',
     (0, 1, 0, 1), 'R:Ent:Obj'),
    ('Tom/PROPN is/AUX/be proud/ADJ ./PUNCT',
     'Tom/PROPN is/AUX/be happy/ADJ ./PUNCT',
     (2, 3, 2, 3), 'R:Ent:Attr'),
    ('Laura/PROPN is/AUX/be at/ADP home/NOUN ./PUNCT',
     'Laura/PROPN may/AUX be/AUX at/ADP home/NOUN ./PUNCT',
     (1, 2, 1, 3), 'R:Pred:Mod'),
    ('Laura/PROPN is/AUX/be at/ADP home/NOUN ./PUNCT',
     'Laura/PROPN was/AUX/be at/ADP home/NOUN ./PUNCT',
     (1, 2, 1, 2), 'R:Pred:Tens'),
    ('Ann/PROPN will/AUX come/VERB ./PUNCT',
     "Ann/PROPN won't/AUX/will come/VERB ./PUNCT",
     (1, 2, 1, 2), 'R:Pred:Neg'),
    ('Tom/PROPN lent/VERB/lend her/PRON money/NOUN ./PUNCT',
     'Tom/PROPN gave/VERB/give her/PRON money/NOUN ./PUNCT',
     (1, 2, 1, 2), 'R:Pred:Verb'),
    ('They/PRON/they met/VERB/meet after/ADP work/NOUN ./PUNCT',
     'They/PRON/they met/VERB/meet during/ADP work/NOUN ./PUNCT',
     (2, 3, 2, 3), 'R:Circ'),
    ('Tom/PROPN called/VERB/call her/PRON ./PUNCT',
     'Tom/PROPN called/VERB/call Ann/PROPN ./PUNCT',
     (2, 3, 2, 3), 'R:Coref'),
    ('Tom/PROPN stayed/VERB/stay but/CCONJ Ann/PROPN left/VERB/leave ./PUNCT',
     'Tom/PROPN stayed/VERB/stay because/SCONJ Ann/PROPN left/VERB/leave ./PUNCT',
     (2, 3, 2, 3), 'R:Link'),
    ('They/PRON/they paid/VERB/pay 15/NUM dollars/NOUN/dollar ./PUNCT',
     'They/PRON/they paid/VERB/pay 30/NUM dollars/NOUN/dollar ./PUNCT',
     (2, 3, 2, 3), 'R:Num'),
    ('Ann/PROPN is/AUX/be late/ADJ ,/PUNCT so/CCONJ she/PRON will/AUX call/VERB ./PUNCT',
     'Ann/PROPN is/AUX/be late/ADJ ./PUNCT She/PRON/she will/AUX call/VERB ./PUNCT',
     (3, 6, 3, 5), 'R:Oth'),
    ('Ann/PROPN met/VERB/meet with/ADP Ms./PROPN ./PUNCT',
     'Ann/PROPN met/VERB/meet with/ADP Ms./PROPN Blair/PROPN ./PUNCT',
     (4, 4, 4, 5), 'M:Ent:Obj'),
    ('Tom/PROPN reminds/VERB/remind her/PRON ./PUNCT',
     'Tom/PROPN teaches/VERB/teach her/PRON ./PUNCT',
     (1, 2, 1, 2), 'R:Pred:Verb'),
    ('Derek/PROPN and/CCONJ Phil/PROPN will/AUX come/VERB ./PUNCT',
     'Derek/PROPN will/AUX come/VERB ./PUNCT',
     (1, 3, 1, 1), 'U:Ent:Obj'),
]


def _golden_editset(original, corrected):
    return edit_pair(make_sentence(original, 'o'), make_sentence(corrected, 'c'))


@pytest.mark.parametrize('original,corrected,spans,code', GOLDEN)
def test_golden(original, corrected, spans, code):
    editset = classify_all(_golden_editset(original, corrected))
    assert len(editset.edits) == 1
    edit = editset.edits[0]
    assert (edit.o_start, edit.o_end, edit.c_start, edit.c_end) == spans
    assert str(edit.combined) == code
    assert edit.combined == CombinedCode.parse(code)


def _fired(view):
    return [code for code, detector in DETECTORS if detector(view)]


@pytest.mark.parametrize('original,corrected,spans,code', GOLDEN)
def test_masking_specific_detectors(original, corrected, spans, code):
    '''Dropping the specific detectors that did not fire leaves the result unchanged.'''
    editset = _golden_editset(original, corrected)
    edit = editset.edits[0]
    view = EditView(edit, editset.original, editset.corrected)
    fired = set(_fired(view))
    kept = [(c, d) for c, d in DETECTORS[:5] if c in fired] + list(DETECTORS[5:])
    assert (classify(edit, editset.original, editset.corrected, kept)
            == classify(edit, editset.original, editset.corrected))


@pytest.mark.parametrize('original,corrected,spans,code', GOLDEN)
def test_context_mutation(original, corrected, spans, code):
    '''Tokens outside the edit spans never change the code.'''
    editset = _golden_editset(original, corrected)
    edit = editset.edits[0]
    expected = classify(edit, editset.original, editset.corrected)
    rng = random.Random(len(original))
    tags = ['NOUN', 'VERB', 'ADJ', 'PRON', 'NUM', 'CCONJ', 'X']

    def mutate(sentence, start, end):
        tokens = list(sentence.tokens)
        for i in range(len(tokens)):
            if not start <= i < end:
                tokens[i] = AnnotatedToken(i, 'w{}'.format(i), 'w', rng.choice(tags))
        return replace(sentence, tokens=tuple(tokens))

    for _ in range(5):
        original_ = mutate(editset.original, edit.o_start, edit.o_end)
        corrected_ = mutate(editset.corrected, edit.c_start, edit.c_end)
        assert classify(edit, original_, corrected_) == expected


def test_empty_editset():
    sentence = make_sentence('Tom/PROPN left/VERB/leave')
    editset = EditSet('e', sentence, sentence)
    assert classify_all(editset) == editset


def test_classify_all_keeps_order_and_spans():
    editset = _golden_editset(
        'Laura/PROPN said/VERB/say it/PRON is/AUX/be at/ADP home/NOUN ./PUNCT',
        'Paul/PROPN said/VERB/say it/PRON was/AUX/be at/ADP work/NOUN ./PUNCT')
    classified = classify_all(editset)
    assert [(e.o_start, e.o_end, e.correction) for e in classified.edits] == \
        [(e.o_start, e.o_end, e.correction) for e in editset.edits]
    assert [e.content for e in classified.edits] == [ContentCode.EntObj, ContentCode.PredTens,
                                                     ContentCode.EntObj]
    assert all(e.content is None for e in editset.edits)


@pytest.mark.parametrize('original,corrected,code', [
    ('she/PRON is/AUX/be here/ADV', 'she/PRON is/AUX/be not/PART here/ADV', ContentCode.PredNeg),
    ('they/PRON never/ADV/never came/VERB/come', 'they/PRON came/VERB/come', ContentCode.PredNeg),
    ('it/PRON does/AUX/do work/VERB', "it/PRON doesn't/AUX/do work/VERB", ContentCode.PredNeg),
    ('at/ADP 5:30/NUM', 'at/ADP 6:15/NUM', ContentCode.Num),
    ('she/PRON can/AUX come/VERB', 'she/PRON must/AUX come/VERB', ContentCode.PredMod),
    ('he/PRON came/VERB/come', 'he/PRON comes/VERB/come', ContentCode.PredTens),
    ('they/PRON met/VERB/meet yesterday/ADV', 'they/PRON met/VERB/meet today/ADV',
     ContentCode.Circ),
    ('go/VERB on/ADP foo/X bar/X', 'go/VERB', ContentCode.Circ),
    ('a/DET very/ADV big/ADJ dog/NOUN', 'a/DET dog/NOUN', ContentCode.EntAttr),
    ('hi/INTJ Tom/PROPN', 'hey/INTJ Tom/PROPN', ContentCode.Oth),
])
def test_detectors(original, corrected, code):
    editset = classify_all(_golden_editset(original, corrected))
    assert len(editset.edits) == 1
    assert editset.edits[0].content == code


def test_majority_ties():
    sentence = make_sentence('and/CCONJ Phil/PROPN big/ADJ went/VERB/go')
    view = EditView(Edit(0, 2, 0, 0, ''), sentence, sentence)
    assert majority_tag(view) == 'PROPN'
    view = EditView(Edit(2, 4, 0, 0, ''), sentence, sentence)
    assert majority_tag(view) == 'ADJ'
    punct = make_sentence('./PUNCT ,/PUNCT')
    assert majority_tag(EditView(Edit(0, 2, 0, 0, ''), punct, punct)) is None


@pytest.mark.parametrize('words,expected', [
    ('her/PRON', True),
    ('her/PRON Ann/PROPN', True),
    ('the/DET man/NOUN he/PRON', True),
    ('her/PRON ./PUNCT', False),
    ('so/CCONJ she/PRON', False),
    ('Ann/PROPN', False),
])
def test_coreference_checks_every_token(words, expected):
    sentence = make_sentence(words)
    view = EditView(Edit(0, len(sentence), 0, 0, ''), sentence, sentence)
    assert detect_coreference(view) == expected


def test_totality():
    rng = random.Random(11)
    tags = ['NOUN', 'VERB', 'AUX', 'ADJ', 'PRON', 'NUM', 'CCONJ', 'ADP', 'PUNCT', 'X', 'DET']
    for _ in range(200):
        n = rng.randint(1, 4)
        tokens = ' '.join('w{}/{}'.format(i, rng.choice(tags)) for i in range(n))
        sentence = make_sentence(tokens)
        edit = Edit(0, n, 0, 0, '')
        assert edit.form == FormCode.Unnecessary
        assert classify(edit, sentence, make_sentence('')) in ContentCode
