'''Content-based classification of edits from POS and lemma features.

Each edit is run through a fixed cascade of detectors; the first one that fires decides the
code. The specific detectors (negation, numbers, modality, tense, coreference) run before the
POS-majority ones.
'''

from collections import Counter
from dataclasses import replace
from typing import Callable, List, Optional, Sequence, Tuple

from factum.align import Edit, EditSet
from factum.annotate import is_numeric
from factum.textmodel import AnnotatedSentence, AnnotatedToken
from factum.types import ContentCode, FormCode

NEGATION_WORDS = frozenset(['not', "n't", 'never', 'no', 'none', 'neither', 'nor', 'cannot'])
MODAL_LEMMAS = frozenset(['can', 'could', 'may', 'might', 'must', 'shall', 'should', 'will',
                          'would'])
VERBAL = frozenset(['VERB', 'AUX'])
NOMINAL = frozenset(['NOUN', 'PROPN', 'DET'])

# tie-break order for the majority tag; this is not detector order, nominal tags beat the
# conjunctions so that "and Phil" is an entity
MAJORITY_ORDER = ('NOUN', 'PROPN', 'CCONJ', 'SCONJ', 'ADJ', 'VERB', 'AUX', 'ADV', 'ADP')


class EditView:
    '''The two spans of an edit, with their tokens.'''
    __slots__ = ['edit', 'o_tokens', 'c_tokens']

    def __init__(self, edit: Edit, original: AnnotatedSentence, corrected: AnnotatedSentence):
        self.edit = edit
        self.o_tokens: Tuple[AnnotatedToken, ...] = original.tokens[edit.o_start:edit.o_end]
        self.c_tokens: Tuple[AnnotatedToken, ...] = corrected.tokens[edit.c_start:edit.c_end]

    @property
    def union(self) -> Tuple[AnnotatedToken, ...]:
        return self.o_tokens + self.c_tokens

    @property
    def words(self) -> List[AnnotatedToken]:
        '''Tokens of both spans except punctuation.'''
        return [t for t in self.union if t.upos != 'PUNCT']


def _lower(token: AnnotatedToken) -> str:
    return token.surface.lower().replace('’', "'")


def is_negation(word: str) -> bool:
    return word in NEGATION_WORDS or word.endswith("n't")


def majority_tag(view: EditView) -> Optional[str]:
    '''Most frequent UPOS among the non-punctuation tokens; None when there are none.'''
    counts = Counter(t.upos for t in view.words)
    if not counts:
        return None
    top = max(counts.values())
    tied = [tag for tag, count in counts.items() if count == top]
    if len(tied) == 1:
        return tied[0]
    for tag in MAJORITY_ORDER:
        if tag in tied:
            return tag
    return sorted(tied)[0]


def detect_negation(view: EditView) -> bool:
    o_words = {_lower(t) for t in view.o_tokens}
    c_words = {_lower(t) for t in view.c_tokens}
    if any(is_negation(w) for w in o_words ^ c_words):
        return True
    # 'do' -> "don't" written as one side plus the suffix
    o_text = ''.join(_lower(t) for t in view.o_tokens)
    c_text = ''.join(_lower(t) for t in view.c_tokens)
    return o_text + "n't" == c_text or c_text + "n't" == o_text


def detect_number(view: EditView) -> bool:
    words = view.words
    return bool(words) and all(t.upos == 'NUM' or is_numeric(t.surface) for t in words)


def detect_modality(view: EditView) -> bool:
    o_modals = {t.lemma for t in view.o_tokens if t.lemma in MODAL_LEMMAS}
    c_modals = {t.lemma for t in view.c_tokens if t.lemma in MODAL_LEMMAS}
    if o_modals == c_modals:
        return False
    return all(t.upos in VERBAL for t in view.words)


def detect_tense(view: EditView) -> bool:
    if view.edit.form != FormCode.Replacement:
        return False
    if not all(t.upos in VERBAL for t in view.union):
        return False
    if Counter(t.lemma for t in view.o_tokens) != Counter(t.lemma for t in view.c_tokens):
        return False
    return [t.surface for t in view.o_tokens] != [t.surface for t in view.c_tokens]


def detect_coreference(view: EditView) -> bool:
    tokens = view.union
    if not any(t.upos == 'PRON' for t in tokens):
        return False
    return all(t.upos in NOMINAL for t in tokens if t.upos != 'PRON')


def _majority_in(*tags: str) -> Callable[[EditView], bool]:
    def detector(view: EditView) -> bool:
        return majority_tag(view) in tags
    return detector


def detect_circumstance(view: EditView) -> bool:
    if majority_tag(view) in ('ADV', 'ADP'):
        return True
    return any(span and span[0].upos == 'ADP' for span in (view.o_tokens, view.c_tokens))


DETECTORS: Sequence[Tuple[ContentCode, Callable[[EditView], bool]]] = (
    (ContentCode.PredNeg, detect_negation),
    (ContentCode.Num, detect_number),
    (ContentCode.PredMod, detect_modality),
    (ContentCode.PredTens, detect_tense),
    (ContentCode.Coref, detect_coreference),
    (ContentCode.Link, _majority_in('CCONJ', 'SCONJ')),
    (ContentCode.EntObj, _majority_in('NOUN', 'PROPN')),
    (ContentCode.EntAttr, _majority_in('ADJ')),
    (ContentCode.PredVerb, _majority_in('VERB', 'AUX')),
    (ContentCode.Circ, detect_circumstance),
)


def classify(edit: Edit, original: AnnotatedSentence, corrected: AnnotatedSentence,
             detectors=DETECTORS) -> ContentCode:
    '''The content code of `edit`: the first detector that fires, else OthE.'''
    view = EditView(edit, original, corrected)
    for code, detector in detectors:
        if detector(view):
            return code
    return ContentCode.Oth


def classify_all(editset: EditSet) -> EditSet:
    '''Give every edit of `editset` its content code; order and spans are kept.'''
    edits = tuple(edit.with_content(classify(edit, editset.original, editset.corrected))
                  for edit in editset.edits)
    return replace(editset, edits=edits)
