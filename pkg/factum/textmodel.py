'''Annotated text model and the dataset/annotation file formats.

Datasets are UTF-8 JSON-lines, one DatasetItem per line. Annotations are a CoNLL-U subset:
a `# id = <sentence-id>` comment followed by tab-separated token lines
ID FORM LEMMA UPOS XPOS FEATS (HEAD and DEPREL columns may follow and are ignored), with a
blank line ending each sentence.
'''

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from factum.types import ContractViolation, DataFormatError, SrcPosition

log = logging.getLogger(__name__)

UPOS_TAGS = frozenset([
    'ADJ', 'ADP', 'ADV', 'AUX', 'CCONJ', 'DET', 'INTJ', 'NOUN', 'NUM', 'PART', 'PRON', 'PROPN',
    'PUNCT', 'SCONJ', 'SYM', 'VERB', 'X',
])

# Column counts accepted on token lines: the six used here, plus HEAD/DEPREL and the full ten
TOKEN_COLUMNS = (6, 8, 10)

EMPTY = '_'
ID_COMMENT = '# id = '


@dataclass(frozen=True)
class AnnotatedToken:
    index: int  # 0-based position within the sentence
    surface: str
    lemma: str
    upos: str
    xpos: Optional[str] = None
    feats: Optional[FrozenSet[str]] = None  # key=value strings

    def __post_init__(self):
        if not self.surface or any(ch.isspace() for ch in self.surface):
            raise ContractViolation('token surface must be non-empty and without whitespace: '
                                    '{!r}'.format(self.surface))
        if self.upos not in UPOS_TAGS:
            raise ContractViolation("unknown UPOS tag '{}'".format(self.upos))
        if self.lemma != self.lemma.lower():
            raise ContractViolation("lemma must be lowercase: '{}'".format(self.lemma))
        if self.lemma == EMPTY and self.surface != EMPTY:
            raise ContractViolation("lemma '_' is the CoNLL-U empty lemma")
        # empty values have no CoNLL-U spelling other than '_', i.e. absent
        if not self.xpos:
            object.__setattr__(self, 'xpos', None)
        if not self.feats:
            object.__setattr__(self, 'feats', None)
        else:
            object.__setattr__(self, 'feats', frozenset(self.feats))


@dataclass(frozen=True)
class AnnotatedSentence:
    id: str
    tokens: Tuple[AnnotatedToken, ...] = ()

    def __post_init__(self):
        for pos, token in enumerate(self.tokens):
            if token.index != pos:
                raise ContractViolation('token {} of sentence {!r} has index {}'.format(
                    pos, self.id, token.index))

    def __len__(self):
        return len(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]

    def __iter__(self):
        return iter(self.tokens)

    @property
    def surfaces(self) -> List[str]:
        return [token.surface for token in self.tokens]

    @staticmethod
    def from_surfaces(id_: str, surfaces: Sequence[str]) -> 'AnnotatedSentence':
        '''A sentence carrying surfaces only, for edit files which have no annotation.'''
        return AnnotatedSentence(id_, tuple(
            AnnotatedToken(i, surface, surface.lower(), 'X') for i, surface in enumerate(surfaces)))


class Field(Enum):
    '''Texts of a DatasetItem that can carry an annotation, valued by their id suffix.'''
    Original = 'orig'
    Reference = 'ref'
    Hypothesis = 'hyp'
    Summary = 'sum'

    def __str__(self):
        return self.value

    def sentence_id(self, item_id: str) -> str:
        return '{}.{}'.format(item_id, self.value)


@dataclass(frozen=True)
class DatasetItem:
    '''One evaluation record.

    Attributes:
        dialogue: The source document.
        original: The summary to be corrected.
        reference: The human correction of `original`.
        hypothesis: A system correction of `original`, if any.
        summary: The reference summary of the summarization dataset, if any. This is unrelated
                 to `reference` and only used for corpus statistics.
    '''
    id: str
    dialogue: str
    original: str
    reference: str
    hypothesis: Optional[str] = None
    system: Optional[str] = None
    corpus: Optional[str] = None
    summary: Optional[str] = None

    def text(self, field_: Field) -> Optional[str]:
        return {
            Field.Original: self.original,
            Field.Reference: self.reference,
            Field.Hypothesis: self.hypothesis,
            Field.Summary: self.summary,
        }[field_]


REQUIRED_FIELDS = ('id', 'dialogue', 'original', 'reference')
OPTIONAL_FIELDS = ('hypothesis', 'system', 'corpus', 'summary')


def parse_dataset(text: Iterable[str]) -> List[DatasetItem]:
    '''Parse a JSON-lines dataset. `text` is a string or an iterable of lines.

    Blank lines are skipped and unknown fields are ignored.
    '''
    lines = text.splitlines() if isinstance(text, str) else text
    items = []
    seen = set()
    for line_no, line in enumerate(lines, 1):
        if not line.strip():
            continue
        pos = SrcPosition(line_no)
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise DataFormatError('malformed JSON: {}'.format(e.msg), SrcPosition(line_no, e.colno))
        if not isinstance(record, dict):
            raise DataFormatError('expected a JSON object', pos)

        values = {}
        for name in REQUIRED_FIELDS:
            if name not in record:
                raise DataFormatError("missing required field '{}'".format(name), pos, field=name)
            if not isinstance(record[name], str):
                raise DataFormatError("field '{}' must be a string".format(name), pos, field=name)
            values[name] = record[name]
        for name in OPTIONAL_FIELDS:
            value = record.get(name)
            if value is not None and not isinstance(value, str):
                raise DataFormatError("field '{}' must be a string or null".format(name), pos,
                                      field=name)
            values[name] = value

        if values['id'] in seen:
            raise DataFormatError("duplicate item id '{}'".format(values['id']), pos, field='id')
        seen.add(values['id'])
        items.append(DatasetItem(**values))

    return items


def _parse_token(line: str, line_no: int, expected_index: int) -> AnnotatedToken:
    columns = line.split('\t')
    if len(columns) not in TOKEN_COLUMNS:
        raise DataFormatError('expected 6, 8 or 10 tab-separated columns, got {}'.format(
            len(columns)), SrcPosition(line_no))

    id_text, form, lemma, upos, xpos, feats = columns[:6]
    try:
        token_id = int(id_text)
    except ValueError:
        raise DataFormatError("token ID '{}' is not an integer".format(id_text),
                              SrcPosition(line_no))
    if token_id != expected_index + 1:
        raise DataFormatError('token ID {} out of sequence, expected {}'.format(
            token_id, expected_index + 1), SrcPosition(line_no))
    if upos not in UPOS_TAGS:
        raise DataFormatError("unknown UPOS tag '{}'".format(upos), SrcPosition(line_no))
    if not form or any(ch.isspace() for ch in form):
        raise DataFormatError("invalid FORM '{}'".format(form), SrcPosition(line_no))

    return AnnotatedToken(
        index=expected_index,
        surface=form,
        lemma=lemma.lower() if lemma != EMPTY else form.lower(),
        upos=upos,
        xpos=None if xpos == EMPTY else xpos,
        feats=None if feats == EMPTY else frozenset(feats.split('|')),
    )


def parse_conllu(text: Iterable[str]) -> List[AnnotatedSentence]:
    '''Parse the CoNLL-U subset into sentences, in file order.'''
    lines = text.splitlines() if isinstance(text, str) else text
    sentences = []
    sent_id: Optional[str] = None
    tokens: List[AnnotatedToken] = []
    started = False
    start_line = 0

    def flush():
        if sent_id is None:
            raise DataFormatError("sentence has no '# id = ' comment", SrcPosition(start_line))
        sentences.append(AnnotatedSentence(sent_id, tuple(tokens)))

    for line_no, line in enumerate(lines, 1):
        line = line.rstrip('\r\n')
        if not line.strip():
            if started:
                flush()
                sent_id, tokens, started = None, [], False
            continue

        if not started:
            started = True
            start_line = line_no
        if line.startswith('#'):
            if line.startswith(ID_COMMENT):
                sent_id = line[len(ID_COMMENT):].strip()
            # other comments (e.g. '# text = ...') are ignored
            continue
        tokens.append(_parse_token(line, line_no, len(tokens)))

    if started:
        flush()
    return sentences


def serialize_conllu(sentences: Iterable[AnnotatedSentence]) -> str:
    '''Write sentences in the CoNLL-U subset read by parse_conllu.'''
    out = []
    for sentence in sentences:
        out.append(ID_COMMENT + sentence.id + '\n')
        for token in sentence.tokens:
            feats = '|'.join(sorted(token.feats)) if token.feats else EMPTY
            out.append('\t'.join((str(token.index + 1), token.surface, token.lemma, token.upos,
                                  token.xpos or EMPTY, feats)) + '\n')
        out.append('\n')
    return ''.join(out)


def read_dataset(path: str) -> List[DatasetItem]:
    with open(path, encoding='utf-8') as f:
        try:
            items = parse_dataset(f)
        except DataFormatError as e:
            raise e.with_path(path)
    log.info('Read %d items from %s', len(items), path)
    return items


def read_conllu(path: str) -> List[AnnotatedSentence]:
    with open(path, encoding='utf-8') as f:
        try:
            sentences = parse_conllu(f)
        except DataFormatError as e:
            raise e.with_path(path)
    log.info('Read %d annotated sentences from %s', len(sentences), path)
    return sentences
