'''Token alignment of an original summary with its correction, and edit extraction.

The alignment is a weighted edit distance with adjacent transpositions. Substitution costs
come from linguistic features (lemma, UPOS, characters) so that related words line up with each
other rather than being deleted and re-inserted. All costs are exact fractions, which keeps
tie-breaking (and therefore every extracted edit) reproducible.
'''

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from factum.textmodel import AnnotatedSentence, AnnotatedToken
from factum.types import CombinedCode, ContentCode, ContractViolation, FormCode

LEMMA_COST = Fraction(499, 1000)
POS_GROUP_COST = Fraction(1, 4)
POS_COST = Fraction(1, 2)
CHAR_WEIGHT = Fraction(1, 2)
INDEL_COST = Fraction(1)
TRANSPOSE_COST = Fraction(1)

# tags that are closer to each other than to the rest
POS_GROUPS = (frozenset(['VERB', 'AUX']), frozenset(['NOUN', 'PROPN', 'PRON']))


class OpKind(Enum):
    # declaration order is the tie-break preference between equal-cost paths
    Match = 'match'
    Substitute = 'substitute'
    Transpose = 'transpose'
    Delete = 'delete'
    Insert = 'insert'

    def __str__(self):
        return self.value


Span = Tuple[int, int]  # half-open token interval


@dataclass(frozen=True)
class AlignmentOp:
    kind: OpKind
    o_span: Span
    c_span: Span


@dataclass(frozen=True)
class Edit:
    '''A contiguous rewrite of original[o_start:o_end] into corrected[c_start:c_end].'''
    o_start: int
    o_end: int
    c_start: int
    c_end: int
    correction: str  # corrected-span surfaces joined by single spaces
    content: Optional[ContentCode] = None

    def __post_init__(self):
        if not (0 <= self.o_start <= self.o_end and 0 <= self.c_start <= self.c_end):
            raise ContractViolation('invalid edit spans {}'.format(self))
        if self.o_start == self.o_end and self.c_start == self.c_end:
            raise ContractViolation('edit has both spans empty: {}'.format(self))

    @property
    def form(self) -> FormCode:
        return FormCode.from_spans(self.o_start, self.o_end, self.c_start, self.c_end)

    @property
    def combined(self) -> Optional[CombinedCode]:
        if self.content is None:
            return None
        return CombinedCode(self.form, self.content)

    def with_content(self, content: ContentCode) -> 'Edit':
        return replace(self, content=content)


@dataclass(frozen=True)
class EditSet:
    '''All edits turning one original sentence into one corrected sentence.'''
    id: str
    original: AnnotatedSentence
    corrected: AnnotatedSentence
    edits: Tuple[Edit, ...] = ()

    def __post_init__(self):
        for prev, edit in zip(self.edits, self.edits[1:]):
            if (edit.o_start, edit.c_start) < (prev.o_start, prev.c_start):
                raise ContractViolation('edits of {!r} are not sorted'.format(self.id))
            if edit.o_start < prev.o_end:
                raise ContractViolation('edits of {!r} overlap'.format(self.id))

    def __len__(self):
        return len(self.edits)

    def __iter__(self):
        return iter(self.edits)


def lcs_length(a: str, b: str) -> int:
    '''Length of the longest common subsequence of two strings.'''
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for ch_a in a:
        cur = [0]
        for j, ch_b in enumerate(b, 1):
            if ch_a == ch_b:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def char_similarity(a: str, b: str) -> Fraction:
    '''2 * LCS / (|a| + |b|), in [0, 1].'''
    if not a and not b:
        return Fraction(1)
    return Fraction(2 * lcs_length(a, b), len(a) + len(b))


def pos_cost(a: str, b: str) -> Fraction:
    if a == b:
        return Fraction(0)
    for group in POS_GROUPS:
        if a in group and b in group:
            return POS_GROUP_COST
    return POS_COST


def sub_cost(a: AnnotatedToken, b: AnnotatedToken) -> Fraction:
    '''Cost of aligning token `a` with token `b`; 0 only for identical surfaces, always < 2.'''
    if a.surface == b.surface:
        return Fraction(0)
    lemma_cost = Fraction(0) if a.lemma == b.lemma else LEMMA_COST
    a_chars, b_chars = a.surface.lower(), b.surface.lower()
    if a_chars == b_chars:
        # differ in case only; compare as written so the change still costs something
        a_chars, b_chars = a.surface, b.surface
    char_cost = CHAR_WEIGHT * (1 - char_similarity(a_chars, b_chars))
    return lemma_cost + pos_cost(a.upos, b.upos) + char_cost


def _transposable(original: AnnotatedSentence, corrected: AnnotatedSentence, i: int, j: int):
    '''Whether original[i-2:i] and corrected[j-2:j] are the same two words swapped.'''
    if i < 2 or j < 2:
        return False
    o1, o2 = original[i - 2].surface.lower(), original[i - 1].surface.lower()
    c1, c2 = corrected[j - 2].surface.lower(), corrected[j - 1].surface.lower()
    return o1 == c2 and o2 == c1


def align(original: AnnotatedSentence, corrected: AnnotatedSentence) -> List[AlignmentOp]:
    '''Minimal-cost alignment of two token sequences, as a list of operations in order.'''
    n, m = len(original), len(corrected)
    cost: List[List[Optional[Fraction]]] = [[None] * (m + 1) for _ in range(n + 1)]
    back: List[List[Optional[OpKind]]] = [[None] * (m + 1) for _ in range(n + 1)]
    cost[0][0] = Fraction(0)

    for i in range(n + 1):
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            candidates = []
            if i > 0 and j > 0:
                if original[i - 1].surface == corrected[j - 1].surface:
                    candidates.append((cost[i - 1][j - 1], OpKind.Match))
                else:
                    candidates.append((cost[i - 1][j - 1] + sub_cost(original[i - 1],
                                                                     corrected[j - 1]),
                                       OpKind.Substitute))
            if _transposable(original, corrected, i, j):
                candidates.append((cost[i - 2][j - 2] + TRANSPOSE_COST, OpKind.Transpose))
            if i > 0:
                candidates.append((cost[i - 1][j] + INDEL_COST, OpKind.Delete))
            if j > 0:
                candidates.append((cost[i][j - 1] + INDEL_COST, OpKind.Insert))

            # candidates are in preference order; only a strictly lower cost displaces one
            best_cost, best_kind = candidates[0]
            for c, kind in candidates[1:]:
                if c < best_cost:
                    best_cost, best_kind = c, kind
            cost[i][j] = best_cost
            back[i][j] = best_kind

    path: List[AlignmentOp] = []
    i, j = n, m
    while i > 0 or j > 0:
        kind = back[i][j]
        if kind in (OpKind.Match, OpKind.Substitute):
            di, dj = 1, 1
        elif kind == OpKind.Transpose:
            di, dj = 2, 2
        elif kind == OpKind.Delete:
            di, dj = 1, 0
        else:
            di, dj = 0, 1
        path.append(AlignmentOp(kind, (i - di, i), (j - dj, j)))
        i, j = i - di, j - dj
    path.reverse()
    return path


def alignment_cost(path: Sequence[AlignmentOp], original: AnnotatedSentence,
                   corrected: AnnotatedSentence) -> Fraction:
    '''Total cost of an alignment path.'''
    total = Fraction(0)
    for op in path:
        if op.kind == OpKind.Substitute:
            total += sub_cost(original[op.o_span[0]], corrected[op.c_span[0]])
        elif op.kind == OpKind.Transpose:
            total += TRANSPOSE_COST
        elif op.kind in (OpKind.Delete, OpKind.Insert):
            total += INDEL_COST
    return total


def extract_edits(path: Sequence[AlignmentOp], original: AnnotatedSentence,
                  corrected: AnnotatedSentence, id_: Optional[str] = None) -> EditSet:
    '''Collapse every maximal run of non-match operations into a single edit.'''
    edits: List[Edit] = []
    run: List[AlignmentOp] = []

    def close_run():
        if not run:
            return
        c_start, c_end = run[0].c_span[0], run[-1].c_span[1]
        correction = ' '.join(corrected.surfaces[c_start:c_end])
        edits.append(Edit(run[0].o_span[0], run[-1].o_span[1], c_start, c_end, correction))
        run.clear()

    for op in path:
        if op.kind == OpKind.Match:
            close_run()
        else:
            run.append(op)
    close_run()

    return EditSet(original.id if id_ is None else id_, original, corrected, tuple(edits))


def apply_edits(original: AnnotatedSentence, edits: Sequence[Edit]) -> List[str]:
    '''Splice the corrections of `edits` into the original surfaces.'''
    surfaces = original.surfaces
    ordered = sorted(edits, key=lambda e: (e.o_start, e.o_end))
    out: List[str] = []
    pos = 0
    for edit in ordered:
        if edit.o_end > len(surfaces):
            raise ContractViolation('edit span {}-{} out of bounds for {} tokens'.format(
                edit.o_start, edit.o_end, len(surfaces)))
        if edit.o_start < pos:
            raise ContractViolation('edit span {}-{} overlaps a previous edit'.format(
                edit.o_start, edit.o_end))
        out.extend(surfaces[pos:edit.o_start])
        out.extend(edit.correction.split())
        pos = edit.o_end
    out.extend(surfaces[pos:])
    return out


def edit_pair(original: AnnotatedSentence, corrected: AnnotatedSentence,
              id_: Optional[str] = None) -> EditSet:
    '''Align two sentences and extract their edits.'''
    return extract_edits(align(original, corrected), original, corrected, id_)
