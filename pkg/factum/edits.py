'''Reading and writing edit files.

An edit file holds one block per sentence: an optional `# id = <id>` comment, the original
tokens on an `S` line, and one `A` line per edit,

    A <o_start> <o_end>|||<FORM>:<CONTENT>|||<correction>|||REQUIRED|||-NONE-|||0

followed by a blank line. CONTENT is `NA` for edits that were not classified. Other scorers' `noop`
lines (`A -1 -1|||noop|||...`) are skipped.
'''

import logging
from typing import Dict, List, Optional, Sequence

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from factum.align import Edit, EditSet, apply_edits
from factum.textmodel import AnnotatedSentence
from factum.types import (UNCLASSIFIED, ContentCode, ContractViolation, DataFormatError,
                          FormCode, SrcPosition)
from factum.utils import get_abs_path, get_token_position

log = logging.getLogger(__name__)

FIELD_SEP = '|||'
A_LINE_TAIL = ('REQUIRED', '-NONE-', '0')
NOOP = 'noop'
ID_COMMENT = '# id = '

LINE_KINDS = {
    'COMMENT': 'comment',
    'S_LINE': 'S',
    'A_LINE': 'A',
    '_BLANK': 'blank',
}


def get_grammar_str():
    '''Load the grammar string from `edits.lark`'''
    with open(get_abs_path('edits.lark')) as r:
        grammar_str = r.read()

    return grammar_str


def get_parser(grammar_str: str):
    '''Helper that creates the Lark parser object.'''
    return Lark(grammar_str, start='start', parser='lalr',
                propagate_positions=True,
                lexer='contextual')


def _describe(e: UnexpectedInput) -> str:
    if isinstance(e, UnexpectedCharacters):
        return 'malformed line'
    if isinstance(e, UnexpectedToken):
        if e.token.type == '$END':
            return 'unexpected end of file'
        return 'unexpected {} line'.format(LINE_KINDS.get(e.token.type, e.token.type))
    return 'unexpected end of file'


class EditFileParser:
    '''Frontend of a parser for edit files, wrapping a Lark parser.'''
    def __init__(self):
        self.parser = get_parser(get_grammar_str())

    def parse_tree(self, text: str) -> Tree:
        '''Parse the block structure, making sure the last block is terminated by a blank line.'''
        if not text.endswith('\n'):
            text += '\n'
        text += '\n'
        try:
            return self.parser.parse(text)
        except UnexpectedInput as e:
            # re-throw error using our own class
            line, column = getattr(e, 'line', -1), getattr(e, 'column', -1)
            if not isinstance(line, int) or line < 1:
                line = max(text.count('\n') - 1, 1)
            if not isinstance(column, int) or column < 1:
                column = 1
            raise DataFormatError(_describe(e), SrcPosition(line, column))

    def parse(self, text: str) -> List[EditSet]:
        editsets = []
        seen = set()
        for ordinal, block in enumerate(self.parse_tree(text).children, 1):
            editset = self._read_block(block, ordinal)
            if editset.id in seen:
                s_line = next(t for t in block.children if t.type == 'S_LINE')
                raise DataFormatError("duplicate sentence id '{}'".format(editset.id),
                                      get_token_position(s_line))
            seen.add(editset.id)
            editsets.append(editset)
        return editsets

    def _read_block(self, block: Tree, ordinal: int) -> EditSet:
        id_: Optional[str] = None
        original: Optional[AnnotatedSentence] = None
        edits: List[Edit] = []
        lines: Dict[int, Token] = {}

        for token in block.children:
            value = token.value.rstrip('\r\n')
            if token.type == 'COMMENT':
                if value.startswith(ID_COMMENT):
                    id_ = value[len(ID_COMMENT):].strip()
            elif token.type == 'S_LINE':
                if id_ is None:
                    # plain M2 files have no ids; blocks are then paired by position
                    id_ = str(ordinal)
                original = AnnotatedSentence.from_surfaces(id_, value[1:].split())
            else:
                assert original is not None
                edit = _read_edit(value, original, get_token_position(token))
                if edit is not None:
                    lines[len(edits)] = token
                    edits.append(edit)

        assert original is not None and id_ is not None
        edits = _with_corrected_spans(edits)
        try:
            surfaces = apply_edits(original, edits)
            editset = EditSet(id_, original, AnnotatedSentence.from_surfaces(id_, surfaces),
                              tuple(edits))
        except ContractViolation as e:
            pos = get_token_position(lines[0]) if lines else None
            raise DataFormatError(str(e), pos)
        return editset


def _read_edit(line: str, original: AnnotatedSentence, pos: SrcPosition) -> Optional[Edit]:
    fields = line[2:].split(FIELD_SEP)
    if len(fields) < 3:
        raise DataFormatError("expected at least 3 '|||'-separated fields", pos)
    span, code, correction = fields[0].split(), fields[1].strip(), ' '.join(fields[2].split())

    if code == NOOP:
        log.warning('%r: skipping noop edit', pos)
        return None
    if len(span) != 2:
        raise DataFormatError("malformed span '{}'".format(fields[0]), pos)
    try:
        o_start, o_end = int(span[0]), int(span[1])
    except ValueError:
        raise DataFormatError("malformed span '{}'".format(fields[0]), pos)
    if not 0 <= o_start <= o_end <= len(original):
        raise DataFormatError('span {}-{} out of bounds for {} tokens'.format(
            o_start, o_end, len(original)), pos)

    form_text, sep, content_text = code.partition(':')
    try:
        form = FormCode(form_text)
        content = None if content_text == UNCLASSIFIED else ContentCode.parse(content_text)
    except ValueError:
        raise DataFormatError("unknown edit code '{}'".format(code), pos)
    if not sep:
        raise DataFormatError("unknown edit code '{}'".format(code), pos)

    c_len = len(correction.split())
    if o_start == o_end and not c_len:
        raise DataFormatError('edit neither removes nor adds tokens', pos)
    actual = FormCode.from_spans(o_start, o_end, 0, c_len)
    if form != actual:
        raise DataFormatError('form code {} does not fit span {}-{} with correction {!r}, '
                              'expected {}'.format(form, o_start, o_end, correction, actual), pos)
    # corrected spans are filled in once the whole block is known
    return Edit(o_start, o_end, 0, c_len, correction, content)


def _with_corrected_spans(edits: Sequence[Edit]) -> List[Edit]:
    '''Place each edit's correction in the corrected sentence.'''
    result = []
    shift = 0
    for edit in sorted(edits, key=lambda e: (e.o_start, e.o_end)):
        c_len = edit.c_end
        c_start = edit.o_start + shift
        result.append(Edit(edit.o_start, edit.o_end, c_start, c_start + c_len, edit.correction,
                           edit.content))
        shift += c_len - (edit.o_end - edit.o_start)
    return result


_parser: Optional[EditFileParser] = None


def read_edits(text: str, path: Optional[str] = None) -> List[EditSet]:
    '''Parse an edit file into edit sets, in file order.'''
    global _parser
    if _parser is None:
        _parser = EditFileParser()
    try:
        editsets = _parser.parse(text)
    except DataFormatError as e:
        raise e.with_path(path) if path else e
    log.info('Read %d sentence blocks%s', len(editsets), ' from ' + path if path else '')
    return editsets


def read_edit_file(path: str) -> List[EditSet]:
    with open(path, encoding='utf-8') as f:
        return read_edits(f.read(), path)


def _code(edit: Edit) -> str:
    content = edit.content.value if edit.content is not None else UNCLASSIFIED
    return '{}:{}'.format(edit.form.value, content)


def write_edits(editsets: Sequence[EditSet]) -> str:
    '''Render edit sets as an edit file, one block per set.'''
    out = []
    for editset in editsets:
        out.append(ID_COMMENT + editset.id + '\n')
        out.append('S ' + ' '.join(editset.original.surfaces) + '\n')
        for edit in editset.edits:
            fields = ('{} {}'.format(edit.o_start, edit.o_end), _code(edit), edit.correction)
            out.append('A ' + FIELD_SEP.join(fields + A_LINE_TAIL) + '\n')
        out.append('\n')
    return ''.join(out)


def write_edit_file(path: str, editsets: Sequence[EditSet]):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(write_edits(editsets))
    log.info('Wrote %d sentence blocks to %s', len(editsets), path)
