'''Data types shared across factum: codes, positions and errors.
'''

from enum import Enum
from typing import Optional


class SrcPosition:
    '''A position in an input file; uses 1-based index.'''
    line: int
    column: int
    __slots__ = ['line', 'column']

    def __init__(self, line: int, column: int = 1):
        self.line = line
        self.column = column

    def __repr__(self):
        return '{}:{}'.format(self.line, self.column)

    def __str__(self):
        return 'SrcPosition({}, {})'.format(self.line, self.column)

    def __eq__(self, other):
        if not isinstance(other, SrcPosition):
            return NotImplemented
        return self.line == other.line and self.column == other.column

    def __hash__(self):
        return hash((self.line, self.column))


class FormCode(Enum):
    '''Form-based category: the operation shape of an edit.'''
    Missing = 'M'
    Replacement = 'R'
    Unnecessary = 'U'

    def __str__(self):
        return self.value

    @staticmethod
    def from_spans(o_start: int, o_end: int, c_start: int, c_end: int) -> 'FormCode':
        if o_start == o_end:
            return FormCode.Missing
        if c_start == c_end:
            return FormCode.Unnecessary
        return FormCode.Replacement


class ContentCode(Enum):
    '''Content-based category: the linguistic nature of the corrected error.

    Declaration order is the order of report rows.
    '''
    EntObj = 'Ent:ObjE'
    EntAttr = 'Ent:AttrE'
    PredMod = 'Pred:ModE'
    PredTens = 'Pred:TensE'
    PredNeg = 'Pred:NegE'
    PredVerb = 'Pred:VerbE'
    Circ = 'CircE'
    Coref = 'CorefE'
    Link = 'LinkE'
    Num = 'NumE'
    Oth = 'OthE'

    def __str__(self):
        return self.value

    @property
    def short(self) -> str:
        '''The code without its trailing 'E', as used in combined codes (Pred:NegE -> Pred:Neg).'''
        return self.value[:-1]

    @staticmethod
    def parse(text: str) -> 'ContentCode':
        '''Accept a full (Ent:ObjE) or short (Ent:Obj) code.'''
        for code in ContentCode:
            if text in (code.value, code.short):
                return code
        raise ValueError("unknown content code '{}'".format(text))


# Written in place of a content code for edits that were not classified
UNCLASSIFIED = 'NA'


class CombinedCode:
    '''A form code and a content code joined, rendered like R:Pred:Neg.'''
    __slots__ = ['form', 'content']

    def __init__(self, form: FormCode, content: ContentCode):
        self.form = form
        self.content = content

    def __str__(self):
        return '{}:{}'.format(self.form.value, self.content.short)

    def __repr__(self):
        return 'CombinedCode({})'.format(self)

    def __eq__(self, other):
        if not isinstance(other, CombinedCode):
            return NotImplemented
        return self.form == other.form and self.content == other.content

    def __hash__(self):
        return hash((self.form, self.content))

    @staticmethod
    def parse(text: str) -> 'CombinedCode':
        form, sep, content = text.partition(':')
        if not sep:
            raise ValueError("malformed combined code '{}'".format(text))
        return CombinedCode(FormCode(form), ContentCode.parse(content))

    @staticmethod
    def all_codes():
        '''All 33 combined codes, form-major.'''
        return [CombinedCode(form, content) for form in FormCode for content in ContentCode]


class Axis(Enum):
    '''Which code an edit is counted under when scoring.'''
    Form = 'form'
    Content = 'content'
    Combined = 'combined'
    Total = 'total'

    def __str__(self):
        return self.value


class FactumError(Exception):
    pass


class DataFormatError(FactumError):
    '''Input that does not follow one of the accepted file formats.'''
    def __init__(self, message: str, pos: Optional[SrcPosition] = None, path: Optional[str] = None,
                 field: Optional[str] = None):
        self.message = message
        self.pos = pos
        self.path = path
        self.field = field
        super().__init__(str(self))

    def __str__(self):
        prefix = ''
        if self.path:
            prefix += self.path + ':'
        if self.pos is not None:
            prefix += '{}:{}:'.format(self.pos.line, self.pos.column)
        return (prefix + ' ' + self.message) if prefix else self.message

    def with_path(self, path: str) -> 'DataFormatError':
        self.path = path
        self.args = (str(self),)
        return self


class UnresolvedIdError(DataFormatError):
    '''A sentence id with no annotation behind it.'''
    def __init__(self, id_: str):
        super().__init__("no annotation for sentence id '{}'".format(id_))
        self.id = id_


class MismatchError(DataFormatError):
    '''Hypothesis and reference edit files disagree on a sentence block.'''
    def __init__(self, id_: str, message: str):
        super().__init__("sentence '{}': {}".format(id_, message))
        self.id = id_


class ContractViolation(FactumError, ValueError):
    '''A caller broke a documented precondition.'''
    pass
