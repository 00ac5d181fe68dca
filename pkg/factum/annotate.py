'''A small rule-based annotator for English summaries.

This is test-grade: closed lexicons decide most tags and everything else is a noun or a proper
noun. Real evaluations should feed annotations from an external tagger through CoNLL-U files;
the CLI only uses this annotator when asked to with `--annotator builtin`.
'''

import re
from typing import List

from nltk.stem import RegexpStemmer
from nltk.tokenize import RegexpTokenizer

from factum.textmodel import EMPTY, AnnotatedSentence, AnnotatedToken

# numbers, words with inner apostrophes (contractions stay whole), single punctuation marks
_tokenizer = RegexpTokenizer(r"\d+(?:[.,:]\d+)*|\w+(?:['’]\w+)*|[^\w\s]")

# plural -s (but not -ss), -ed, -ing; words shorter than 4 are left alone
_stemmer = RegexpStemmer(r'(?<!s)s$|ed$|ing$', min=4)

NUMERIC = re.compile(r'^[+-]?\d+(?:[.,:]\d+)*$')
SENTENCE_END = {'.', '!', '?'}
SYMBOLS = set('$%&+=@#*/\\<>^|~')

NUMBER_WORDS = {
    'zero', 'one', 'two', 'three', 'four', 'five', 'six', 'seven', 'eight', 'nine', 'ten',
    'eleven', 'twelve', 'fifteen', 'twenty', 'thirty', 'forty', 'fifty', 'hundred', 'thousand',
    'million', 'half', 'dozen',
}

NEGATION = {
    'not': 'PART', "n't": 'PART', 'never': 'ADV', 'no': 'DET', 'none': 'PRON',
    'neither': 'DET', 'nor': 'CCONJ', 'cannot': 'AUX',
}

MODALS = {'can', 'could', 'may', 'might', 'must', 'shall', 'should', 'will', 'would'}

# irregular forms and their lemmas
AUX_FORMS = {
    'am': 'be', 'is': 'be', 'are': 'be', 'was': 'be', 'were': 'be', 'be': 'be', 'been': 'be',
    'being': 'be',
    'have': 'have', 'has': 'have', 'had': 'have', 'having': 'have',
    'do': 'do', 'does': 'do', 'did': 'do',
}

VERB_FORMS = {
    'lend': 'lend', 'lent': 'lend', 'give': 'give', 'gives': 'give', 'gave': 'give',
    'given': 'give', 'go': 'go', 'goes': 'go', 'went': 'go', 'gone': 'go', 'come': 'come',
    'comes': 'come', 'came': 'come', 'get': 'get', 'gets': 'get', 'got': 'get', 'tell': 'tell',
    'tells': 'tell', 'told': 'tell', 'say': 'say', 'says': 'say', 'said': 'say', 'make': 'make',
    'makes': 'make', 'made': 'make', 'take': 'take', 'takes': 'take', 'took': 'take',
    'taken': 'take', 'buy': 'buy', 'buys': 'buy', 'bought': 'buy', 'meet': 'meet',
    'meets': 'meet', 'met': 'meet', 'see': 'see', 'sees': 'see', 'saw': 'see', 'seen': 'see',
    'know': 'know', 'knows': 'know', 'knew': 'know', 'think': 'think', 'thinks': 'think',
    'thought': 'think', 'send': 'send', 'sends': 'send', 'sent': 'send', 'leave': 'leave',
    'leaves': 'leave', 'left': 'leave', 'teach': 'teach', 'teaches': 'teach', 'taught': 'teach',
    'remind': 'remind', 'reminds': 'remind', 'reminded': 'remind', 'want': 'want',
    'wants': 'want', 'wanted': 'want', 'need': 'need', 'needs': 'need', 'needed': 'need',
    'call': 'call', 'calls': 'call', 'called': 'call', 'ask': 'ask', 'asks': 'ask',
    'asked': 'ask', 'help': 'help', 'helps': 'help', 'helped': 'help', 'pick': 'pick',
    'picks': 'pick', 'picked': 'pick', 'bring': 'bring', 'brings': 'bring', 'brought': 'bring',
    'pay': 'pay', 'pays': 'pay', 'paid': 'pay', 'agree': 'agree', 'agrees': 'agree',
    'agreed': 'agree', 'visit': 'visit', 'visits': 'visit', 'visited': 'visit',
}

PRONOUNS = {
    'i', 'me', 'my', 'mine', 'myself', 'you', 'your', 'yours', 'yourself', 'he', 'him', 'his',
    'himself', 'she', 'her', 'hers', 'herself', 'it', 'its', 'itself', 'we', 'us', 'our',
    'ours', 'ourselves', 'they', 'them', 'their', 'theirs', 'themselves', 'who', 'whom',
    'whose', 'what', 'which', 'someone', 'somebody', 'everyone', 'everybody', 'anyone',
    'anybody', 'nobody', 'something', 'everything', 'anything', 'nothing',
}

DETERMINERS = {
    'a', 'an', 'the', 'this', 'that', 'these', 'those', 'every', 'each', 'some', 'any', 'all',
    'both', 'either', 'another', 'such',
}

ADPOSITIONS = {
    'about', 'above', 'across', 'after', 'against', 'along', 'among', 'around', 'at', 'before',
    'behind', 'below', 'beneath', 'beside', 'between', 'beyond', 'by', 'during', 'except',
    'for', 'from', 'in', 'inside', 'into', 'near', 'of', 'off', 'on', 'onto', 'outside', 'over',
    'past', 'through', 'throughout', 'till', 'to', 'toward', 'towards', 'under', 'until',
    'upon', 'via', 'with', 'within', 'without',
}

COORD_CONJUNCTIONS = {'and', 'or', 'but', 'yet', 'so'}

SUBORD_CONJUNCTIONS = {
    'because', 'although', 'though', 'if', 'unless', 'whereas', 'whether', 'since', 'while',
    'as', 'than', 'once',
}

INTERJECTIONS = {'yes', 'yeah', 'ok', 'okay', 'hi', 'hello', 'oh', 'wow', 'bye', 'please'}

ADJECTIVES = {
    'late', 'early', 'happy', 'proud', 'sad', 'angry', 'new', 'old', 'good', 'bad', 'great',
    'big', 'small', 'ready', 'busy', 'sick', 'tired', 'glad', 'sorry', 'available',
    'important', 'free', 'last', 'next', 'first', 'upset', 'excited', 'worried', 'hungry',
    'nice', 'fine', 'sure', 'able', 'cheap', 'expensive',
}

ADVERBS = {
    'also', 'too', 'very', 'really', 'just', 'still', 'already', 'soon', 'later', 'now',
    'then', 'today', 'tomorrow', 'yesterday', 'tonight', 'again', 'here', 'there', 'always',
    'often', 'sometimes', 'maybe', 'perhaps', 'probably', 'together', 'home', 'when', 'where',
    'why', 'how', 'only', 'even', 'back', 'out', 'up', 'down', 'away',
}

# checked in this order; earlier lexicons win for words listed twice
CLOSED_LEXICONS = (
    (PRONOUNS, 'PRON'),
    (DETERMINERS, 'DET'),
    (ADPOSITIONS, 'ADP'),
    (COORD_CONJUNCTIONS, 'CCONJ'),
    (SUBORD_CONJUNCTIONS, 'SCONJ'),
    (INTERJECTIONS, 'INTJ'),
    (ADJECTIVES, 'ADJ'),
    (ADVERBS, 'ADV'),
)


def tokenize(raw: str) -> List[str]:
    '''Split raw text into token surfaces.'''
    return _tokenizer.tokenize(raw)


def is_numeric(surface: str) -> bool:
    return bool(NUMERIC.match(surface))


def _lexicon_tag(lower: str) -> str:
    '''The tag a closed lexicon gives `lower`, or '' if none does.'''
    if lower in NEGATION:
        return NEGATION[lower]
    if lower in MODALS or lower in AUX_FORMS or lower.endswith("n't"):
        return 'AUX'
    for lexicon, tag in CLOSED_LEXICONS:
        if lower in lexicon:
            return tag
    if lower in VERB_FORMS:
        return 'VERB'
    if lower in NUMBER_WORDS:
        return 'NUM'
    return ''


def _tag(surface: str, sentence_initial: bool) -> str:
    if all(not ch.isalnum() for ch in surface):
        return 'SYM' if surface in SYMBOLS else 'PUNCT'
    if is_numeric(surface):
        return 'NUM'
    lower = surface.lower().replace('’', "'")
    capitalized = surface[0].isupper()
    if capitalized and not sentence_initial and surface != 'I':
        return 'PROPN'
    tag = _lexicon_tag(lower)
    if tag:
        return tag
    return 'PROPN' if capitalized else 'NOUN'


def _lemma(surface: str, upos: str) -> str:
    lower = surface.lower()
    if lower in AUX_FORMS:
        return AUX_FORMS[lower]
    if lower in VERB_FORMS:
        return VERB_FORMS[lower]
    if upos in ('NOUN', 'VERB'):
        stem = _stemmer.stem(lower)
        # '_' is reserved for the CoNLL-U empty lemma
        return stem if stem != EMPTY else lower
    return lower


def heuristic_annotate(raw: str, id_: str = '') -> AnnotatedSentence:
    '''Tokenize, tag and lemmatize `raw` with the builtin lexicons.'''
    tokens: List[AnnotatedToken] = []
    previous = None
    for index, surface in enumerate(tokenize(raw)):
        upos = _tag(surface, previous is None or previous in SENTENCE_END)
        tokens.append(AnnotatedToken(index, surface, _lemma(surface, upos), upos))
        previous = surface
    return AnnotatedSentence(id_, tuple(tokens))

