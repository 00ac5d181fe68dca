import os
import random
from typing import Sequence, Tuple

from factum.textmodel import AnnotatedSentence, AnnotatedToken

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def make_token(index: int, word: str) -> AnnotatedToken:
    '''Build a token from 'surface/UPOS' or 'surface/UPOS/lemma'.'''
    parts = word.split('/')
    surface, upos = parts[0], parts[1]
    lemma = parts[2] if len(parts) > 2 else surface.lower()
    return AnnotatedToken(index, surface, lemma, upos)


def make_sentence(words: str, id_: str = 's') -> AnnotatedSentence:
    '''Build a sentence from space-separated 'surface/UPOS[/lemma]' items.'''
    return AnnotatedSentence(id_, tuple(make_token(i, w) for i, w in enumerate(words.split())))


def from_tokens(tokens: Sequence[Tuple[str, str, str]], id_: str = 's') -> AnnotatedSentence:
    '''Build a sentence from (surface, upos, lemma) triples.'''
    return AnnotatedSentence(id_, tuple(AnnotatedToken(i, s, l, u)
                                        for i, (s, u, l) in enumerate(tokens)))


# words with overlapping lemmas, tags and spellings; every kind of operation shows up
VOCABULARY = [
    ('Laura', 'PROPN', 'laura'),
    ('Paul', 'PROPN', 'paul'),
    ('is', 'AUX', 'be'),
    ('was', 'AUX', 'be'),
    ('late', 'ADJ', 'late'),
    ('not', 'PART', 'not'),
    ('15', 'NUM', '15'),
    ('.', 'PUNCT', '.'),
    ('laura', 'NOUN', 'laura'),
    ('gave', 'VERB', 'give'),
]


def random_pair(rng: random.Random, vocabulary=VOCABULARY, max_len: int = 8
                ) -> Tuple[AnnotatedSentence, AnnotatedSentence]:
    '''A random original and a correction made by randomly mutating it.'''
    original = [rng.choice(vocabulary) for _ in range(rng.randint(0, max_len))]
    if rng.random() < 0.2:
        corrected = [rng.choice(vocabulary) for _ in range(rng.randint(0, max_len))]
    else:
        corrected = list(original)
        for _ in range(rng.randint(0, 3)):
            op = rng.choice(['sub', 'ins', 'del', 'swap'])
            pos = rng.randint(0, max(len(corrected) - 1, 0))
            if op == 'ins' or not corrected:
                corrected.insert(pos, rng.choice(vocabulary))
            elif op == 'sub':
                corrected[pos] = rng.choice(vocabulary)
            elif op == 'del':
                del corrected[pos]
            elif pos + 1 < len(corrected):
                corrected[pos], corrected[pos + 1] = corrected[pos + 1], corrected[pos]
    return from_tokens(original, 'o'), from_tokens(corrected, 'c')
