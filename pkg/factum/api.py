'''The pipelines behind the command line: extraction, comparison, evaluation and statistics.

Everything here works on values already read from disk; `factum.cli` does the file handling.
'''

import logging
import multiprocessing
import os
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from factum.align import EditSet, edit_pair
from factum.annotate import heuristic_annotate
from factum.classify import classify_all
from factum.score import DEFAULT_BETA, ScoreReport, compare
from factum.stats import CorpusStats, StatsRow, corpus_stats
from factum.textmodel import AnnotatedSentence, DatasetItem, Field, read_conllu
from factum.types import Axis, DataFormatError, MismatchError, UnresolvedIdError

log = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')

# group name for items without a corpus or system field
UNNAMED_GROUP = '-'


class AnnotationIndex:
    '''Looks up the annotation of a dataset text by its sentence id `<item-id>.<field>`.

    An index either holds sentences read from CoNLL-U files or, in builtin mode, annotates the
    raw text of the item with the heuristic annotator.
    '''
    def __init__(self, sentences: Iterable[AnnotatedSentence] = (), builtin: bool = False):
        self.builtin = builtin
        self._sentences: Dict[str, AnnotatedSentence] = {}
        for sentence in sentences:
            self.add(sentence)

    @staticmethod
    def from_conllu_files(paths: Sequence[str]) -> 'AnnotationIndex':
        index = AnnotationIndex()
        for path in paths:
            for sentence in read_conllu(path):
                try:
                    index.add(sentence)
                except DataFormatError as e:
                    raise e.with_path(path)
        return index

    @staticmethod
    def heuristic() -> 'AnnotationIndex':
        log.warning('Annotating with the builtin heuristic annotator; results are test-grade')
        return AnnotationIndex(builtin=True)

    def add(self, sentence: AnnotatedSentence):
        if sentence.id in self._sentences:
            raise DataFormatError("duplicate annotation for sentence id '{}'".format(sentence.id))
        self._sentences[sentence.id] = sentence

    def __len__(self):
        return len(self._sentences)

    def __contains__(self, sentence_id: str):
        return sentence_id in self._sentences

    def get(self, sentence_id: str) -> AnnotatedSentence:
        try:
            return self._sentences[sentence_id]
        except KeyError:
            raise UnresolvedIdError(sentence_id)

    def resolve(self, item: DatasetItem, field: Field) -> AnnotatedSentence:
        '''The annotation of one text of `item`.'''
        sentence_id = field.sentence_id(item.id)
        if not self.builtin:
            return self.get(sentence_id)
        text = item.text(field)
        if text is None:
            raise UnresolvedIdError(sentence_id)
        return heuristic_annotate(text, sentence_id)


def default_jobs() -> int:
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], tasks: Sequence[T], jobs: Optional[int] = None) -> List[R]:
    '''Map `fn` over `tasks` in a process pool; results come back in task order.

    `fn` must be a module-level function so that it can be sent to the workers.
    '''
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(tasks) < 2:
        return [fn(task) for task in tasks]
    chunksize = max(1, len(tasks) // (jobs * 4))
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(fn, tasks, chunksize=chunksize)


@dataclass(frozen=True)
class ExtractTask:
    id: str
    original: AnnotatedSentence
    corrected: AnnotatedSentence
    classify: bool = True


def run_extract_task(task: ExtractTask) -> EditSet:
    '''Align, extract and (optionally) classify one sentence pair.'''
    editset = edit_pair(task.original, task.corrected, task.id)
    return classify_all(editset) if task.classify else editset


def filter_system(items: Sequence[DatasetItem], system: Optional[str]) -> List[DatasetItem]:
    if system is None:
        return list(items)
    selected = [item for item in items if item.system == system]
    log.info("Selected %d of %d items of system '%s'", len(selected), len(items), system)
    return selected


def _require_hypothesis(items: Sequence[DatasetItem]):
    for item in items:
        if item.hypothesis is None:
            raise DataFormatError("item '{}' has no hypothesis".format(item.id), field='hypothesis')


def extract(items: Sequence[DatasetItem], index: AnnotationIndex, target: Field = Field.Reference,
            classify: bool = True, jobs: Optional[int] = None) -> List[EditSet]:
    '''Edits from each item's original to its `target` correction, in item order.'''
    if target == Field.Hypothesis:
        _require_hypothesis(items)
    tasks = [ExtractTask(item.id, index.resolve(item, Field.Original), index.resolve(item, target),
                         classify)
             for item in items]
    editsets = parallel_map(run_extract_task, tasks, jobs)
    for editset in editsets:
        log.debug('%s: %d edits', editset.id, len(editset))
    log.info('Extracted %d edits from %d items', sum(len(e) for e in editsets), len(editsets))
    return editsets


def pair_editsets(hypotheses: Sequence[EditSet],
                  references: Sequence[EditSet]) -> List[Tuple[EditSet, EditSet]]:
    '''Pair hypothesis and reference blocks by sentence id, in reference order.'''
    by_id = {editset.id: editset for editset in hypotheses}
    pairs = []
    for ref in references:
        hyp = by_id.pop(ref.id, None)
        if hyp is None:
            raise MismatchError(ref.id, 'missing from the hypothesis edits')
        if hyp.original.surfaces != ref.original.surfaces:
            raise MismatchError(ref.id, 'original sentences differ')
        pairs.append((hyp, ref))
    if by_id:
        raise MismatchError(next(iter(by_id)), 'missing from the reference edits')
    return pairs


def compare_edits(hypotheses: Sequence[EditSet], references: Sequence[EditSet],
                  axis: Axis = Axis.Form, beta=DEFAULT_BETA) -> ScoreReport:
    '''Score hypothesis edit sets against reference edit sets.'''
    return compare(pair_editsets(hypotheses, references), axis, beta)


def evaluate(items: Sequence[DatasetItem], index: AnnotationIndex, axis: Axis = Axis.Form,
             beta=DEFAULT_BETA, jobs: Optional[int] = None) -> ScoreReport:
    '''Extract reference and hypothesis edits of each item, then compare them.'''
    _require_hypothesis(items)
    references = extract(items, index, Field.Reference, jobs=jobs)
    hypotheses = extract(items, index, Field.Hypothesis, jobs=jobs)
    return compare_edits(hypotheses, references, axis, beta)


def statistics(items: Sequence[DatasetItem], index: AnnotationIndex,
               jobs: Optional[int] = None) -> List[CorpusStats]:
    '''Corpus statistics per (corpus, system) group, then over all items.'''
    editsets = extract(items, index, Field.Reference, jobs=jobs)
    rows = []
    for item, editset in zip(items, editsets):
        summary = None
        if item.summary is not None:
            summary = tuple(index.resolve(item, Field.Summary).surfaces)
        rows.append(StatsRow(
            corpus=item.corpus or UNNAMED_GROUP,
            system=item.system or UNNAMED_GROUP,
            original=tuple(editset.original.surfaces),
            summary=summary,
            corrected=tuple(editset.corrected.surfaces),
            editset=editset,
        ))
    return corpus_stats(rows)
