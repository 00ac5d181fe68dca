'''JSON and TSV renderings of score reports and corpus statistics.

JSON carries ratios in [0, 1] (null when undefined); TSV tables show percentages with two
decimals and '-' for undefined cells, the way results tables are usually printed.
'''

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from factum.score import CategoryScore, ScoreReport
from factum.stats import CorpusStats
from factum.types import Axis, ContentCode
from factum.utils import percent, to_float

JSON = 'json'
TSV = 'tsv'
FORMATS = (JSON, TSV)


def beta_label(beta: Fraction) -> str:
    '''0.5 for 1/2, 1 for 1; used in the F column header.'''
    if beta.denominator == 1:
        return str(beta.numerator)
    return '{:g}'.format(float(beta))


def _category_json(score: CategoryScore) -> Dict[str, Any]:
    return {
        'tp': score.counts.tp,
        'fp': score.counts.fp,
        'fn': score.counts.fn,
        'p': to_float(score.scores.precision),
        'r': to_float(score.scores.recall),
        'f': to_float(score.scores.f),
    }


def report_to_json(report: ScoreReport) -> str:
    data = {
        'axis': report.axis.value,
        'beta': float(report.beta),
        'categories': {label: _category_json(score) for label, score in report.categories.items()},
        'total': _category_json(report.total),
    }
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


def _category_row(label: str, score: CategoryScore) -> List[str]:
    c, s = score.counts, score.scores
    return [label, str(c.tp), str(c.fp), str(c.fn), percent(s.precision), percent(s.recall),
            percent(s.f)]


def report_to_tsv(report: ScoreReport) -> str:
    rows = [['category', 'TP', 'FP', 'FN', 'P', 'R', 'F' + beta_label(report.beta)]]
    rows += [_category_row(label, score) for label, score in report.categories.items()]
    # the total axis already has its single Total category
    if report.axis != Axis.Total:
        rows.append(_category_row('Total', report.total))
    return ''.join('\t'.join(row) + '\n' for row in rows)


def render_report(report: ScoreReport, fmt: str = JSON) -> str:
    return report_to_json(report) if fmt == JSON else report_to_tsv(report)


STATS_COLUMNS = [
    'corpus', 'system', 'items', 'error_rate', 'avg_len_original', 'avg_len_reference',
    'avg_len_corrected', 'bleu_origin_vs_reference', 'bleu_origin_vs_corrected',
]


def _stats_json(stats: CorpusStats) -> Dict[str, Any]:
    return {
        'corpus': stats.corpus,
        'system': stats.system,
        'items': stats.items,
        'error_rate': stats.error_rate,
        'avg_len_original': stats.lengths.original,
        'avg_len_reference': stats.lengths.reference,
        'avg_len_corrected': stats.lengths.corrected,
        'bleu_origin_vs_reference': stats.bleu_origin_vs_reference,
        'bleu_origin_vs_corrected': stats.bleu_origin_vs_corrected,
        'category_distribution': {code.value: share
                                  for code, share in stats.category_distribution.items()},
    }


def stats_to_json(groups: Sequence[CorpusStats]) -> str:
    return json.dumps([_stats_json(g) for g in groups], indent=2, ensure_ascii=False) + '\n'


def _fixed(value: Optional[float], digits: int) -> str:
    return '-' if value is None else '{:.{}f}'.format(value, digits)


def stats_to_tsv(groups: Sequence[CorpusStats]) -> str:
    header = STATS_COLUMNS + [code.value for code in ContentCode]
    rows = [header]
    for g in groups:
        row = [g.corpus, g.system, str(g.items), '{:.2f}'.format(g.error_rate),
               _fixed(g.lengths.original, 2), _fixed(g.lengths.reference, 2),
               _fixed(g.lengths.corrected, 2), _fixed(g.bleu_origin_vs_reference, 4),
               _fixed(g.bleu_origin_vs_corrected, 4)]
        # shares as percentages; codes that never occur are 0.00
        row += ['{:.2f}'.format(100 * g.category_distribution.get(code, 0.0))
                for code in ContentCode]
        rows.append(row)
    return ''.join('\t'.join(row) + '\n' for row in rows)


def render_stats(groups: Sequence[CorpusStats], fmt: str = JSON) -> str:
    return stats_to_json(groups) if fmt == JSON else stats_to_tsv(groups)
