import json

from model import VerificationReport


class Markdown:
    """Verification report as a markdown document, one table row per claim"""

    def __init__(self, include_timings: bool = False):
        self.include_timings = include_timings

    def format_entity(self, e, level=0):
        if isinstance(e, VerificationReport):
            return self.format_report(e)
        raise ValueError(f"Could not format {e}. Check it's class")

    def format_report(self, r: VerificationReport) -> str:
        lines = [f'# Verification report ({r.profile} profile)', '']
        lines += [f'- {status}: {count}' for status, count in r.totals.items()]
        header, rule = '| Claim | Anchor | Expected | Computed | Status |', '|---|---|---|---|---|'
        if self.include_timings:
            header, rule = header + ' Elapsed |', rule + '---|'
        lines += ['', header, rule]
        for c in sorted(r.records, key=lambda x: x.claim_id):
            status = c.status.value + (' (stretch)' if c.stretch else '')
            row = f'| `{c.claim_id}` | {self._cell(c.anchor)} | {self._cell(c.expected)} | ' \
                  f'{self._cell(c.computed)} | {status} |'
            if self.include_timings:
                row += f' {c.elapsed:.1f}s |'
            lines.append(row)
        return '\n'.join(lines) + '\n'

    @staticmethod
    def _cell(value) -> str:
        text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, ensure_ascii=False)
        return text.replace('|', '\\|')
