import collections.abc

from model import (ClaimRecord, ConditionReport, CrResult, FamilyInstance, Graph, JoinDecision, OnePlanarWitness,
                   Verdict, VerificationReport)


class HumanReadable:
    level_fill: str

    def __init__(self, level_fill='  ', *args, **kwargs):
        super(HumanReadable, self).__init__(*args, **kwargs)
        self.level_fill = level_fill

    def format_entity(self, e, level=0):
        if isinstance(e, Graph):
            return self.format_graph(e, level)
        elif isinstance(e, Verdict):
            return self.format_verdict(e, level)
        elif isinstance(e, OnePlanarWitness):
            return self.format_witness(e, level)
        elif isinstance(e, CrResult):
            return self.format_cr_result(e, level)
        elif isinstance(e, JoinDecision):
            return self.format_join_decision(e, level)
        elif isinstance(e, ConditionReport):
            return self.format_condition(e, level)
        elif isinstance(e, FamilyInstance):
            return self.format_family_instance(e, level)
        elif isinstance(e, VerificationReport):
            return self.format_report(e, level)
        elif isinstance(e, ClaimRecord):
            return self.format_claim(e, level)
        elif isinstance(e, collections.abc.Iterable):
            return self.format_iterable(e, level)
        else:
            raise ValueError(f"Could not format {e}. Check it's class")

    def format_graph(self, g, level=0):
        edges = ' '.join(f'{u}-{v}' for u, v in g.edges)
        return self._format_lines([f'Vertices: {g.vertex_count}',
                                   f'Edges ({g.edge_count}): {edges}'], level)

    def format_verdict(self, v, level=0):
        lines = [f'Answer: {v.answer.value}']
        if v.refutation is not None:
            detail = f' ({v.refutation.detail})' if v.refutation.detail else ''
            lines.append(f'Refutation: {v.refutation.kind.value}{detail}')
        lines.append(f'Nodes explored: {v.stats.nodes}')
        res = self._format_lines(lines, level)
        if v.witness is not None:
            res += '\n' + self._format_lines(['Witness:'], level) + '\n'
            res += self.format_witness(v.witness, level + 1)
        return res

    def format_witness(self, w, level=0):
        lines = [f'Crossings: {w.crossing_count}']
        lines += [f'{e[0]}-{e[1]} x {f[0]}-{f[1]}' for e, f in w.plan.pairs]
        return self._format_lines(lines, level)

    def format_cr_result(self, r, level=0):
        if r.value is not None:
            lines = [f'Crossing number: {r.value}']
        else:
            upper = '∞' if r.upper_bound is None else r.upper_bound
            lines = [f'Crossing number in [{r.lower_bound}, {upper}]']
        lines.append(f'Nodes explored: {r.stats.nodes}')
        if r.witness is not None:
            lines += [f'{e[0]}-{e[1]} x {f[0]}-{f[1]}' for e, f in r.witness.pairs]
        return self._format_lines(lines, level)

    def format_join_decision(self, d, level=0):
        reason = d.reason.kind.value + (f' {d.reason.name}' if d.reason.name else '')
        res = self._format_lines([f'Answer: {d.answer.value}', f'Reason: {reason}'], level)
        if d.conditions:
            res += '\n' + self._format_lines(['Conditions:'], level) + '\n'
            res += '\n'.join(self.format_condition(c, level + 1) for c in d.conditions)
        if d.witness is not None:
            res += '\n' + self._format_lines(['Witness:'], level) + '\n'
            res += self.format_witness(d.witness, level + 1)
        return res

    def format_condition(self, c, level=0):
        return self._format_lines([f'{c.name}: {"holds" if c.holds else "violated"}'], level)

    def format_family_instance(self, f, level=0):
        res = self._format_lines([f'Name: {f.name}', f'Provenance: {f.provenance}'], level) + '\n'
        res += self.format_graph(f.graph, level) + '\n'
        res += self._format_lines(['Expected:'], level) + '\n'
        res += self._format_lines([f'{p.kind}{" " + p.factor if p.factor else ""}: {p.value}'
                                   for p in f.expected_properties], level + 1)
        return res

    def format_report(self, r, level=0):
        totals = ', '.join(f'{k}: {v}' for k, v in r.totals.items())
        res = self._format_lines([f'Profile: {r.profile}', f'Totals: {totals}'], level) + '\n'
        res += '\n'.join(self.format_claim(c, level + 1) for c in r.records)
        return res

    def format_claim(self, c, level=0):
        stretch = ' (stretch)' if c.stretch else ''
        return self._format_lines([f'[{c.status.value}] {c.claim_id}{stretch}: computed {c.computed}'], level)

    def format_iterable(self, iterable, level=0):
        return '\n\n'.join([self.format_entity(e, level) for e in iterable])

    def _format_lines(self, lines, level):
        return '\n'.join(map(lambda x: self.level_fill * level + x, lines))
