import json
import tempfile
from pathlib import Path
from unittest import TestCase

from model.report import ClaimRecord, ClaimStatus, VerificationReport
from model.test_common import async_test
from onejoin.config import load_config
from onejoin.expressions import normalize
from onejoin.harness import VerificationHarness, write_report
from output_formatters import Markdown


class TestHarness(TestCase):
    def setUp(self):
        self.config = load_config('quick')
        self.config['workers'] = 1

    def test_claim_selection(self):
        harness = VerificationHarness(self.config)
        self.assertEqual([c.claim_id for c in harness.claims(['join-C4+C4'])], ['join-C4+C4'])
        self.assertTrue(all(c.claim_id.startswith('theorem-') for c in harness.claims(['theorem-'])))

    @async_test
    async def test_run_and_write(self):
        harness = VerificationHarness(self.config)
        report = await harness.run(['table1-predicate', 'join-C4+C4'])
        self.assertEqual([r.claim_id for r in report.records], ['join-C4+C4', 'table1-predicate'])
        self.assertTrue(all(r.status is ClaimStatus.PASS for r in report.records))
        self.assertFalse(report.failed)

        with tempfile.TemporaryDirectory() as tmp:
            json_path, md_path = await write_report(report, Path(tmp) / 'out', Markdown().format_entity(report))
            saved = json.loads(json_path.read_text())
            self.assertEqual(saved['profile'], 'quick')
            self.assertEqual(saved['summary'], {'pass': 2, 'fail': 0, 'inconclusive': 0})
            self.assertNotIn('elapsed', saved['claims'][0])
            self.assertIn('`table1-predicate`', md_path.read_text())

    @async_test
    async def test_report_with_inconclusive_and_failing_claims(self):
        claim_id = f'lemma-{normalize("(C3∪C3)+C3")}'
        self.config['budgets']['claims'] = {**(self.config['budgets'].get('claims') or {}), claim_id: {'max_nodes': 1}}
        report = await VerificationHarness(self.config).run([claim_id])
        self.assertEqual([r.status for r in report.records], [ClaimStatus.INCONCLUSIVE])
        self.assertFalse(report.failed)

        failing = ClaimRecord('cr-K_{5,3}', 'cr(K_{5,3}) = 4', 4, [3, None], ClaimStatus.FAIL, 1.5)
        report = VerificationReport(report.profile, report.records + (failing,))
        self.assertTrue(report.failed)
        with tempfile.TemporaryDirectory() as tmp:
            json_path, md_path = await write_report(report, Path(tmp), Markdown().format_entity(report))
            saved = json.loads(json_path.read_text())
            self.assertEqual(saved['summary'], {'pass': 0, 'fail': 1, 'inconclusive': 1})
            self.assertEqual([c['status'] for c in saved['claims']], ['fail', 'inconclusive'])
            self.assertIn('`cr-K_{5,3}`', md_path.read_text())
