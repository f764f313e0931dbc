# cli/tasks.py
import logging

from celery import shared_task

from groups.serializers import resolve_group
from semantics.serializers import resolve_model
from utils.constants import SYMMETRIC

from cli.services import run_suite as run_suite_now

logger = logging.getLogger(__name__)


@shared_task
def run_suite(suite, family=SYMMETRIC, group='c2', max_n=None, samples=None, seed=None, model=None):
    """Run a verification suite; arguments are JSON (group and model by name, path or dict)"""
    try:
        report = run_suite_now(
            suite,
            family_tag=family,
            group=resolve_group(group),
            max_n=max_n,
            samples=samples,
            seed=seed,
            model=resolve_model(model) if model is not None else None,
        )
    except Exception as e:
        logger.error(f"Suite {suite} aborted: {str(e)}")
        return {'suite': suite, 'passed': False, 'error': str(e)}
    return report.to_dict()
