# utils/decorators.py
import functools
import logging
import time


def logged_suite(func):
    """Log start, duration and outcome of a function returning a CheckReport"""
    logger = logging.getLogger(func.__module__)

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        started = time.perf_counter()
        logger.info(f"Running {func.__name__}")
        report = func(*args, **kwargs)
        elapsed = time.perf_counter() - started
        if report.passed:
            logger.info(f"{report.suite}: {report.checked} cases passed in {elapsed:.2f}s")
        else:
            logger.warning(
                f"{report.suite}: {len(report.failures)} of {report.checked} cases failed; "
                f"first: {report.first_failure}"
            )
        return report

    return wrapper
