# coding=utf-8
"""Logging traits for verifiers.

Contents
--------

:ReportLoggingSuite:
    A trait that logs one verdict line per checked instance.
:CounterexampleLoggingSuite:
    A trait that logs the trees of every failed instance as JSON.

"""

import json
import logging

from . import base
from .export import tree_to_dict


# pylint: disable=abstract-method
class ReportLoggingSuite(base.Verifier):
    """A trait that logs the verdict of each instance.

    Enable report logging by mixing this trait into your verifier and setting
    ``log_report`` to true in the ``config`` object. Lines are written to any
    handlers bound to ``hiwalks.report`` in the form::

        LEMMA <name> instance=<tuple> verdict=<pass|fail>

    If the ``report_file``/``--report-file`` option is set, logging is
    automatically enabled and a ``FileHandler`` created.
    """

    def __init__(self, config={}):
        super(ReportLoggingSuite, self).__init__(config)

        self.log_report = self.config.setdefault("log_report", True)
        self.report_logger = logging.getLogger("hiwalks.report")
        self.report_logger.setLevel(logging.INFO)
        self.report_logger.addHandler(logging.NullHandler())

        if "report_file" in self.config:
            self.log_report = True
            fhreport = logging.FileHandler(self.config["report_file"])
            self.report_logger.addHandler(fhreport)

    @classmethod
    def arg_parser(cls):
        parser = super(ReportLoggingSuite, cls).arg_parser()
        parser.add_argument("--report-file", "-rf",
                            help="Path to the verdict log, if any")
        return parser

    def post_check(self, result):
        super(ReportLoggingSuite, self).post_check(result)

        if self.log_report:
            self.report_logger.info("LEMMA %s instance=%s verdict=%s",
                                    result.instance.lemma,
                                    self.instance_str(result.instance),
                                    result.verdict)


class CounterexampleLoggingSuite(base.Verifier):
    """A trait that logs the trees behind each failure.

    Every failed instance is written to ``hiwalks.counterexamples`` as one
    JSON object holding the lemma, the instance, and for each failure its
    message and the trees it names, dumped with ``export.tree_to_dict``.

    If the ``counterexample_file``/``--counterexample-file`` option is set,
    logging is automatically enabled and a ``FileHandler`` created.
    """

    def __init__(self, config={}):
        super(CounterexampleLoggingSuite, self).__init__(config)
        self.log_counterexamples = self.config.setdefault(
            "log_counterexamples", False)
        self.counterexample_logger = logging.getLogger(
            "hiwalks.counterexamples")
        self.counterexample_logger.setLevel(logging.INFO)
        self.counterexample_logger.addHandler(logging.NullHandler())

        if "counterexample_file" in self.config:
            self.log_counterexamples = True
            fhcex = logging.FileHandler(self.config["counterexample_file"])
            self.counterexample_logger.addHandler(fhcex)

    @classmethod
    def arg_parser(cls):
        parser = super(CounterexampleLoggingSuite, cls).arg_parser()
        parser.add_argument("--counterexample-file", "-cf",
                            help="Path to a JSON log of failing trees")
        return parser

    def post_check(self, result):
        super(CounterexampleLoggingSuite, self).post_check(result)

        if self.log_counterexamples and not result.passed:
            self.log_counterexample(result)

    def log_counterexample(self, result):
        """Write the failures of one result to the logger."""
        record = {
            "id": str(self.id),
            "lemma": result.instance.lemma,
            "instance": self.instance_str(result.instance),
            "failures": [{
                "message": failure.message,
                "trees": dict((name, tree_to_dict(tree))
                              for name, tree in failure.trees.items()),
            } for failure in result.failures],
        }
        self.counterexample_logger.info("%s", json.dumps(record,
                                                         sort_keys=True))
