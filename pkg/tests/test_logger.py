# tests/test_logger.py
import json
import logging

from src.utils.logger import ComputationLogger, JsonFormatter


def test_json_formatter_keeps_extra_fields():
    record = logging.makeLogRecord({
        'name': "gt", 'levelname': "INFO", 'msg': "bracket done", 'suite': "jacobi", 'cases': 3,
    })
    data = json.loads(JsonFormatter().format(record))
    assert data['message'] == "bracket done"
    assert (data['suite'], data['cases']) == ("jacobi", 3)
    assert 'msg' not in data


def test_crosscheck_failures_log_as_error(caplog):
    with caplog.at_level(logging.DEBUG, logger="gt.test"):
        ComputationLogger("gt.test").log_crosscheck("bracket", 10, 2)
    record = caplog.records[-1]
    assert record.levelno == logging.ERROR
    assert (record.event, record.failures) == ("crosscheck", 2)


def test_genericity_event(caplog):
    with caplog.at_level(logging.WARNING, logger="gt.test"):
        ComputationLogger("gt.test").log_genericity("vertex on cut ray", {'ray': 1})
    record = caplog.records[-1]
    assert record.feature == "vertex on cut ray"
    assert record.detail == {'ray': 1}
