import json

import pytest

from custom_logging.custom_logger import UnitonLogger


@pytest.fixture
def file_logger(tmp_path):
    def _make(json_logging: bool) -> UnitonLogger:
        return UnitonLogger(
            name=f"uniton-test-{json_logging}",
            log_level="DEBUG",
            log_dir=str(tmp_path),
            max_file_size=1024 * 1024,
            backup_count=1,
            console_output=False,
            json_logging=json_logging,
            file_output=True,
        )

    return _make


def read_lines(path):
    return path.read_text(encoding="utf-8").splitlines()


def test_json_records_carry_extra_data(file_logger, tmp_path):
    logger = file_logger(True)
    logger.info("[TEST] solved", {"type": "2,1,0"})

    record = json.loads(read_lines(tmp_path / "uniton-test-true.log")[-1])
    assert record["level"] == "INFO"
    assert record["message"] == "[TEST] solved"
    assert record["extra"] == {"type": "2,1,0"}


def test_errors_go_to_separate_file(file_logger, tmp_path):
    logger = file_logger(False)
    logger.info("fine")
    logger.error("broken")

    assert len(read_lines(tmp_path / "uniton-test-false.log")) == 2
    errors = read_lines(tmp_path / "uniton-test-false_errors.log")
    assert len(errors) == 1
    assert "broken" in errors[0]


def test_timed_logs_performance(file_logger, tmp_path):
    logger = file_logger(True)
    with logger.timed("deform", m=4):
        pass

    record = json.loads(read_lines(tmp_path / "uniton-test-true.log")[-1])
    assert record["level"] == "DEBUG"
    assert record["extra"]["operation"] == "deform"
    assert record["extra"]["performance_log"] is True
    assert record["extra"]["m"] == 4
