import logging

from unproj.io_utils import prepare_run_directories
from unproj.logging_utils import PACKAGE_LOGGER, build_logger, release_handlers


def test_module_loggers_reach_the_run_log(tmp_path):
    paths = prepare_run_directories("l1", "verify-structural", tmp_path)
    run_logger = build_logger(paths)
    build_logger(paths)
    package = logging.getLogger(PACKAGE_LOGGER)
    assert len(package.handlers) == 2
    assert run_logger.name == "unproj.run.l1"
    logging.getLogger("unproj.groebner").debug("basis of 3 elements")
    run_logger.info("run started")
    release_handlers()
    assert package.handlers == []
    text = paths.log_path.read_text(encoding="utf-8")
    assert "unproj.groebner | basis of 3 elements" in text
    assert "unproj.run.l1 | run started" in text


def test_summary_path_uses_a_safe_step_name(tmp_path):
    paths = prepare_run_directories("r 1", "verify fixed/locus", tmp_path)
    assert paths.base_dir == tmp_path / "r-1"
    assert paths.summary_path == tmp_path / "r-1" / "verify-fixed-locus.json"
