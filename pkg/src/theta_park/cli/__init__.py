"""Command-line front end."""
from .app import RunConfig, build_parser, cmd_conjecture, cmd_enumerate, cmd_expand, cmd_render, cmd_verify, main
from .suites import SUITES, SuiteResult, run_suite, run_suites

__all__ = [
    "RunConfig", "build_parser", "cmd_conjecture", "cmd_enumerate", "cmd_expand", "cmd_render",
    "cmd_verify", "main", "SUITES", "SuiteResult", "run_suite", "run_suites",
]
