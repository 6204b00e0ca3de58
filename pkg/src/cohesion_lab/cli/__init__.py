"""Scenario files, the batch runner and its reports."""
from .checks import CHECK_FUNCTIONS, Config
from .report import load_schema, to_json, to_json_obj, to_text
from .runner import CheckResult, Report, run
from .scenario import (CHECKS, ParseError, Scenario, UnresolvedName, load_scenario,
                       parse_scenario)

__all__ = ["CHECK_FUNCTIONS", "CHECKS", "CheckResult", "Config", "ParseError", "Report",
           "Scenario", "UnresolvedName", "load_scenario", "load_schema", "parse_scenario",
           "run", "to_json", "to_json_obj", "to_text"]
