from .config_io import emit_config, parse_config
from .runner import render_report, run_report, write_report

__all__ = ["parse_config", "emit_config", "run_report", "render_report", "write_report"]
