from .graph import build_suite_graph, run_suite

__all__ = ["build_suite_graph", "run_suite"]
