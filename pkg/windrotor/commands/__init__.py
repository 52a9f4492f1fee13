from . import evaluate, polar, site_rank, sweep

__all__ = ["evaluate", "polar", "site_rank", "sweep"]
