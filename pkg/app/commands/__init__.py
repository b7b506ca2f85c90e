from . import alpha, explore, igusa, oracle, suite, verify

__all__ = [
    'alpha',
    'explore',
    'igusa',
    'oracle',
    'suite',
    'verify',
]
