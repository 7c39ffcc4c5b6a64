"""A scikit-learn style wrapper around the RSHT engine.

RshtSimplifier follows the fit/transform protocol so it can sit inside
sklearn pipelines and parameter searches; the underlying engine is the
plain-function API in rsht.engine.
"""

from __future__ import annotations

import random

from sklearn.base import BaseEstimator, TransformerMixin

from .complexes import Complex
from .engine import RshtConfig, rsht_run


def _as_complex(X) -> Complex:
    if isinstance(X, Complex):
        return X.clone()
    return Complex.from_facets(list(X))


class RshtSimplifier(TransformerMixin, BaseEstimator):
    """Simplify a simplicial complex by random simple-homotopy moves.

    Parameters
    ----------
    max_step : int, default=10
        Budget of (S) subdivision rounds before the run gives up.
    total_expansion_cap : int, default=10000
        Safety cap on the total number of (E) and (S) moves.
    seed : int, default=0
        Seed for the run's random stream.
    policy : str, default="global"
        Expansion-candidate selection policy, "global" or "local".

    Attributes
    ----------
    report_ : RunReport
        Statistics of the last transform (expansions, collapses, final
        f-vector, whether the input reduced to a point).
    """

    def __init__(self, max_step=10, total_expansion_cap=10_000, seed=0,
                 policy="global"):
        self.max_step = max_step
        self.total_expansion_cap = total_expansion_cap
        self.seed = seed
        self.policy = policy

    def _config(self) -> RshtConfig:
        return RshtConfig(max_step=self.max_step,
                          total_expansion_cap=self.total_expansion_cap,
                          seed=self.seed, policy=self.policy)

    def fit(self, X, y=None):
        """Validate parameters against the input complex."""
        self._config()
        _as_complex(X)
        return self

    def transform(self, X) -> Complex:
        """Run RSHT on a copy of X and return the simplified complex."""
        cfg = self._config()
        K = _as_complex(X)
        self.report_ = rsht_run(K, cfg, random.Random(cfg.seed))
        return K
