"""scikit-learn classifier wrapping the minimum-removal separator."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import exact_points
from .dual import solve_dual
from .geometry import Point, Side, Sign
from .naive import solve_naive
from .oracle import solve_subsets
from .solution import Orientation
from .verify import verify_solution

_SOLVERS = {"naive": solve_naive, "dual": solve_dual, "oracle": solve_subsets}


class DisjointHullsClassifier(ClassifierMixin, BaseEstimator):
    """Linear classifier that drops the fewest training points so both classes become separable.

    The fitted line strictly separates the kept points of the two classes.
    ``removed_indices_`` lists the training rows that had to be dropped, which
    in a sensor setting are the candidates for faulty reports.

    Parameters
    ----------
    algo : {"dual", "naive", "oracle"}, default="dual"
        Solver used by :meth:`fit`.
    certify : bool, default=False
        Re-check the fitted line independently and raise if it is invalid.
    """

    def __init__(self, algo: str = "dual", certify: bool = False):
        self.algo = algo
        self.certify = certify

    def fit(self, X, y):
        coords = exact_points(X)
        y = np.asarray(y)
        if y.ndim != 1 or len(y) != len(coords):
            raise ValueError(f"y must be 1-D with {len(coords)} entries")
        classes = np.unique(y)
        if len(classes) != 2:
            raise ValueError(f"exactly two classes are required, got {len(classes)}")
        if self.algo not in _SOLVERS:
            raise ValueError(f"algo must be one of {sorted(_SOLVERS)}, got {self.algo!r}")
        self.classes_ = classes
        self.n_features_in_ = 2
        P, M = [], []
        for i, ((px, py), label) in enumerate(zip(coords, y)):
            plus = label == classes[1]
            (P if plus else M).append(Point(px, py, i, Sign.PLUS if plus else Sign.MINUS))
        sol = _SOLVERS[self.algo](P, M)
        if self.certify:
            report = verify_solution(P, M, sol)
            if not report.valid:
                raise RuntimeError(f"fitted separator failed checks: {report.failed()}")
        self.solution_ = sol
        self.line_ = sol.line
        self.orientation_ = sol.orientation
        self.k_min_ = sol.k_min
        self.removed_indices_ = np.array(sol.removed_ids, dtype=int)
        return self

    def decision_function(self, X):
        """Signed line value, positive on the side of ``classes_[1]``.

        Computed exactly and returned as floats.
        """
        check_is_fitted(self, "line_")
        sign = 1 if self.orientation_ is Orientation.PLUS_ABOVE else -1
        out = []
        for x, y in exact_points(X):
            side = self.line_.side(Point(x, y))
            v = abs(self.line_.evaluate(Point(x, y)))
            out.append(float(sign * int(side) * v))
        return np.array(out, dtype=float)

    def predict(self, X):
        scores = self.decision_function(X)
        return np.where(scores > 0, self.classes_[1], self.classes_[0])

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.allow_nan = False
        return tags
