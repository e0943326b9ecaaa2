from .base import IncrementalClassifier
from .naive_bayes import GaussianNaiveBayes
from .hoeffding_tree import HoeffdingTreeClassifier, hoeffding_bound
from .bagging import OnlineBaggingEnsemble

__all__ = [
    "IncrementalClassifier",
    "GaussianNaiveBayes",
    "HoeffdingTreeClassifier",
    "OnlineBaggingEnsemble",
    "hoeffding_bound",
]
