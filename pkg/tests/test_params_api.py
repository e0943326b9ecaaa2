import pytest

from streamdcs import (
    DesddClassifier,
    DynseClassifier,
    GaussianNaiveBayes,
    HoeffdingTreeClassifier,
    MCB,
    MdeClassifier,
)
from streamdcs.cli import main


class TestGetSetParams:
    def test_learner_params_round_trip(self):
        ht = HoeffdingTreeClassifier(grace_period=77)
        params = ht.get_params()
        assert params["grace_period"] == 77
        assert set(params) == {
            "grace_period",
            "split_confidence",
            "tie_threshold",
            "n_split_candidates",
            "n_classes",
        }
        ht.set_params(tie_threshold=0.2)
        assert ht.tie_threshold == 0.2

    def test_method_params(self):
        model = DynseClassifier(chunk_size=123, k=3)
        params = model.get_params()
        assert params["chunk_size"] == 123 and params["k"] == 3
        assert "dcs_rule" in params and "pruning" in params

    def test_rule_params(self):
        assert MCB(similarity_threshold=0.5).get_params() == {
            "similarity_threshold": 0.5
        }

    def test_invalid_param_rejected(self):
        with pytest.raises(ValueError):
            GaussianNaiveBayes().set_params(nope=1)

    def test_clone_from_params(self):
        for cls in (DynseClassifier, DesddClassifier, MdeClassifier):
            model = cls()
            twin = cls(**model.get_params())
            assert twin.get_params() == model.get_params()


def test_help_documents_defaults(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["--help"])
    assert exit_info.value.code == 0
    text = capsys.readouterr().out
    for fragment in (
        "default: 1000",
        "default: 10",
        "default: knora-e",
        "default: ht",
        "default: 0.999",
        "required",
    ):
        assert fragment in text, fragment
