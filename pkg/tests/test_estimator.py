import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from forestsplit import ExhaustiveOracle, SimultaneousBalancedPartition, tightness_example
from forestsplit.exceptions import ValidationError

TIGHT_DICT = {"n": 5, "g1": [(0, 1), (1, 2), (2, 3), (3, 4)], "g2": [(0, 4), (4, 3), (2, 1), (1, 0)]}


def test_get_set_params_and_clone():
    est = SimultaneousBalancedPartition(root_strategy="seeded", seed=3)
    assert est.get_params() == {"root_strategy": "seeded", "seed": 3}
    est.set_params(seed=4)
    assert clone(est).seed == 4


@pytest.mark.parametrize("X", [tightness_example(), TIGHT_DICT, (5, TIGHT_DICT["g1"], TIGHT_DICT["g2"])])
def test_fit_predict_accepts_instance_forms(X):
    labels = SimultaneousBalancedPartition().fit_predict(X)
    assert labels.tolist() == [1, 1, 0, 1, 0]


def test_fitted_attributes():
    est = SimultaneousBalancedPartition().fit(tightness_example())
    assert est.achieved_k_ == 2
    assert est.n_vertices_ == 5
    assert est.report_.per_vertex_b1.tolist() == [1, 0, 2, 2, 1]
    assert est.score(tightness_example()) == -2
    assert est.certificate(0, 2).holds


def test_not_fitted():
    with pytest.raises(NotFittedError):
        SimultaneousBalancedPartition().score(tightness_example())


def test_rejects_garbage():
    with pytest.raises(ValidationError):
        SimultaneousBalancedPartition().fit(np.zeros((3, 3)))
    with pytest.raises(ValidationError):
        SimultaneousBalancedPartition().fit({"n": 2, "g1": []})


def test_oracle_estimator():
    est = ExhaustiveOracle().fit(tightness_example())
    assert est.k_min_ == 2
    assert est.n_enumerated_ == 16
    assert est.labels_[0] == 0
    assert ExhaustiveOracle(n_limit=4).get_params() == {"n_limit": 4}
