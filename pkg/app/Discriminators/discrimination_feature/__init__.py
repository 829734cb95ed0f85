from .erm import DiscriminationOutcome, calibrated_sample_size, erm_discriminate
from .learning import empirical_error, predictor_error, predictor_from_discriminator
from .tester import (
    DistributionSampler,
    LiftedSampler,
    TesterVerdict,
    Verdict,
    closeness_test,
    holdout_sample_size,
    lifted_test,
)

__all__ = [
    "DiscriminationOutcome",
    "DistributionSampler",
    "LiftedSampler",
    "TesterVerdict",
    "Verdict",
    "calibrated_sample_size",
    "closeness_test",
    "empirical_error",
    "erm_discriminate",
    "holdout_sample_size",
    "lifted_test",
    "predictor_error",
    "predictor_from_discriminator",
]
