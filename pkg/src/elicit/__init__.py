"""Prevalence indicators for a ten-item indirect-elicitation survey."""

from elicit.codebook import Codebook, default_codebook
from elicit.indicators import (
    AnalysisReport,
    EmptyDenominator,
    IndicatorResult,
    analysis1,
    analysis2,
    analysis3,
    compute,
)
from elicit.ingest import Dataset, dedup, load
from elicit.model import Response, ValidationError, validate
from elicit.recode import Signals, Thresholds, derive_signals
from elicit.rubric import Claim, ClaimAssessment, classify_claim
from elicit.synth import CountSpec, InfeasibleSpec, generate_fixture, pilot_spec

__version__ = "0.1.0"
