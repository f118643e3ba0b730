"""The feedback control loop: monitor, knowledge, analyzer, planner and
executor components wired by an observer contract."""

from adaptiot.mape.types import (
    AdaptationRequest,
    Alert,
    ChangePlan,
    SensorReading,
    StateReport,
    SystemState,
)
from adaptiot.mape.observer import (
    DuplicateSubscriptionError,
    ObserverLink,
    Subject,
    notify,
    subscribe,
)
from adaptiot.mape.monitor import (
    Monitor,
    MonitorConfig,
    MonitorThreshold,
    PropertySampling,
    SensorState,
    sensor_sample,
)
from adaptiot.mape.knowledge import Knowledge, OutOfOrderReportError
from adaptiot.mape.analyzer import (
    Analyzer,
    InsufficientSamplesError,
    PredictConfig,
    crossing_time,
    predict_crossing,
)
from adaptiot.mape.planner import DuplicateRuleError, Planner, UnknownRuleError
from adaptiot.mape.executor import Executor, UnknownPlanError

__all__ = [
    "AdaptationRequest",
    "Alert",
    "Analyzer",
    "ChangePlan",
    "DuplicateRuleError",
    "DuplicateSubscriptionError",
    "Executor",
    "InsufficientSamplesError",
    "Knowledge",
    "Monitor",
    "MonitorConfig",
    "MonitorThreshold",
    "ObserverLink",
    "OutOfOrderReportError",
    "Planner",
    "PredictConfig",
    "PropertySampling",
    "SensorReading",
    "SensorState",
    "StateReport",
    "Subject",
    "SystemState",
    "UnknownPlanError",
    "UnknownRuleError",
    "crossing_time",
    "notify",
    "predict_crossing",
    "sensor_sample",
    "subscribe",
]
