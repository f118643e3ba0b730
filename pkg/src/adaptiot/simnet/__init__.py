"""Deterministic discrete-event world: virtual clock, seeded device dynamics,
binary device frames, latency links and scenario execution."""

from adaptiot.simnet.engine import LogRecord, ScheduleInPastError, SimEngine
from adaptiot.simnet.frames import (
    FRAME_LEN,
    FrameError,
    FrameReading,
    decode_frame,
    encode_frame,
)
from adaptiot.simnet.rng import NoiseStream, stream_seed
from adaptiot.simnet.devices import (
    ActuatorSpec,
    DeviceRuntime,
    DeviceSpec,
    PropertySpec,
    VirtualEntity,
)
from adaptiot.simnet.environment import EnvironmentModel
from adaptiot.simnet.eventlog import LogParseError, parse_log, render_log, render_record

__all__ = [
    "ActuatorSpec",
    "DeviceRuntime",
    "DeviceSpec",
    "EnvironmentModel",
    "FRAME_LEN",
    "FrameError",
    "FrameReading",
    "LogParseError",
    "LogRecord",
    "NoiseStream",
    "PropertySpec",
    "ScheduleInPastError",
    "SimEngine",
    "VirtualEntity",
    "decode_frame",
    "encode_frame",
    "parse_log",
    "render_log",
    "render_record",
    "stream_seed",
]
