import random

import pytest

from adaptiot.policy import Threshold
from adaptiot.policy.expr import UnknownPropertyError
from adaptiot.mape import (
    Monitor,
    MonitorConfig,
    MonitorThreshold,
    PropertySampling,
    SensorReading,
    SensorState,
    sensor_sample,
)


def sample_series(config, values, start=0, demands=()):
    state = SensorState()
    emitted = []
    for now, value in enumerate(values, start=start):
        reading = sensor_sample("dev", value, config, state, now, demand=now in demands)
        if reading is not None:
            emitted.append((now, reading.value))
    return emitted


def test_periodic_interval():
    config = PropertySampling("p", mode="periodic", interval=5)
    emitted = sample_series(config, [float(i) for i in range(11)])
    assert [tick for tick, _ in emitted] == [0, 5, 10]


def test_event_deadband():
    config = PropertySampling("p", mode="event", deadband=0.5)
    emitted = sample_series(config, [20.0, 20.3, 20.6])
    assert [value for _, value in emitted] == [20.0, 20.6]


def test_on_demand_requires_demand():
    config = PropertySampling("p", mode="on-demand")
    assert sample_series(config, [1.0, 2.0, 3.0]) == []
    assert sample_series(config, [1.0, 2.0, 3.0], demands={1}) == [(1, 2.0)]


def test_demand_forces_emission_in_any_mode():
    config = PropertySampling("p", mode="periodic", interval=10)
    emitted = sample_series(config, [float(i) for i in range(1, 6)], start=1, demands={3})
    assert [tick for tick, _ in emitted] == [3]


def config_with_threshold(h=0.0, limit=25.0):
    return MonitorConfig(
        properties={"room.temp": PropertySampling("room.temp")},
        thresholds=(MonitorThreshold("HighTempAlert", Threshold("room.temp", ">", limit, h)),),
        reporting_interval=5,
    )


def reading(value, tick):
    return SensorReading("room", "room.temp", value, tick)


def test_ingest_below_limit_no_alert():
    monitor = Monitor(config_with_threshold())
    assert monitor.ingest(reading(20.0, 1)) == []


def test_first_crossing_alerts_once():
    monitor = Monitor(config_with_threshold())
    alerts = []
    for tick, value in enumerate([24.0, 25.5, 26.0, 27.0], start=1):
        alerts.extend(monitor.ingest(reading(value, tick)))
    assert len(alerts) == 1
    assert alerts[0].threshold_id == "HighTempAlert"
    assert alerts[0].tick == 2 and alerts[0].value == 25.5


def test_recross_after_hysteresis_alerts_again():
    monitor = Monitor(config_with_threshold(h=1.0))
    values = [26.0, 23.5, 26.0]  # cross, clear (< 24), cross again
    alerts = []
    for tick, value in enumerate(values, start=1):
        alerts.extend(monitor.ingest(reading(value, tick)))
    assert len(alerts) == 2


def test_hover_above_clear_margin_does_not_realert():
    monitor = Monitor(config_with_threshold(h=1.0))
    values = [26.0, 24.5, 26.0]  # 24.5 >= limit - h keeps the violation held
    alerts = []
    for tick, value in enumerate(values, start=1):
        alerts.extend(monitor.ingest(reading(value, tick)))
    assert len(alerts) == 1


def test_ingest_unknown_property():
    monitor = Monitor(config_with_threshold())
    with pytest.raises(UnknownPropertyError):
        monitor.ingest(SensorReading("room", "unknown.path", 1.0, 1))


def test_flush_aggregates_hand_example():
    monitor = Monitor(
        MonitorConfig(
            properties={
                "p": PropertySampling("p", aggregates=("mean", "min", "max", "count"))
            },
            reporting_interval=5,
        )
    )
    for tick, value in enumerate([1.0, 2.0, 3.0], start=1):
        monitor.ingest(SensorReading("d", "p", value, tick))
    report = monitor.flush(5)
    assert report.aggregates["p"] == {"mean": 2.0, "min": 1.0, "max": 3.0, "count": 3}
    assert (report.window_start, report.window_end) == (0, 5)


def test_flush_empty_window_reports_count_only():
    monitor = Monitor(
        MonitorConfig(
            properties={"p": PropertySampling("p", aggregates=("mean", "count", "last"))},
            reporting_interval=5,
        )
    )
    report = monitor.flush(5)
    assert report.aggregates["p"] == {"count": 0}


def test_flush_clears_buffer_and_advances_window():
    monitor = Monitor(
        MonitorConfig(properties={"p": PropertySampling("p")}, reporting_interval=5)
    )
    monitor.ingest(SensorReading("d", "p", 1.0, 1))
    first = monitor.flush(5)
    second = monitor.flush(10)
    assert first.aggregates["p"]["count"] == 1
    assert second.aggregates["p"]["count"] == 0
    assert (second.window_start, second.window_end) == (5, 10)


def test_alerts_ride_next_report_then_clear():
    monitor = Monitor(config_with_threshold())
    monitor.ingest(reading(26.0, 2))
    report = monitor.flush(5)
    assert [a.threshold_id for a in report.alerts] == ["HighTempAlert"]
    assert monitor.flush(10).alerts == ()


def test_random_aggregates_match_brute_force():
    rng = random.Random(17)
    monitor = Monitor(
        MonitorConfig(
            properties={
                "p": PropertySampling("p", aggregates=("mean", "min", "max", "last", "count"))
            },
            reporting_interval=100,
        )
    )
    values = [rng.uniform(-50, 50) for _ in range(100)]
    for tick, value in enumerate(values, start=1):
        monitor.ingest(SensorReading("d", "p", value, tick))
    got = monitor.flush(100).aggregates["p"]
    assert got["count"] == len(values)
    assert got["min"] == min(values)
    assert got["max"] == max(values)
    assert got["last"] == values[-1]
    assert got["mean"] == pytest.approx(sum(values) / len(values), rel=1e-12)


def test_set_reporting_interval_moves_boundaries():
    monitor = Monitor(
        MonitorConfig(properties={"p": PropertySampling("p")}, reporting_interval=5)
    )
    assert monitor.due(10) and not monitor.due(11)
    monitor.set_reporting_interval(3)
    assert monitor.due(12) and not monitor.due(10)
