"""Virtual devices: seeded linear dynamics, actuator effects, command handling."""

from __future__ import annotations

from dataclasses import dataclass, field

from adaptiot.policy import Action
from adaptiot.simnet.rng import NoiseStream, stream_seed


@dataclass(frozen=True)
class PropertySpec:
    """One monitorable property of a device."""

    id: int  # 8-bit wire id
    path: str
    initial: float
    drift: float = 0.0
    noise: float = 0.0
    seed: int = 0


@dataclass(frozen=True)
class ActuatorSpec:
    """A switchable effect: while active it adds `effect` to `property_path`
    on every advance."""

    name: str
    property_path: str
    effect: float


@dataclass(frozen=True)
class DeviceSpec:
    id: int  # 16-bit wire id
    entity: str
    properties: tuple[PropertySpec, ...]
    actuators: tuple[ActuatorSpec, ...] = ()


@dataclass
class VirtualEntity:
    """Gateway-side shadow of one device: last-known values and actuator
    states, updated only by decoded frames and acknowledged commands."""

    entity: str
    values: dict[str, tuple[float, int]] = field(default_factory=dict)
    actuators: dict[str, bool] = field(default_factory=dict)

    def observe(self, path: str, value: float, tick: int) -> None:
        self.values[path] = (value, tick)

    def command_applied(self, action: Action) -> None:
        if action.command == "set_actuator":
            self.actuators[action.target] = bool(action.value)
        elif action.command == "set_property":
            prev = self.values.get(action.target)
            self.values[action.target] = (action.value, prev[1] if prev else 0)


class DeviceRuntime:
    """Live state of one simulated device."""

    def __init__(self, spec: DeviceSpec, run_seed: int):
        self.spec = spec
        self.values: dict[str, float] = {p.path: p.initial for p in spec.properties}
        self.active: dict[str, bool] = {a.name: False for a in spec.actuators}
        self._props = {p.path: p for p in spec.properties}
        self._actuators = {a.name: a for a in spec.actuators}
        self._streams = {
            p.path: NoiseStream(stream_seed(run_seed, spec.id, p.id, p.seed))
            for p in spec.properties
        }

    def advance(self) -> dict[str, float]:
        """One tick of dynamics: v += drift + sum(active effects) + noise*u
        with u uniform in [-1, 1) from the property's dedicated stream."""
        for prop in self.spec.properties:
            delta = prop.drift
            for act in self.spec.actuators:
                if act.property_path == prop.path and self.active[act.name]:
                    delta += act.effect
            if prop.noise != 0.0:
                delta += prop.noise * self._streams[prop.path].next_signed_unit()
            self.values[prop.path] += delta
        return dict(self.values)

    def apply(self, action: Action) -> tuple[bool, str]:
        """Apply a command; returns (ok, detail) where detail names the
        failure for a negative ack."""
        if action.command == "set_property":
            if action.target not in self.values:
                return False, "unknown-target"
            self.values[action.target] = action.value
            return True, ""
        if action.command == "adjust_property":
            if action.target not in self.values:
                return False, "unknown-target"
            self.values[action.target] += action.value
            return True, ""
        if action.command == "set_actuator":
            if action.target not in self.active:
                return False, "unknown-target"
            self.active[action.target] = bool(action.value)
            return True, ""
        return False, "unknown-command"
