"""Symptom definitions and the runtime-editable symptom repository."""

from __future__ import annotations

from dataclasses import dataclass

from adaptiot.policy.expr import Expression


class DuplicateSymptomError(Exception):
    code = "duplicate-symptom"

    def __init__(self, name: str):
        super().__init__(f"symptom already defined: {name}")
        self.name = name


class UnknownSymptomError(Exception):
    code = "unknown-symptom"

    def __init__(self, name: str):
        super().__init__(f"no such symptom: {name}")
        self.name = name


@dataclass(frozen=True)
class Symptom:
    """A named undesirable-state pattern the analyzer watches for."""

    name: str
    trigger: Expression
    window_ticks: int
    cooldown_ticks: int = 0

    def __post_init__(self):
        if not self.name:
            raise ValueError("symptom name must be non-empty")
        if self.window_ticks < 1:
            raise ValueError("window_ticks must be >= 1")
        if self.cooldown_ticks < 0:
            raise ValueError("cooldown_ticks must be >= 0")


class SymptomRepository:
    """Name-indexed symptom collection, editable between ticks at runtime.

    Iteration order is insertion order, which fixes the order analyzer
    evaluations (and therefore adaptation requests) are produced in.
    """

    def __init__(self, symptoms: tuple[Symptom, ...] | list[Symptom] = ()):
        self._by_name: dict[str, Symptom] = {}
        for symptom in symptoms:
            self.add(symptom)

    def add(self, symptom: Symptom) -> None:
        if symptom.name in self._by_name:
            raise DuplicateSymptomError(symptom.name)
        self._by_name[symptom.name] = symptom

    def remove(self, name: str) -> Symptom:
        if name not in self._by_name:
            raise UnknownSymptomError(name)
        return self._by_name.pop(name)

    def update(self, symptom: Symptom) -> None:
        if symptom.name not in self._by_name:
            raise UnknownSymptomError(symptom.name)
        self._by_name[symptom.name] = symptom

    def get(self, name: str) -> Symptom:
        if name not in self._by_name:
            raise UnknownSymptomError(name)
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __iter__(self):
        return iter(self._by_name.values())

    def __len__(self) -> int:
        return len(self._by_name)
