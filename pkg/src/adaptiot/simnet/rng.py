"""splitmix64 noise streams.

Every noisy device property gets its own stream, derived from the run seed
and the device/property ids, so runs replay bit-for-bit and two properties
never share a sequence.  Constants are the published splitmix64 ones.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# Odd multipliers that spread the id components across the seed word before
# the stream is scrambled.
_DEVICE_SALT = 0x9E3779B97F4A7C15
_PROPERTY_SALT = 0xC2B2AE3D27D4EB4F
_EXTRA_SALT = 0x165667B19E3779F9


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * _MIX1 & _MASK
    z = (z ^ (z >> 27)) * _MIX2 & _MASK
    return z ^ (z >> 31)


def stream_seed(run_seed: int, device_id: int, property_id: int, property_seed: int = 0) -> int:
    """Derive the per-(device, property) stream seed from the run seed."""
    z = run_seed & _MASK
    z ^= (device_id * _DEVICE_SALT) & _MASK
    z ^= (property_id * _PROPERTY_SALT) & _MASK
    z ^= (property_seed * _EXTRA_SALT) & _MASK
    return _mix(z)


class NoiseStream:
    """splitmix64 sequence with helpers for unit-interval draws."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def next_unit(self) -> float:
        """Uniform in [0, 1), using the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_signed_unit(self) -> float:
        """Uniform in [-1, 1)."""
        return 2.0 * self.next_unit() - 1.0
