"""The 13-byte binary device wire frame.

Layout (big-endian):

    [0]      magic 0xA5
    [1..2]   device id (uint16)
    [3]      property id (uint8)
    [4..7]   value (IEEE-754 binary32)
    [8..11]  tick, low 32 bits (uint32)
    [12]     checksum: XOR of bytes 0..11

Device values travel as binary32, so a decoded value is the float32 rounding
of what was encoded; everything else round-trips exactly.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import reduce

MAGIC = 0xA5
FRAME_LEN = 13

_BODY = struct.Struct(">BHBfI")


class FrameError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class FrameReading:
    """One sensor measurement as it appears on the device wire."""

    device_id: int
    property_id: int
    value: float
    tick: int


def _checksum(body: bytes) -> int:
    return reduce(lambda a, b: a ^ b, body, 0)


def encode_frame(reading: FrameReading) -> bytes:
    if not 0 <= reading.device_id <= 0xFFFF:
        raise ValueError(f"device id out of range: {reading.device_id}")
    if not 0 <= reading.property_id <= 0xFF:
        raise ValueError(f"property id out of range: {reading.property_id}")
    body = _BODY.pack(
        MAGIC,
        reading.device_id,
        reading.property_id,
        reading.value,
        reading.tick & 0xFFFFFFFF,
    )
    return body + bytes([_checksum(body)])


def decode_frame(data: bytes) -> FrameReading:
    if len(data) != FRAME_LEN:
        raise FrameError("short-frame", f"expected {FRAME_LEN} bytes, got {len(data)}")
    if data[0] != MAGIC:
        raise FrameError("bad-magic", f"bad magic byte 0x{data[0]:02X}")
    if _checksum(data[:12]) != data[12]:
        raise FrameError("bad-checksum", "checksum mismatch")
    _, device_id, property_id, value, tick = _BODY.unpack(data[:12])
    return FrameReading(device_id, property_id, value, tick)
