# hierarchical_tilings/utils/serializer.py

"""
Report Serializer for hierarchical-tilings
Canonical JSON and MessagePack output with exact numbers and input digests.
"""

import hashlib
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

import msgpack
import numpy as np

from ..core.finite_type import Refutation, SeparationCertificate, TranscriptEntry
from ..core.golden import GoldenNumber
from ..core.symbolic import Pattern, PeriodicConfig, Window
from ..exceptions import ValidationError


class SerializationFormat(Enum):
    """Supported report formats."""
    JSON = "json"
    MSGPACK = "msgpack"


REPORT_KEYS = ("command", "inputs", "digests", "result")


def golden_from_plain(value: Dict[str, str]) -> GoldenNumber:
    """Read back an exact number written as {"u", "v", "decimal"}."""
    try:
        return GoldenNumber.from_pair((value["u"], value["v"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"not an exact number: {value!r}") from e


class ReportSerializer:
    """Canonical serializer for command reports."""

    def __init__(self, default_format: SerializationFormat = SerializationFormat.JSON,
                 decimal_places: int = 12):
        """
        Initialize report serializer.

        Args:
            default_format: Default output format
            decimal_places: Digits of the display decimal written beside exact numbers
        """
        self.default_format = default_format
        self.decimal_places = decimal_places
        self._serializers = {
            SerializationFormat.JSON: self._serialize_json,
            SerializationFormat.MSGPACK: self._serialize_msgpack,
        }
        self._deserializers = {
            SerializationFormat.JSON: self._deserialize_json,
            SerializationFormat.MSGPACK: self._deserialize_msgpack,
        }

    def plain(self, value: Any) -> Any:
        """
        Convert a value into JSON/MessagePack-safe data.

        Exact numbers become {"u", "v", "decimal"}; patterns, windows and
        periodic configurations become their text; dict keys are sorted.
        """
        if isinstance(value, (GoldenNumber, Fraction)):
            number = GoldenNumber.coerce(value)
            u, v = number.to_pair()
            return {"decimal": number.decimal_string(self.decimal_places), "u": u, "v": v}
        if isinstance(value, (Pattern, Window, PeriodicConfig)):
            return value.text()
        if isinstance(value, dict):
            return {str(k): self.plain(value[k]) for k in sorted(value, key=str)}
        if isinstance(value, (list, tuple)):
            return [self.plain(item) for item in value]
        if isinstance(value, (frozenset, set)):
            return sorted(self.plain(item) for item in value)
        if isinstance(value, np.integer):
            return int(value)
        if isinstance(value, np.bool_):
            return bool(value)
        if isinstance(value, float):
            raise ValidationError("reports carry exact numbers only")
        if value is None or isinstance(value, (bool, int, str)):
            return value
        raise ValidationError(f"cannot serialize {type(value).__name__}")

    def digest(self, value: Any) -> str:
        """SHA-256 of the MessagePack packing of the canonical value."""
        packed = msgpack.packb(self.plain(value), use_bin_type=True)
        return hashlib.sha256(packed).hexdigest()

    def build_report(self, command: str, inputs: Dict[str, Any], result: Dict[str, Any],
                     certificate: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Assemble a report with an input digest."""
        report = {
            "command": command,
            "inputs": self.plain(inputs),
            "digests": {"inputs": self.digest(inputs)},
            "result": self.plain(result),
        }
        if certificate is not None:
            report["certificate"] = self.plain(certificate)
        return self.plain(report)

    def serialize(self, report: Dict[str, Any], format: Optional[SerializationFormat] = None) -> bytes:
        """
        Serialize a report to bytes.

        Args:
            report: Report built by build_report
            format: Output format

        Returns:
            Serialized report as bytes
        """
        format = format or self.default_format
        serializer = self._serializers.get(format)
        if not serializer:
            raise ValueError(f"Unsupported serialization format: {format}")
        return serializer(self.plain(report))

    def deserialize(self, data: bytes, format: Optional[SerializationFormat] = None) -> Dict[str, Any]:
        format = format or self.default_format
        deserializer = self._deserializers.get(format)
        if not deserializer:
            raise ValueError(f"Unsupported serialization format: {format}")
        report = deserializer(data)
        missing = [key for key in REPORT_KEYS if key not in report]
        if missing:
            raise ValidationError(f"report is missing {missing}")
        return report

    def _serialize_json(self, report: Dict[str, Any]) -> bytes:
        text = json.dumps(report, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        return (text + "\n").encode("utf-8")

    def _deserialize_json(self, data: bytes) -> Dict[str, Any]:
        return json.loads(data.decode("utf-8"))

    def _serialize_msgpack(self, report: Dict[str, Any]) -> bytes:
        return msgpack.packb(report, use_bin_type=True)

    def _deserialize_msgpack(self, data: bytes) -> Dict[str, Any]:
        return msgpack.unpackb(data, raw=False)


def pattern_plain(pattern: Pattern) -> Dict[str, Any]:
    return {"cells": list(pattern.cells), "extent": list(pattern.extent), "text": pattern.text()}


def pattern_from_plain(value: Dict[str, Any]) -> Pattern:
    try:
        return Pattern(tuple(value["extent"]), tuple(value["cells"]))
    except (KeyError, TypeError) as e:
        raise ValidationError(f"not a pattern: {value!r}") from e


def certificate_plain(certificate: SeparationCertificate) -> Dict[str, Any]:
    """Structural form of a certificate, enough to rebuild and re-check it."""
    refutation = certificate.refutation
    return {
        "certified": certificate.certified,
        "config": pattern_plain(certificate.config.domain),
        "m_cap": certificate.m_cap,
        "radius": certificate.radius,
        "refutation": {
            "position": list(refutation.position) if refutation.position is not None else None,
            "size": refutation.size,
            "unit": refutation.unit,
            "window": pattern_plain(refutation.window) if refutation.window is not None else None,
        },
        "transcript": [
            {"allowed": entry.allowed, "center": list(entry.center), "window": pattern_plain(entry.window.pattern)}
            for entry in certificate.transcript
        ],
    }


def certificate_from_plain(value: Dict[str, Any]) -> SeparationCertificate:
    try:
        radius = int(value["radius"])
        refutation = value["refutation"]
        transcript = [
            TranscriptEntry(tuple(entry["center"]), Window(radius, pattern_from_plain(entry["window"])),
                            bool(entry["allowed"]))
            for entry in value["transcript"]
        ]
        return SeparationCertificate(
            radius=radius,
            config=PeriodicConfig(pattern_from_plain(value["config"])),
            transcript=transcript,
            refutation=Refutation(
                int(refutation["size"]),
                refutation["unit"],
                pattern_from_plain(refutation["window"]) if refutation["window"] is not None else None,
                tuple(refutation["position"]) if refutation["position"] is not None else None,
            ),
            m_cap=int(value["m_cap"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ValidationError(f"malformed certificate: {e}") from e
