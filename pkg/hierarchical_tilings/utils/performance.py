# hierarchical_tilings/utils/performance.py

"""
Performance Monitoring for hierarchical-tilings
Times pipeline stages of CLI commands. Timings go to the log, never into reports.
"""

import logging
import statistics
import time
from collections import defaultdict, deque
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Optional

logger = logging.getLogger(__name__)


@dataclass
class PerformanceMetric:
    """Represents a performance metric."""
    name: str
    value: float
    timestamp: float
    metadata: Dict[str, Any] = field(default_factory=dict)


class PerformanceMonitor:
    """Collects stage durations for one command run."""

    def __init__(self, max_samples: int = 1000):
        """
        Initialize performance monitor.

        Args:
            max_samples: Maximum number of samples to keep for each metric
        """
        self.max_samples = max_samples
        self._metrics: Dict[str, deque] = defaultdict(lambda: deque(maxlen=max_samples))
        self._start_times: Dict[str, float] = {}
        self._sequence = 0

    def start_timer(self, operation: str) -> str:
        """
        Start timing an operation.

        Args:
            operation: Name of the operation

        Returns:
            Timer ID for this specific timing
        """
        self._sequence += 1
        timer_id = f"{operation}_{self._sequence}"
        self._start_times[timer_id] = time.perf_counter()
        return timer_id

    def end_timer(self, timer_id: str, metadata: Optional[Dict[str, Any]] = None) -> float:
        """
        End timing an operation and record the duration.

        Returns:
            Duration in seconds, or 0.0 for an unknown timer
        """
        if timer_id not in self._start_times:
            return 0.0

        duration = time.perf_counter() - self._start_times.pop(timer_id)
        operation = timer_id.rsplit('_', 1)[0]
        self.record_metric(f"{operation}_duration", duration, metadata)
        return duration

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        """Time the enclosed block as a named stage."""
        timer_id = self.start_timer(name)
        try:
            yield
        finally:
            duration = self.end_timer(timer_id)
            logger.debug("stage %s took %.3fs", name, duration)

    def record_metric(self, name: str, value: float, metadata: Optional[Dict[str, Any]] = None) -> None:
        self._metrics[name].append(PerformanceMetric(
            name=name,
            value=value,
            timestamp=time.time(),
            metadata=metadata or {}
        ))

    def get_metric_stats(self, name: str) -> Dict[str, Any]:
        if name not in self._metrics or not self._metrics[name]:
            return {}

        values = [m.value for m in self._metrics[name]]

        return {
            "count": len(values),
            "min": min(values),
            "max": max(values),
            "mean": statistics.mean(values),
            "total": sum(values),
            "latest": values[-1],
        }

    def get_all_stats(self) -> Dict[str, Any]:
        return {name: self.get_metric_stats(name) for name in self._metrics}

    def log_summary(self, command: str) -> None:
        for name, stats in sorted(self.get_all_stats().items()):
            logger.info("%s: %.3fs over %d run(s)", name, stats["total"], stats["count"],
                        extra={"command": command})
