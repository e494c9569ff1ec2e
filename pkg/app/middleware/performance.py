"""
Performance monitoring for CLI commands
"""

import logging
import time
from typing import List

perf_logger = logging.getLogger("performance")


class PerformanceMonitor:
    """Time a command and log it when it is slower than the threshold"""

    def __init__(self, command: List[str], slow_command_threshold: float = 1.0):
        self.command = command
        self.slow_command_threshold = slow_command_threshold
        self.start_time = 0.0
        self.process_time = 0.0

    def __enter__(self) -> "PerformanceMonitor":
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb) -> bool:
        self.process_time = time.perf_counter() - self.start_time
        perf_logger.debug("%s finished in %.3fs", " ".join(self.command), self.process_time)

        if self.process_time > self.slow_command_threshold:
            perf_logger.info(
                "SLOW_COMMAND %s",
                {
                    "command": " ".join(self.command),
                    "process_time": round(self.process_time, 3),
                    "failed": exc_type is not None,
                },
            )
        return False
