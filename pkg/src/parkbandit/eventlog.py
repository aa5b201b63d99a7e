"""Append-only JSONL event log, the system of record for replay.

One JSON object per line, written with sorted keys and compact separators
so identical events serialize to identical bytes. Three event types exist:
iteration_start, judgment, iteration_close.
"""

import json
from pathlib import Path

ITERATION_START = "iteration_start"
JUDGMENT = "judgment"
ITERATION_CLOSE = "iteration_close"

EVENT_TYPES = (ITERATION_START, JUDGMENT, ITERATION_CLOSE)


def encode_event(event_type: str, payload: dict) -> str:
    if event_type not in EVENT_TYPES:
        raise ValueError(f"unknown event type: {event_type}")
    record = {"type": event_type, **payload}
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


class EventLog:
    """File-backed append-only log. Reads always reflect the file."""

    def __init__(self, path):
        self.path = Path(path)

    def append(self, event_type: str, payload: dict) -> dict:
        line = encode_event(event_type, payload)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(line + "\n")
        return json.loads(line)

    def read(self) -> list[dict]:
        if not self.path.exists():
            return []
        events = []
        with self.path.open("r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if line:
                    events.append(json.loads(line))
        return events


class MemoryLog:
    """In-memory stand-in with the same interface, for tests and dry runs."""

    def __init__(self):
        self.lines: list[str] = []

    def append(self, event_type: str, payload: dict) -> dict:
        line = encode_event(event_type, payload)
        self.lines.append(line)
        return json.loads(line)

    def read(self) -> list[dict]:
        return [json.loads(line) for line in self.lines]
