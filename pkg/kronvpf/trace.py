from typing import Any, Dict, List, Optional
from datetime import datetime
from pathlib import Path
import json
import logging
import uuid

from .models import TermReport

logger = logging.getLogger(__name__)


class TermTrace:
    """Per-computation trace of alternant term evaluations"""

    def __init__(self, path: Optional[str] = None, label: str = ""):
        self.trace_id = str(uuid.uuid4())
        self.path = Path(path) if path else Path(f"trace_{self.trace_id}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.jsonl")
        self.trace_data: Dict[str, Any] = {
            "trace_id": self.trace_id,
            "label": label,
            "start_time": datetime.now().isoformat(),
            "events": [],
        }

    @property
    def events(self) -> List[Dict[str, Any]]:
        return self.trace_data["events"]

    def log_trace_event(self, event_type: str, data: Dict[str, Any]) -> None:
        self.events.append({"timestamp": datetime.now().isoformat(), "type": event_type, "data": data})

    def log_term(self, report: TermReport) -> None:
        self.log_trace_event("term", report.model_dump(mode="json"))

    def terms(self) -> List[Dict[str, Any]]:
        return [e["data"] for e in self.events if e["type"] == "term"]

    def save(self) -> Path:
        """Write one JSON object per line: a header, then each event"""
        self.trace_data["end_time"] = datetime.now().isoformat()
        header = {k: v for k, v in self.trace_data.items() if k != "events"}
        with open(self.path, "w") as f:
            f.write(json.dumps(header) + "\n")
            for event in self.events:
                f.write(json.dumps(event) + "\n")
        logger.info("trace saved to %s", self.path)
        return self.path
