import uuid
from typing import Any, Dict, Tuple

from ...utils import get_logger
from .base_executor import BaseExecutor

logger = get_logger(__name__)


class LocalExecutor(BaseExecutor):
    """Runs every job in the calling process as soon as it is submitted."""

    def __init__(self):
        self._jobs: Dict[str, Tuple[str, Any]] = {}

    def submit(self, fn, kwargs):
        job_id = str(uuid.uuid4())
        try:
            self._jobs[job_id] = ("Succeeded", fn(**kwargs))
        except Exception as e:
            self._jobs[job_id] = ("Failed", e)
        return {"job_id": job_id, "extra_info": {}}

    def query_status(self, job_id):
        return self._jobs[job_id][0]

    def terminate(self, job_id):
        self._jobs.pop(job_id, None)

    def get_results(self, job_id):
        status, result = self._jobs.pop(job_id)
        if status == "Failed":
            raise result
        return result
