import time
from abc import ABC, abstractmethod
from collections.abc import Callable
from typing import Any, List, Literal, TypedDict

from ...utils import get_logger

logger = get_logger(__name__)


class BaseExecutor(ABC):
    poll_interval = 0.0

    @abstractmethod
    def submit(self, fn: Callable, kwargs: dict) -> TypedDict(
            'results', {'job_id': str, 'extra_info': dict}):
        pass

    @abstractmethod
    def query_status(self, job_id: str) -> Literal[
            "Running", "Succeeded", "Failed"]:
        pass

    @abstractmethod
    def terminate(self, job_id: str) -> None:
        pass

    @abstractmethod
    def get_results(self, job_id: str) -> Any:
        pass

    def close(self) -> None:
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

    def run(self, fn: Callable, kwargs: dict) -> Any:
        return self.map(fn, [kwargs], workers=1)[0]

    def map(self, fn: Callable, kwargs_list: List[dict],
            workers: int = 1) -> List[Any]:
        """Run fn once per kwargs with at most `workers` jobs in flight.

        Results come back in submission order whatever the completion
        order; the first failed job terminates the others and re-raises.
        """
        pending = list(enumerate(kwargs_list))
        running = {}
        results: List[Any] = [None] * len(kwargs_list)
        while pending or running:
            while pending and len(running) < max(1, workers):
                index, kwargs = pending.pop(0)
                job_id = self.submit(fn, kwargs)["job_id"]
                logger.info("Job submitted (ID: %s)", job_id)
                running[job_id] = index
            for job_id in list(running):
                status = self.query_status(job_id)
                if status == "Running":
                    continue
                logger.info("Job %s status is %s", job_id, status)
                index = running.pop(job_id)
                try:
                    results[index] = self.get_results(job_id)
                except Exception as e:
                    logger.error("Job %s failed: %s", job_id, e)
                    for other in running:
                        self.terminate(other)
                    raise
            if running:
                time.sleep(self.poll_interval)
        return results
