import os
import shutil
import tempfile
from multiprocessing import Process

import jsonpickle
import psutil

from ...utils import get_logger
from .base_executor import BaseExecutor

logger = get_logger(__name__)


def wrapped_fn(fn, kwargs, workdir):
    pid = os.getpid()
    try:
        result = fn(**kwargs)
    except Exception as e:
        with open(os.path.join(workdir, "%s.err" % pid), "w") as f:
            f.write("%s: %s" % (type(e).__name__, e))
        raise e
    with open(os.path.join(workdir, "%s.txt" % pid), "w") as f:
        f.write(jsonpickle.dumps(result))


class ProcessExecutor(BaseExecutor):
    """One child process per job; results travel back as jsonpickle files
    in a private working directory."""
    poll_interval = 0.05

    def __init__(self, workdir=None):
        self.workdir = workdir or tempfile.mkdtemp(prefix="dp-pursuit-")
        self._processes = {}

    def _path(self, job_id, suffix):
        return os.path.join(self.workdir, "%s.%s" % (job_id, suffix))

    def submit(self, fn, kwargs):
        p = Process(target=wrapped_fn, kwargs={
            "fn": fn, "kwargs": kwargs, "workdir": self.workdir})
        p.start()
        self._processes[str(p.pid)] = p
        return {"job_id": str(p.pid), "extra_info": {}}

    def query_status(self, job_id):
        try:
            p = psutil.Process(int(job_id))
            if p.status() not in [psutil.STATUS_ZOMBIE, psutil.STATUS_DEAD]:
                return "Running"
        except psutil.NoSuchProcess:
            pass

        if os.path.isfile(self._path(job_id, "txt")):
            return "Succeeded"
        else:
            return "Failed"

    def terminate(self, job_id):
        try:
            p = psutil.Process(int(job_id))
            p.terminate()
        except Exception as e:
            logger.error("Failed to terminate process %s: %s", job_id, e)

    def get_results(self, job_id):
        process = self._processes.pop(job_id, None)
        if process is not None:
            process.join()
        if os.path.isfile(self._path(job_id, "txt")):
            with open(self._path(job_id, "txt"), "r") as f:
                result = jsonpickle.loads(f.read())
            os.remove(self._path(job_id, "txt"))
            return result
        if os.path.isfile(self._path(job_id, "err")):
            with open(self._path(job_id, "err"), "r") as f:
                err_msg = f.read()
            raise RuntimeError(err_msg)
        raise RuntimeError("job %s exited without a result" % job_id)

    def close(self):
        shutil.rmtree(self.workdir, ignore_errors=True)
