from .base_executor import BaseExecutor
from .local_executor import LocalExecutor
from .process_executor import ProcessExecutor

__all__ = ["BaseExecutor", "LocalExecutor", "ProcessExecutor",
           "executor_dict"]
executor_dict = {
    "local": LocalExecutor,
    "process": ProcessExecutor,
}
