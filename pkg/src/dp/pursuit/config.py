import os
from pathlib import Path

import psutil

try:
    from dotenv import load_dotenv
    env_file = Path('.env')
    if not env_file.exists():
        env_file = Path(__file__).parent.parent.parent.parent / '.env'
    if env_file.exists():
        load_dotenv(env_file)
except ImportError:
    pass


def _default_workers():
    return max(1, psutil.cpu_count(logical=False) or 1)


config = {
    "log_level": os.environ.get("DP_PURSUIT_LOG_LEVEL", "INFO"),
    "executor": os.environ.get("DP_PURSUIT_EXECUTOR", "local"),
    "workers": int(os.environ.get("DP_PURSUIT_WORKERS", 0))
    or _default_workers(),
    "witness_max_k": int(os.environ.get("DP_PURSUIT_WITNESS_MAX_K", 8)),
    "witness_max_n": int(os.environ.get("DP_PURSUIT_WITNESS_MAX_N", 24)),
    "backtrack_max_n": int(os.environ.get("DP_PURSUIT_BACKTRACK_MAX_N", 20)),
    "enumerate_max_n": int(os.environ.get("DP_PURSUIT_ENUMERATE_MAX_N", 7)),
}
