import json
from typing import Optional

SCHEMA = "dp-pursuit/%s@1"


def document(kind: str, payload: Optional[dict]) -> Optional[dict]:
    """Tag a result with its schema; absent results stay None."""
    if payload is None:
        return None
    return {"schema": SCHEMA % kind, **payload}


def dumps(doc: Optional[dict]) -> str:
    if doc is None:
        return "none"
    return json.dumps(doc, sort_keys=False)


def summarize(doc: Optional[dict]) -> str:
    """One-screen human summary of a document."""
    if doc is None:
        return "none"
    kind = doc["schema"][len("dp-pursuit/"):].split("@")[0]
    if kind == "game-value":
        spec = doc["spec"]
        return "%s game (s=%s, s'=%s, k=%s, radius=%s) on %d vertices: %s" \
            " (best start %s, %d levels)" % (
                spec["variant"], spec["s"], spec["s_prime"], spec["k"],
                spec["radius"], doc["n"], doc["verdict"], doc["best_start"],
                doc["rounds"])
    if kind == "classification":
        return "(%s,%s)-dismantlable: %s" % (
            doc["s"], doc["s_prime"], "yes" if doc["dismantlable"] else "no")
    if kind == "certificate":
        return "%s order %s" % (doc["family"],
                                " ".join(map(str, doc["order"])))
    if kind == "decomposition":
        return "%s decomposition with %d pieces: %s" % (
            doc["kind"], len(doc["pieces"]),
            " | ".join(",".join(map(str, p)) for p in doc["pieces"]))
    if kind == "blocks":
        return "%d blocks, articulations %s" % (
            len(doc["blocks"]), doc["articulations"])
    if kind == "hyperbolicity":
        return "2delta = %d (delta = %s), witness %s" % (
            doc["two_delta"], doc["delta"], doc["witness"])
    if kind == "trace":
        return "%s after %d cop moves (cap %d)" % (
            doc["outcome"], doc["steps"], doc["cap"])
    if kind == "crosscheck-report":
        lines = []
        for check in doc["checks"]:
            lines.append("%-20s tested %6d  agree %6d  disagree %4d  %.1fs"
                         % (check["name"], check["graphs_tested"],
                            check["agreements"],
                            len(check["disagreements"]),
                            check["wall_time"]))
        lines.append("PASSED" if doc["passed"] else "FAILED")
        return "\n".join(lines)
    return dumps(doc)
