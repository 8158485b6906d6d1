"""Exact splitting types of pulled-back tangent bundles on rational curves.

Thin wrappers over the C++ job runner: each function builds one job
document, runs it, and returns the parsed result. Batches (lists of jobs)
pass through unchanged, error entries included, mirroring the CLI.
"""

import json as _json

from ._core import run_jobs as _run_jobs

__all__ = [
    "JobError",
    "run_job",
    "splitting",
    "formulas",
    "lines",
    "hirzebruch",
    "selfcheck",
]


class JobError(RuntimeError):
    """A job was rejected (exit code 2) or failed a precondition (exit code 3)."""

    def __init__(self, kind, message, exit_code):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.message = message
        self.exit_code = exit_code


def run_job(job, *, field=None, seed=None, parallel=1):
    """Run one job document (dict) or a batch (list of dicts).

    Single jobs return the result document and raise JobError on failure;
    batches return the list of per-job documents in input order.
    """
    code, out = _run_jobs(_json.dumps(job), field, seed, parallel)
    doc = _json.loads(out)
    if isinstance(job, list):
        return doc
    if code != 0:
        err = doc.get("error", {}) if isinstance(doc, dict) else {}
        raise JobError(err.get("kind", "Internal"), err.get("message", ""), code)
    return doc


def splitting(map, *, ambient=None, hypersurface=None, field="Q", parallel=1):
    """Splitting type and freeness report for a map to a hypersurface.

    `map` is a list of coordinate-form coefficient arrays (one block) or a
    {"blocks": [...]} document; `ambient` like "P:3" or {"biP": [2, 1]};
    `hypersurface` a {"ambient", "degree", "terms"} document. At least one
    of `ambient` / `hypersurface` is required.
    """
    payload = {"map": map}
    if ambient is not None:
        payload["ambient"] = ambient
    if hypersurface is not None:
        payload["hypersurface"] = hypersurface
    return run_job({"command": "splitting", "field": field, "payload": payload},
                   parallel=parallel)


def formulas(name, **params):
    """Evaluate a named dimension formula; returns its integer value."""
    return run_job({"command": "formulas", "payload": {"name": name, **params}})["value"]


def lines(hypersurface, *, field, budget=None, parallel=1):
    """Enumerate all rational lines on a hypersurface over a prime field."""
    payload = {"hypersurface": hypersurface}
    if budget is not None:
        payload["budget"] = budget
    return run_job({"command": "lines", "field": field, "payload": payload},
                   parallel=parallel)


def hirzebruch(op, **params):
    """Hirzebruch-surface class arithmetic; see the CLI for the op names."""
    return run_job({"command": "hirzebruch", "payload": {"op": op, **params}})


def selfcheck(*, seed=0, field="Fp:101", parallel=1):
    """Run the internal consistency suite; returns its check/failure counts."""
    return run_job({"command": "selfcheck", "seed": seed, "field": field},
                   parallel=parallel)
