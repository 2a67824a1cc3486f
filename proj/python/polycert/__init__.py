"""Python interface to the polycert certifier."""

import json
from dataclasses import dataclass
from typing import Optional

from . import _polycert
from ._polycert import PolycertError, __version__, render

__all__ = ["PolycertError", "Report", "SynthResult", "__version__", "render", "synthesize", "verify", "verify_file"]


@dataclass
class Report:
    exit_code: int
    data: dict

    @property
    def verdict(self) -> str:
        return self.data["verdict"]

    @property
    def certified(self) -> bool:
        return self.exit_code == 0


@dataclass
class SynthResult:
    trace: Optional[str]
    timed_out: bool
    candidates: int


def verify(text: str, name: str = "<string>", samples: int = 1000, backtrack: int = 64) -> Report:
    code, report = _polycert.verify(text, name, samples, backtrack)
    return Report(code, json.loads(report))


def verify_file(path: str, samples: int = 1000, backtrack: int = 64) -> Report:
    code, report = _polycert.verify_file(str(path), samples, backtrack)
    return Report(code, json.loads(report))


def synthesize(text: str, max_coefficient: int = 3, timeout_ms: int = 120000, atom_constants: bool = False) -> SynthResult:
    return SynthResult(*_polycert.synthesize(text, max_coefficient, timeout_ms, atom_constants))
