from __future__ import annotations

from dataclasses import dataclass, field


class FindomError(Exception):
    """Base class for errors raised by the package."""


class RingMismatch(FindomError):
    pass


class GatingError(FindomError):
    """Operation not available for this ring (capability rule)."""


class WindowError(FindomError):
    """A windowed computation needs data outside the supplied window."""

    def __init__(self, msg, required=None):
        super().__init__(msg)
        self.required = required


class SchemaError(FindomError):
    def __init__(self, msg, location=""):
        super().__init__("%s: %s" % (location, msg) if location else msg)
        self.location = location


@dataclass
class Verdict:
    ok: bool
    detail: str = ""
    location: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls, detail="ok"):
        return cls(True, detail)

    @classmethod
    def failed(cls, detail, **location):
        return cls(False, detail, location)
