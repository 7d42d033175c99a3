"""File edit sessions: overwrite patches on a log, atomic save.

A session keeps the on-disk bytes it was opened from, an append-only
patch log and an overlay of live byte values.  Replaying the log over
the on-disk bytes always reproduces the in-memory view (patches record
absolute writes, so replay stays idempotent after a save).  Editing is
overwrite-only; sessions never grow or shrink a file.
"""

from __future__ import annotations

import os
import secrets
import tempfile
import threading
from dataclasses import dataclass, field
from pathlib import Path

from .digits import encode_nibble, split_byte
from .naming import byte_name


class SessionError(Exception):
    """Base for session failures."""


class NotFound(SessionError):
    pass


class PermissionDenied(SessionError):
    pass


class SessionUnknown(SessionError):
    pass


class OutOfRange(SessionError):
    pass


class IoError(SessionError):
    pass


@dataclass(frozen=True)
class Patch:
    offset: int
    old: int
    new: int


@dataclass
class Session:
    id: str
    path: str
    length: int
    dirty: bool = False
    patches: list = field(default_factory=list)
    base: bytes = field(default=b"", repr=False)  # on-disk bytes at open/save
    overlay: dict = field(default_factory=dict, repr=False)
    lock: threading.RLock = field(default_factory=threading.RLock, repr=False)

    def current(self, offset: int) -> int:
        return self.overlay.get(offset, self.base[offset])


@dataclass(frozen=True)
class RangeView:
    """A window of session bytes with their names and segment pairs."""

    offset: int
    length: int
    bytes: bytes
    names: tuple
    segments: tuple  # per byte: (high segment set, low segment set)


# Names and segment pairs are pure functions of the byte value; table
# them once so large range reads stay cheap.
_NAME_TABLE = tuple(byte_name(b).text for b in range(256))
_SEGMENT_TABLE = tuple(
    (encode_nibble(hi), encode_nibble(lo))
    for hi, lo in (split_byte(b) for b in range(256))
)


def _derive(offset: int, data: bytes) -> RangeView:
    return RangeView(
        offset=offset,
        length=len(data),
        bytes=data,
        names=tuple(_NAME_TABLE[b] for b in data),
        segments=tuple(_SEGMENT_TABLE[b] for b in data),
    )


class SessionStore:
    """Owns every session; mutations on one session are serialized."""

    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()

    def open_session(self, path) -> Session:
        target = Path(path)
        try:
            data = target.read_bytes()
        except FileNotFoundError:
            raise NotFound(f"no such file: {target}") from None
        except IsADirectoryError:
            raise NotFound(f"not a regular file: {target}") from None
        except PermissionError:
            raise PermissionDenied(f"cannot read: {target}") from None
        session = Session(
            id=secrets.token_hex(8), path=str(target), length=len(data), base=data
        )
        with self._registry_lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise SessionUnknown(f"unknown session: {session_id}") from None

    def read_range(self, session_id: str, offset: int, length: int) -> RangeView:
        if offset < 0:
            raise OutOfRange("offset must be >= 0")
        if length < 0:
            raise OutOfRange("length must be >= 0")
        session = self.get(session_id)
        with session.lock:
            start = min(offset, session.length)
            end = min(offset + length, session.length)
            window = bytearray(session.base[start:end])
            for patch_offset, value in session.overlay.items():
                if start <= patch_offset < end:
                    window[patch_offset - start] = value
        return _derive(start, bytes(window))

    def apply_patch(self, session_id: str, offset: int, value: int) -> Session:
        session = self.get(session_id)
        if not 0 <= value <= 255:
            raise OutOfRange(f"byte value out of range: {value}")
        if not 0 <= offset < session.length:
            raise OutOfRange(f"offset {offset} outside [0, {session.length})")
        with session.lock:
            session.patches.append(
                Patch(offset=offset, old=session.current(offset), new=value)
            )
            session.overlay[offset] = value
            session.dirty = True
        return session

    def save_session(self, session_id: str) -> Session:
        """Write the patched view atomically (temp file, then rename).

        The patch log is kept for undo history; the overlay folds into
        the new base.  A clean session is a no-op.
        """
        session = self.get(session_id)
        with session.lock:
            if not session.dirty:
                return session
            data = bytearray(session.base)
            for offset, value in session.overlay.items():
                data[offset] = value
            directory = os.path.dirname(os.path.abspath(session.path))
            try:
                fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".sedec-save-")
                try:
                    with os.fdopen(fd, "wb") as handle:
                        handle.write(data)
                    os.replace(tmp_path, session.path)
                except BaseException:
                    try:
                        os.unlink(tmp_path)
                    except OSError:
                        pass
                    raise
            except OSError as exc:
                raise IoError(f"save failed: {exc}") from exc
            session.base = bytes(data)
            session.overlay.clear()
            session.dirty = False
        return session
