"""Track file parsing and writing.

Track format: UTF-8 CSV with mandatory header ``n,x,y,label``. ``n`` is the
timestamp in integer milliseconds, ``x``/``y`` are gaze coordinates in degrees
of visual angle (both empty when the sample is missing), ``label`` is
0=fixation, 1=saccade, 2=blink, or empty for unlabeled. Extra columns are
ignored. ``\\n`` and ``\\r\\n`` line endings are both accepted.

Metadata (subject, task, round, session) is carried by the filename
convention ``S<subject>_R<round>_S<session>_<TASK>.csv``.
"""

from __future__ import annotations

import csv
import io
import re
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..errors import TrackParseError
from .types import EventLabel, ScanPath, Task

_HEADER = ("n", "x", "y", "label")
_KNOWN_LABELS = {0: EventLabel.FIXATION, 1: EventLabel.SACCADE, 2: EventLabel.BLINK}

_FILENAME_RE = re.compile(
    r"^S(?P<subject>[A-Za-z0-9]+)_R(?P<round>\d+)_S(?P<session>\d+)_(?P<task>[A-Z]+)$"
)


def parse_track(
    data: Union[bytes, str],
    track_id: str = "",
    subject_id: str = "",
    task: Task = Task.SYNTH,
    round_num: int = 1,
    session: int = 1,
) -> ScanPath:
    """Parse track CSV text into a :class:`ScanPath`.

    Raises :class:`TrackParseError` (with the offending 1-based line number)
    for a bad header, wrong row arity, a non-integer timestamp, non-numeric
    coordinates, or a half-missing coordinate pair. Non-increasing timestamps
    raise :class:`~gazetda.errors.ValidationError` via ScanPath validation.

    Integer labels outside {0, 1, 2} are tolerated and mapped to UNKNOWN.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    reader = csv.reader(io.StringIO(data, newline=""))

    try:
        header = next(reader)
    except StopIteration:
        raise TrackParseError("empty file: missing header row", line=1) from None
    if tuple(h.strip().lower() for h in header[:4]) != _HEADER:
        raise TrackParseError(
            f"expected header n,x,y,label, got {','.join(header)!r}", line=1
        )

    ts: list[int] = []
    xs: list[float] = []
    ys: list[float] = []
    labels: list[int] = []
    for lineno, row in enumerate(reader, start=2):
        if len(row) < 4:
            raise TrackParseError(
                f"expected at least 4 fields, got {len(row)}", line=lineno
            )
        n_field, x_field, y_field, label_field = (f.strip() for f in row[:4])
        try:
            ts.append(int(n_field))
        except ValueError:
            raise TrackParseError(
                f"non-integer timestamp {n_field!r}", line=lineno
            ) from None
        if (x_field == "") != (y_field == ""):
            raise TrackParseError(
                "x and y must be missing together", line=lineno
            )
        if x_field == "":
            xs.append(np.nan)
            ys.append(np.nan)
        else:
            try:
                xs.append(float(x_field))
                ys.append(float(y_field))
            except ValueError:
                raise TrackParseError(
                    f"non-numeric coordinates {x_field!r},{y_field!r}",
                    line=lineno,
                ) from None
        if label_field == "":
            labels.append(EventLabel.UNKNOWN)
        else:
            try:
                code = int(label_field)
            except ValueError:
                raise TrackParseError(
                    f"non-integer label {label_field!r}", line=lineno
                ) from None
            labels.append(_KNOWN_LABELS.get(code, EventLabel.UNKNOWN))

    return ScanPath(
        t=np.array(ts, dtype=np.int64),
        x=np.array(xs, dtype=np.float64),
        y=np.array(ys, dtype=np.float64),
        labels=np.array(labels, dtype=np.int8),
        track_id=track_id,
        subject_id=subject_id,
        task=task,
        round_num=round_num,
        session=session,
    )


def format_track(path: ScanPath) -> str:
    """Serialize a scanpath back to the track CSV format (byte-stable)."""
    lines = ["n,x,y,label"]
    for i in range(len(path)):
        if np.isnan(path.x[i]):
            xy = ","
        else:
            xy = f"{float(path.x[i])!r},{float(path.y[i])!r}"
        label = int(path.labels[i])
        label_field = "" if label == EventLabel.UNKNOWN else str(label)
        lines.append(f"{int(path.t[i])},{xy},{label_field}")
    return "\n".join(lines) + "\n"


def track_filename(path: ScanPath) -> str:
    """Filename encoding the track metadata."""
    return (
        f"S{path.subject_id}_R{path.round_num}_S{path.session}"
        f"_{path.task.value}.csv"
    )


def parse_track_filename(name: str) -> Optional[dict]:
    """Extract metadata from a track filename, or None if unconventional."""
    m = _FILENAME_RE.match(Path(name).stem)
    if m is None:
        return None
    try:
        task = Task(m.group("task"))
    except ValueError:
        return None
    return {
        "subject_id": m.group("subject"),
        "round_num": int(m.group("round")),
        "session": int(m.group("session")),
        "task": task,
    }


def load_track(path: Union[str, Path]) -> ScanPath:
    """Read a track file; metadata comes from the filename when it matches
    the ``S<subject>_R<round>_S<session>_<TASK>.csv`` convention."""
    path = Path(path)
    meta = parse_track_filename(path.name) or {}
    return parse_track(path.read_bytes(), track_id=path.stem, **meta)
