"""Trajectory CSV serialization.

Format: UTF-8, LF line endings, header `t,x1,...,xn,V1,V2,spread,sum`,
one row per retained sample, all numbers with 9 significant digits.
"""

import io
import os
from typing import Union

from .engine import Trajectory


def _fmt(v: float) -> str:
    return f"{v:.9g}"


def trajectory_csv_text(traj: Trajectory) -> str:
    if not traj.samples:
        raise ValueError("trajectory has no samples")
    n = traj.samples[0].x.size
    header = "t," + ",".join(f"x{i + 1}" for i in range(n)) + ",V1,V2,spread,sum"
    lines = [header]
    for s in traj.samples:
        fields = [_fmt(s.t)]
        fields += [_fmt(v) for v in s.x]
        fields += [_fmt(s.v1), _fmt(s.v2), _fmt(s.spread), _fmt(s.sum)]
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def write_trajectory_csv(traj: Trajectory, destination: Union[str, os.PathLike, io.TextIOBase]) -> int:
    """Write the trajectory CSV; returns the number of bytes written."""
    text = trajectory_csv_text(traj)
    data = text.encode("utf-8")
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "wb") as fh:
            fh.write(data)
    return len(data)
