"""Readers and writers for the two text formats.

Tournament files (".tour"): first data line is n, then n lines of n
characters each, '0' or '1', row i column j holding the arc i over j.
Lines starting with '#' are comments.  Profile files (".votes"): one
voter per line, space-separated candidate labels, most preferred first.
Writers emit a canonical form, so write/read round-trips are byte exact.
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from .core import Profile, Tournament

__all__ = [
    "FileFormatError",
    "tournament_text",
    "profile_text",
    "parse_tournament",
    "parse_profile",
    "read_tournament",
    "read_profile",
    "write_tournament",
    "write_profile",
]


class FileFormatError(ValueError):
    """Input file does not follow the documented format."""


def tournament_text(t: Tournament) -> str:
    lines = [str(t.n)]
    lines.extend("".join("1" if b else "0" for b in row) for row in t.beats)
    return "\n".join(lines) + "\n"


def profile_text(p: Profile) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in p.rows)


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_tournament(text: str, source: str = "<string>") -> Tournament:
    lines = _data_lines(text)
    if not lines:
        raise FileFormatError(f"{source}: empty tournament file")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise FileFormatError(f"{source}:{lineno}: expected candidate count, got {head!r}")
    if n < 1:
        raise FileFormatError(f"{source}:{lineno}: candidate count must be >= 1")
    body = lines[1:]
    if len(body) != n:
        raise FileFormatError(f"{source}: expected {n} matrix rows, found {len(body)}")
    beats = np.zeros((n, n), dtype=bool)
    for i, (lineno, line) in enumerate(body):
        if len(line) != n or set(line) - {"0", "1"}:
            raise FileFormatError(
                f"{source}:{lineno}: row must be {n} characters of 0/1, got {line!r}"
            )
        beats[i] = [c == "1" for c in line]
    try:
        return Tournament(beats)
    except ValueError as exc:
        raise FileFormatError(f"{source}: {exc}") from exc


def parse_profile(text: str, source: str = "<string>") -> Profile:
    lines = _data_lines(text)
    if not lines:
        raise FileFormatError(f"{source}: no voters in profile file")
    voters = []
    for lineno, line in lines:
        try:
            voters.append([int(tok) for tok in line.split()])
        except ValueError:
            raise FileFormatError(f"{source}:{lineno}: voters must be integer labels")
    try:
        return Profile(voters)
    except ValueError as exc:
        raise FileFormatError(f"{source}: {exc}") from exc


def read_tournament(path: str | os.PathLike) -> Tournament:
    p = Path(path)
    return parse_tournament(p.read_text(), source=str(p))


def read_profile(path: str | os.PathLike) -> Profile:
    p = Path(path)
    return parse_profile(p.read_text(), source=str(p))


def write_tournament(t: Tournament, path: str | os.PathLike) -> None:
    Path(path).write_text(tournament_text(t))


def write_profile(p: Profile, path: str | os.PathLike) -> None:
    Path(path).write_text(profile_text(p))
