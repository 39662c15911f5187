"""Fetch, cache, parse, and diff OEIS b-files.

A b-file is plain text, one "index value" pair per line, with '#' comment
lines and blank lines permitted.  Lookup order is local cache first, then
(offline) a fixture bundled with the package or (online) the OEIS site,
caching what the network returns.
"""

from __future__ import annotations

import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import BFileParseError, OeisUnavailableError, OutOfRangeError

SOURCE_NETWORK = "network"
SOURCE_CACHE = "cache"
SOURCE_FIXTURE = "fixture"

_SEQUENCE_ID = re.compile(r"\AA\d{6}\Z")
_URL_TEMPLATE = "https://oeis.org/{sid}/b{digits}.txt"
_FETCH_TIMEOUT = 30.0


@dataclass(frozen=True)
class BFile:
    """One parsed b-file: consecutive (index, value) pairs plus where they came from."""

    sequence_id: str
    entries: tuple[tuple[int, int], ...]
    source: str

    @property
    def offset(self) -> int:
        return self.entries[0][0]

    def values(self, count: int | None = None) -> list[int]:
        values = [value for _, value in self.entries]
        return values if count is None else values[:count]


def default_cache_dir() -> Path:
    env = os.environ.get("OEIS_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", "")
    root = Path(base) if base else Path.home() / ".cache"
    return root / "primefam" / "oeis"


def parse_bfile(text: str, sequence_id: str, source: str = SOURCE_CACHE) -> BFile:
    """Parse b-file text, insisting on consecutive indices and integer tokens."""
    entries: list[tuple[int, int]] = []
    expected: int | None = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise BFileParseError(f"expected 'index value', got {raw!r}", line_number)
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise BFileParseError(f"non-integer token in {raw!r}", line_number) from None
        if expected is not None and index != expected:
            raise BFileParseError(
                f"index {index} breaks the consecutive run (expected {expected})",
                line_number)
        expected = index + 1
        entries.append((index, value))
    if not entries:
        raise BFileParseError(f"no entries found for {sequence_id}")
    return BFile(sequence_id=sequence_id, entries=tuple(entries), source=source)


def _fixture_text(sequence_id: str) -> str | None:
    resource = resources.files("primefam") / "fixtures" / f"{sequence_id}.txt"
    try:
        return resource.read_text()
    except (FileNotFoundError, OSError):
        return None


def _write_cache(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    handle, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(handle, "w") as tmp:
            tmp.write(text)
        os.replace(tmp_name, path)
    except OSError:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def fetch_bfile(sequence_id: str, cache_dir: str | os.PathLike | None = None,
                offline: bool = False) -> BFile:
    """Return the b-file for a sequence id like 'A104272'.

    Cached copies win.  Otherwise offline mode falls back to the bundled
    fixtures, online mode to oeis.org (writing the cache atomically on
    success).  Network or lookup failure raises OeisUnavailableError;
    malformed content raises BFileParseError instead.
    """
    if not isinstance(sequence_id, str) or not _SEQUENCE_ID.match(sequence_id):
        raise ValueError(f"sequence id must be 'A' plus six digits, got {sequence_id!r}")
    cache_root = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    cache_path = cache_root / f"{sequence_id}.txt"
    if cache_path.exists():
        return parse_bfile(cache_path.read_text(), sequence_id, SOURCE_CACHE)
    if offline:
        text = _fixture_text(sequence_id)
        if text is not None:
            return parse_bfile(text, sequence_id, SOURCE_FIXTURE)
        raise OeisUnavailableError(
            f"{sequence_id}: no cache at {cache_path} and no bundled fixture "
            f"(offline mode)")
    url = _URL_TEMPLATE.format(sid=sequence_id, digits=sequence_id[1:])
    try:
        with urllib.request.urlopen(url, timeout=_FETCH_TIMEOUT) as response:
            text = response.read().decode("utf-8")
    except (urllib.error.URLError, OSError, ValueError) as exc:
        raise OeisUnavailableError(
            f"could not fetch {url}: {exc}; use offline mode for bundled fixtures"
        ) from exc
    bfile = parse_bfile(text, sequence_id, SOURCE_NETWORK)
    _write_cache(cache_path, text)
    return bfile


def diff_sequence(generated: list[int], reference: BFile, count: int) -> list[tuple[int, int, int]]:
    """First `count` disagreements as (sequence index, generated, reference)."""
    if count < 1:
        raise ValueError(f"term count must be >= 1, got {count}")
    available = min(len(generated), len(reference.entries))
    if count > available:
        raise OutOfRangeError(
            f"count {count} exceeds the available terms "
            f"(generated {len(generated)}, reference {len(reference.entries)})")
    mismatches = []
    for position in range(count):
        index, expected = reference.entries[position]
        actual = int(generated[position])
        if actual != expected:
            mismatches.append((index, actual, expected))
    return mismatches
