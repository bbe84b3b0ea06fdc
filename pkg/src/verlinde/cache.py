"""Optional on-disk persistence for dominant characters.

Set ``VERLINDE_CACHE_DIR`` to a directory and every freshly computed
character is appended to ``<dir>/characters.bin``. Each record is::

    u32  payload length (big endian)
    u8   type label byte: one of b"ABCDEFG"
    u8   rank
    i32  highest weight coordinates (rank of them)
    u32  number of dominant weights
    repeated: i32 coords (rank of them), u16 byte count, unsigned big-endian multiplicity

Exceptional types are told apart by their rank. A truncated trailing record,
left behind by an interrupted writer, is ignored on load.
"""

from __future__ import annotations

import os
import struct
import threading
from pathlib import Path

ENV_VAR = "VERLINDE_CACHE_DIR"
FILENAME = "characters.bin"

_lock = threading.Lock()

Key = tuple[str, int, tuple[int, ...]]


def cache_path() -> Path | None:
    root = os.environ.get(ENV_VAR)
    if not root:
        return None
    return Path(root) / FILENAME


def _label_byte(type_label: str) -> bytes:
    return type_label[0].encode("ascii")


def _full_label(byte: int, rank: int) -> str:
    letter = chr(byte)
    if letter in "EFG":
        return f"{letter}{rank}"
    return letter


def encode_record(type_label: str, rank: int, weight: tuple[int, ...], entries: dict) -> bytes:
    body = bytearray()
    body += _label_byte(type_label)
    body += struct.pack(">B", rank)
    body += struct.pack(f">{rank}i", *weight)
    body += struct.pack(">I", len(entries))
    for mu, mult in sorted(entries.items()):
        body += struct.pack(f">{rank}i", *mu)
        raw = int(mult).to_bytes(max(1, (int(mult).bit_length() + 7) // 8), "big")
        body += struct.pack(">H", len(raw)) + raw
    return struct.pack(">I", len(body)) + bytes(body)


def decode_records(data: bytes) -> dict[Key, dict[tuple[int, ...], int]]:
    out: dict[Key, dict[tuple[int, ...], int]] = {}
    pos = 0
    while pos + 4 <= len(data):
        (size,) = struct.unpack_from(">I", data, pos)
        if pos + 4 + size > len(data):
            break
        rec = data[pos + 4 : pos + 4 + size]
        pos += 4 + size
        off = 0
        label_byte = rec[off]
        rank = rec[off + 1]
        off += 2
        weight = struct.unpack_from(f">{rank}i", rec, off)
        off += 4 * rank
        (count,) = struct.unpack_from(">I", rec, off)
        off += 4
        entries = {}
        for _ in range(count):
            mu = struct.unpack_from(f">{rank}i", rec, off)
            off += 4 * rank
            (nbytes,) = struct.unpack_from(">H", rec, off)
            off += 2
            entries[tuple(mu)] = int.from_bytes(rec[off : off + nbytes], "big")
            off += nbytes
        out[(_full_label(label_byte, rank), rank, tuple(weight))] = entries
    return out


def load() -> dict[Key, dict[tuple[int, ...], int]]:
    path = cache_path()
    if path is None or not path.exists():
        return {}
    with _lock:
        return decode_records(path.read_bytes())


def store(type_label: str, rank: int, weight: tuple[int, ...], entries: dict) -> None:
    path = cache_path()
    if path is None:
        return
    record = encode_record(type_label, rank, weight, entries)
    with _lock:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "ab") as fh:
            fh.write(record)
