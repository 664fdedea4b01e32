"""Recorder writing bench rows to an HDF5 file."""

from pathlib import Path
from typing import Mapping

import h5py
import numpy as np

COLUMNS = ("n", "m", "wall_time", "visited", "phases", "edge_scans")


class BenchRecorder:
    """
    Append bench rows to the resizable ``rows`` dataset of an HDF5 file.

    Rows are buffered and written in chunks of `chunk_size`; the dataset is
    trimmed to the number of rows actually recorded on `close`. Column names
    and any `attrs` (family, kind, seed, ...) are stored as dataset attributes.
    """

    def __init__(
        self,
        filename: Path | str,
        chunk_size: int = 64,
        attrs: Mapping[str, str | int | float] | None = None,
    ):
        self.filename = filename
        self.chunk_size = chunk_size
        self.attrs = dict(attrs or {})
        self.rows = 0

        self.file: h5py.File | None = None
        self.dset: h5py.Dataset | None = None
        self.buffer = np.empty((chunk_size, len(COLUMNS)))

    def open(self) -> "BenchRecorder":
        self.rows = 0
        self.file = h5py.File(self.filename, "w")
        self.dset = self.file.create_dataset(
            "rows",
            (0, len(COLUMNS)),
            maxshape=(None, len(COLUMNS)),
            dtype="f8",
        )
        self.dset.attrs["columns"] = list(COLUMNS)
        for key, value in self.attrs.items():
            self.dset.attrs[key] = value
        return self

    def append(self, row: tuple[float, ...]) -> None:
        assert self.dset is not None, "BenchRecorder.open() must be called first"
        self.buffer[self.rows % self.chunk_size, :] = row
        self.rows += 1
        if self.rows % self.chunk_size == 0:
            self._append_buffer_to_h5()

    def close(self) -> None:
        if self.file is None:
            return
        self._append_buffer_to_h5()
        self.dset.resize(self.rows, axis=0)
        self.file.close()
        self.file = None

    def __enter__(self) -> "BenchRecorder":
        return self.open()

    def __exit__(self, *_) -> None:
        self.close()

    def _append_buffer_to_h5(self) -> None:
        """
        Append the buffered rows not yet written to the HDF5 dataset.
        """
        written = self.dset.shape[0]
        pending = self.rows - written
        if pending <= 0:
            return
        self.dset.resize(self.rows, axis=0)
        start = written % self.chunk_size
        self.dset[written:, :] = self.buffer[start : start + pending]


def read_rows(filename: Path | str) -> np.ndarray:
    """Load the ``rows`` dataset written by `BenchRecorder`."""
    with h5py.File(filename, "r") as file:
        return file["rows"][()]
