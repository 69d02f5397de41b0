import csv
import json
import logging
import math
import os
from typing import Dict, Iterable, Mapping, Sequence

import numpy as np

from abel_inversion.constant.solver_constant import TableConstant
from abel_inversion.context_manager.output_file_context_manager import OutputFileContextManager
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.exception.parse_exception import ParseException
from abel_inversion.exception.table_not_found_exception import TableNotFoundException

logger = logging.getLogger(__name__)

Table = Dict[str, np.ndarray]


class TableRepository:
    """Column tables stored as UTF-8 CSV with a header row."""

    def read_table(self, path: str) -> Table:
        """Read every column of a CSV file as float arrays.

        Args:
            path (str): File to read

        Returns:
            Table: Column name to values, in header order; empty arrays for a header-only file

        Raises:
            TableNotFoundException: If the file does not exist
            ParseException: On a missing or duplicated header, ragged rows,
                non-numeric cells or NaN / infinite values
        """
        if not os.path.isfile(path):
            raise TableNotFoundException(f"Table not found: {path}")

        with open(path, encoding=TableConstant.ENCODING, newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if not header:
                raise ParseException(f"{path}: missing header row")
            names = [name.strip() for name in header]
            if len(set(names)) != len(names) or "" in names:
                raise ParseException(f"{path}:1: empty or duplicated column name in {names}")

            rows = []
            for row in reader:
                if not row:
                    continue
                if len(row) != len(names):
                    raise ParseException(
                        f"{path}:{reader.line_num}: expected {len(names)} cells, found {len(row)}"
                    )
                rows.append([self._parse_cell(cell, path, reader.line_num) for cell in row])

        values = np.array(rows, dtype=float).reshape(len(rows), len(names))
        logger.info(f"Read {len(rows)} rows of {names} from {path}")
        return {name: values[:, index].copy() for index, name in enumerate(names)}

    def write_table(self, columns: Mapping[str, Sequence[float]], path: str) -> None:
        """Write equal-length columns with 17 significant digits.

        Raises:
            InvalidArgumentException: On unequal lengths or non-finite values
        """
        names = list(columns)
        arrays = [np.asarray(columns[name], dtype=float) for name in names]
        lengths = {array.size for array in arrays}
        if len(lengths) > 1:
            raise InvalidArgumentException(f"Columns {names} differ in length: {sorted(lengths)}")
        if any(not np.all(np.isfinite(array)) for array in arrays):
            raise InvalidArgumentException(f"Refusing to write non-finite values to {path}")

        with OutputFileContextManager(path) as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(names)
            writer.writerows(self.format_rows(zip(*arrays)))

    def require_columns(self, table: Table, names: Iterable[str], path: str) -> None:
        missing = [name for name in names if name not in table]
        if missing:
            raise ParseException(f"{path}: missing column(s) {', '.join(missing)}")

    @staticmethod
    def format_rows(rows: Iterable[Sequence[float]]) -> Iterable[list]:
        for row in rows:
            yield [format(float(value), TableConstant.FLOAT_FORMAT) for value in row]

    @staticmethod
    def _parse_cell(cell: str, path: str, line: int) -> float:
        try:
            value = float(cell)
        except ValueError:
            raise ParseException(f"{path}:{line}: non-numeric cell {cell!r}") from None
        if not math.isfinite(value):
            raise ParseException(f"{path}:{line}: non-finite value {cell!r}")
        return value

    def write_metadata(self, metadata: Mapping[str, object], path: str) -> str:
        """Write run metadata as sorted, indented JSON to <path>.json.

        Returns:
            str: Path of the metadata file
        """
        target = f"{path}.json"
        with OutputFileContextManager(target) as handle:
            handle.write(json.dumps(metadata, indent=2, sort_keys=True))
            handle.write("\n")
        return target
