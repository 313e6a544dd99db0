"""
Plain CSV tables.  Floats are written with 17 significant digits so
that identical runs give byte-identical files.
"""
import csv

import numpy as np


def format_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f'{float(value):.17g}'
    return str(value)


def write_table(path, header, rows):
    """
    Writes a header row followed by the given rows
    """
    with open(path, "w", newline = "") as f:
        writer = csv.writer(f, lineterminator = "\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])


def read_table(path):
    """
    Returns the header and the rows (as strings)
    """
    with open(path, newline = "") as f:
        rows = list(csv.reader(f))
    return rows[0], rows[1:]
