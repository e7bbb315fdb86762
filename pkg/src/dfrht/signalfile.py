# dfrht/signalfile.py
#
# Signal and matrix files: CSV (one value, or "re,im", per line) and JSON.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations
from typing import Dict, List, Optional, Type

import csv, io, json, math, os
from collections import OrderedDict

import numpy as np

from dfrht import error
from dfrht.signal import Signal

def fmt(x: float) -> str:
    """Shortest decimal that reads back as the same double."""
    return repr(float(x))

def _finite(s: str, where: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise error.FormatError('%s: cannot parse %r as a number'
                                % (where, s)) from None
    error.check(math.isfinite(v), '%s: non-finite value %r' % (where, s),
                error.FormatError)
    return v


class SignalFile:
    """Base class for signal file formats. Subclasses parse and produce
    text; the base class deals with files.
    """

    name = ''

    def __init__(self, path: str) -> None:
        self.path = path

    ## Reading

    @classmethod
    def from_file(cls, path: str) -> Signal:
        try:
            with open(path, 'r') as f:
                text = f.read()
        except OSError as err:
            raise error.FormatError('%s: %s' % (path, err.strerror)) from None
        values = cls(path).parse(text)
        error.check(len(values) > 0, '%s: no values' % path, error.FormatError)
        return values

    def parse(self, text: str) -> Signal:
        raise NotImplementedError

    ## Writing

    @classmethod
    def to_file(cls, path: str, values: Signal,
                meta: Optional[Dict[str, object]] = None) -> None:
        text = cls(path).emit(np.asarray(values), meta or {})
        _write(path, text)

    def emit(self, values: np.ndarray, meta: Dict[str, object]) -> str:
        raise NotImplementedError

    def emit_matrix(self, m: np.ndarray, meta: Dict[str, object]) -> str:
        raise NotImplementedError

    @classmethod
    def matrix_to_file(cls, path: str, m: np.ndarray,
                       meta: Dict[str, object]) -> None:
        text = cls(path).emit_matrix(np.asarray(m), meta)
        _write(path, text)


def _write(path: str, text: str) -> None:
    try:
        with open(path, 'w', newline='') as f:
            f.write(text)
    except OSError as err:
        raise error.FormatError('%s: %s' % (path, err.strerror)) from None


def _values(rows: List[List[float]]) -> Signal:
    if all(len(r) == 1 for r in rows):
        return np.array([r[0] for r in rows], dtype=np.float64)
    return np.array([complex(*r) for r in rows], dtype=np.complex128)


class CSV(SignalFile):

    name = 'csv'

    def parse(self, text: str) -> Signal:
        rows = []
        for nr, cells in enumerate(csv.reader(io.StringIO(text)), 1):
            if not cells or all(not c.strip() for c in cells):
                continue
            where = '%s:%d' % (self.path, nr)
            error.check(len(cells) <= 2, '%s: expected one or two values, '
                        'got %d' % (where, len(cells)), error.FormatError)
            rows.append([_finite(c.strip(), where) for c in cells])
        return _values(rows)

    def emit(self, values: np.ndarray, meta: Dict[str, object]) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator='\n')
        for v in values:
            if np.iscomplexobj(values):
                w.writerow([fmt(v.real), fmt(v.imag)])
            else:
                w.writerow([fmt(v)])
        return out.getvalue()

    def emit_matrix(self, m: np.ndarray, meta: Dict[str, object]) -> str:
        # One matrix row per line: re,im of each cell in turn.
        out = io.StringIO()
        w = csv.writer(out, lineterminator='\n')
        for row in m:
            cells: List[str] = []
            for v in row:
                cells += [fmt(v.real), fmt(v.imag)]
            w.writerow(cells)
        return out.getvalue()


class JSON(SignalFile):

    name = 'json'

    def parse(self, text: str) -> Signal:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise error.FormatError('%s: %s' % (self.path, err)) from None
        if isinstance(obj, dict):
            error.check('values' in obj, '%s: no "values" member'
                        % self.path, error.FormatError)
            obj = obj['values']
        error.check(isinstance(obj, list), '%s: values must be a list'
                    % self.path, error.FormatError)
        rows = []
        for i, v in enumerate(obj):
            where = '%s: value %d' % (self.path, i)
            r = v if isinstance(v, list) else [v]
            error.check(1 <= len(r) <= 2
                        and all(isinstance(c, (int, float))
                                and not isinstance(c, bool) for c in r),
                        '%s: expected a number or [re, im]' % where,
                        error.FormatError)
            rows.append([_finite(repr(c), where) for c in r])
        return _values(rows)

    def emit(self, values: np.ndarray, meta: Dict[str, object]) -> str:
        if np.iscomplexobj(values):
            vals: list = [[float(v.real), float(v.imag)] for v in values]
        else:
            vals = [float(v) for v in values]
        return json.dumps(dict(meta, values=vals)) + '\n'

    def emit_matrix(self, m: np.ndarray, meta: Dict[str, object]) -> str:
        rows = [[[float(v.real), float(v.imag)] for v in row] for row in m]
        return json.dumps(dict(meta, rows=rows)) + '\n'


file_types: Dict[str, Type[SignalFile]] = OrderedDict(
    { '.csv': CSV,
      '.txt': CSV,
      '.json': JSON })

formats: Dict[str, Type[SignalFile]] = { 'csv': CSV, 'json': JSON }

def get_file_class(path: str,
                   format: Optional[str] = None) -> Type[SignalFile]:
    """The file class for an explicit format, else by file suffix."""
    if format is not None:
        error.check(format in formats, 'unknown format %r' % format)
        return formats[format]
    _, ext = os.path.splitext(path)
    error.check(ext.lower() in file_types,
                "%s: Unrecognised file suffix '%s'\nKnown suffixes: %s"
                % (path, ext, ', '.join(file_types)))
    return file_types[ext.lower()]

# Local variables:
# python-indent: 4
# End:
