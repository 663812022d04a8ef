import csv
from fractions import Fraction
import io
import json
import os
import tempfile

import pkg_resources

from qmock.qseries import RationalQSeries
from qmock.qseries import VectorQSeries


FORMATS = ('json', 'csv')
KINDS = ('vector', 'series', 'record', 'table')

_CSV_HEADER = ['component', 'exponent', 'coefficient']


def tool_version():
    try:
        return pkg_resources.get_distribution('qmock').version
    except pkg_resources.DistributionNotFound:
        return 'unknown'


def format_rational(value):
    """Exact text of a rational: ``'p/q'`` in lowest terms or ``'p'``."""
    return str(Fraction(value))


def parse_rational(text):
    return Fraction(text)


class OutputDocument(object):

    def __init__(self, command, parameters, payload, metadata=None,
                 version=None):
        """A computed coefficient table together with its provenance.

        Arguments:
            command (str): Name of the command that computed the payload.
            parameters (dict): Arguments of the command; values are
                ``str``, ``int`` or ``None``.
            payload: A ``VectorQSeries``, a ``RationalQSeries``, a
                ``dict`` of plain values or a ``list`` of rows, each a
                ``dict`` of rationals with the same keys.
            metadata (dict): Extra description of the payload. Defaults to
                the metadata carried by a vector series.
            version (str): Version of the tool. Defaults to the installed
                version.
        """

        if isinstance(payload, VectorQSeries):
            kind = 'vector'
            if metadata is None:
                metadata = payload.metadata
        elif isinstance(payload, RationalQSeries):
            kind = 'series'
        elif isinstance(payload, dict):
            kind = 'record'
        elif isinstance(payload, list):
            kind = 'table'
        else:
            raise TypeError(
                'Cannot export a payload of type {}'.format(type(payload)))
        self.command = command
        self.parameters = dict(parameters)
        self.payload = payload
        self.kind = kind
        self.metadata = _plain(metadata or {})
        self.version = tool_version() if version is None else version

    def header(self):
        header = {
            'tool': 'qmock',
            'version': self.version,
            'command': self.command,
            'parameters': _plain(self.parameters),
            'metadata': self.metadata,
            'kind': self.kind,
        }
        if self.kind == 'vector':
            f = self.payload
            header['series'] = {
                'level': f.level,
                'weight': format_rational(f.weight),
                'sign': f.sign,
                'rep': f.rep,
                'cutoff': format_rational(f.cutoff),
            }
        elif self.kind == 'series':
            header['series'] = {
                'cutoff': format_rational(self.payload.cutoff)}
        elif self.kind == 'table':
            header['columns'] = list(self.payload[0]) if self.payload else []
        return header

    def rows(self):
        """``(component, exponent, coefficient)`` rows of a series payload.

        The component is ``None`` for a scalar series.
        """
        if self.kind == 'vector':
            for h, component in enumerate(self.payload.components):
                for e, c in component.items():
                    yield h, e, c
        elif self.kind == 'series':
            for e, c in self.payload.items():
                yield None, e, c

    def __eq__(self, other):
        if not isinstance(other, OutputDocument):
            return NotImplemented
        return (self.header() == other.header() and
                list(self.rows()) == list(other.rows()) and
                (self.kind != 'record' or
                 _plain(self.payload) == _plain(other.payload)) and
                (self.kind != 'table' or
                 _table_rows(self) == _table_rows(other)))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return 'OutputDocument(command={}, kind={})'.format(
            self.command, self.kind)


def _plain(value):
    # JSON-compatible copy; rationals become exact strings
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Fraction):
        return format_rational(value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def _table_rows(document):
    columns = document.header()['columns']
    return [[format_rational(row[c]) for c in columns]
            for row in document.payload]


def _emit_json(document):
    content = document.header()
    if document.kind == 'vector':
        content['components'] = {
            str(h): [[format_rational(e), format_rational(c)]
                     for e, c in component.items()]
            for h, component in enumerate(document.payload.components)}
    elif document.kind == 'series':
        content['coefficients'] = [
            [format_rational(e), format_rational(c)]
            for e, c in document.payload.items()]
    elif document.kind == 'table':
        content['rows'] = _table_rows(document)
    else:
        content['record'] = _plain(document.payload)
    return json.dumps(content, indent=2, sort_keys=True,
                      ensure_ascii=False) + '\n'


def _emit_csv(document):
    stream = io.StringIO()
    for key, value in sorted(document.header().items()):
        stream.write('# {}={}\n'.format(
            key, json.dumps(value, sort_keys=True, ensure_ascii=False)))
    writer = csv.writer(stream, lineterminator='\n')
    if document.kind == 'table':
        writer.writerow(document.header()['columns'])
        writer.writerows(_table_rows(document))
    elif document.kind == 'record':
        writer.writerow(['field', 'value'])
        for key, value in sorted(_plain(document.payload).items()):
            writer.writerow([key, json.dumps(value, ensure_ascii=False)])
    else:
        writer.writerow(_CSV_HEADER)
        for h, e, c in document.rows():
            writer.writerow([
                '' if h is None else h, format_rational(e),
                format_rational(c)])
    return stream.getvalue()


def emit(document, fmt='json'):
    if fmt == 'json':
        return _emit_json(document)
    if fmt == 'csv':
        return _emit_csv(document)
    raise ValueError('Unknown format {}; expected one of {}'.format(
        fmt, ', '.join(FORMATS)))


def _build_document(header, rows, record):
    kind = header['kind']
    if kind == 'record':
        payload = record
    elif kind == 'table':
        payload = [dict(zip(header['columns'], row)) for row in rows]
    elif kind == 'series':
        cutoff = parse_rational(header['series']['cutoff'])
        terms = {}
        for _, e, c in rows:
            terms[e] = c
        payload = RationalQSeries(terms, cutoff=cutoff)
    elif kind == 'vector':
        info = header['series']
        level = info['level']
        cutoff = parse_rational(info['cutoff'])
        terms = [{} for _ in range(2 * level)]
        for h, e, c in rows:
            terms[h][e] = c
        payload = VectorQSeries(
            level, [RationalQSeries(t, cutoff=cutoff) for t in terms],
            parse_rational(info['weight']), info['sign'], rep=info['rep'],
            metadata=header['metadata'])
    else:
        raise ValueError('Unknown payload kind {}; expected one of {}'.format(
            kind, ', '.join(KINDS)))
    return OutputDocument(
        header['command'], header['parameters'], payload,
        metadata=header['metadata'], version=header['version'])


def _parse_json(text):
    content = json.loads(text)
    rows = []
    if content['kind'] == 'vector':
        for h, pairs in content['components'].items():
            for e, c in pairs:
                rows.append((int(h), parse_rational(e), parse_rational(c)))
    elif content['kind'] == 'series':
        for e, c in content['coefficients']:
            rows.append((None, parse_rational(e), parse_rational(c)))
    elif content['kind'] == 'table':
        rows = [[parse_rational(v) for v in row] for row in content['rows']]
    return _build_document(content, rows, content.get('record'))


def _parse_csv(text):
    header = {}
    body = []
    for line in text.splitlines():
        if line.startswith('# '):
            key, _, value = line[2:].partition('=')
            header[key] = json.loads(value)
        elif line:
            body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    rows = []
    record = None
    if header.get('kind') == 'table':
        rows = [[parse_rational(v) for v in row] for row in reader]
    elif columns == ['field', 'value']:
        record = {key: json.loads(value) for key, value in reader}
    elif columns == _CSV_HEADER:
        for h, e, c in reader:
            rows.append((int(h) if h else None, parse_rational(e),
                         parse_rational(c)))
    else:
        raise ValueError('Unexpected CSV columns: {}'.format(columns))
    return _build_document(header, rows, record)


def parse(text, fmt='json'):
    """Inverse of ``emit``."""
    if fmt == 'json':
        return _parse_json(text)
    if fmt == 'csv':
        return _parse_csv(text)
    raise ValueError('Unknown format {}; expected one of {}'.format(
        fmt, ', '.join(FORMATS)))


def write_atomic(filename, text):
    """Writes ``text`` to ``filename`` through a temporary file in the same
    directory, so readers never see a partial file."""
    directory = os.path.dirname(os.path.abspath(filename))
    fd, tmp_name = tempfile.mkstemp(
        dir=directory, prefix='.' + os.path.basename(filename) + '.')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as fp:
            fp.write(text)
        os.replace(tmp_name, filename)
    except BaseException:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise


def export(document, filename=None, fmt='json'):
    """Serializes a document and optionally saves it.

    Args:
        document (OutputDocument): The document.
        filename (str or file-like object): Where the text is written. A
            filename is replaced atomically; a file-like object receives
            the text through ``write``. Nothing is written when None.
        fmt (str): ``json`` or ``csv``.

    Returns:
        str: The serialized text.
    """
    text = emit(document, fmt)
    if filename is not None and isinstance(filename, str):
        write_atomic(filename, text)
    elif hasattr(filename, 'write'):
        filename.write(text)
    return text
