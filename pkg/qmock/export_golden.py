import os
import re

from qmock import cli
from qmock.export import export


def _default_name(command_args):
    name = '_'.join(a.lstrip('-') for a in command_args)
    return re.sub(r'[^0-9A-Za-z_]+', '-', name)


def export_golden(command_args, out_dir, name=None):
    """Runs a computing command and saves its result as golden files.

    The document is written twice, as ``<name>.json`` and ``<name>.csv``,
    so that both serializations can be compared with later runs.

    Args:
        command_args (list): Command line of a computing command, e.g.
            ``['theta', '--N', '2', '--nu', '1']``. Its ``--format`` and
            ``--out`` flags are ignored.
        out_dir (str): Directory of the golden files, created if needed.
        name (str): Base name of the files. Derived from the command line
            when omitted.

    Returns:
        list: Paths of the written files.
    """
    args = cli.build_parser().parse_args(list(command_args))
    document = cli.run_document_command(args)
    if name is None:
        name = _default_name(command_args)
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for fmt in ('json', 'csv'):
        path = os.path.join(out_dir, '{}.{}'.format(name, fmt))
        export(document, filename=path, fmt=fmt)
        paths.append(path)
    return paths
