"""Configuration utilities.

Contents
--------

:get_parser: Creates an ``ArgumentParser`` with common arguments.
:merge: Merges configuration dictionaries.
:read_args: Returns a ``dict`` of arguments from an ArgumentParser.
:read_file: Reads serialized JSON configuration from a file.
:write_file: Writes configuration as serialized JSON to a file.
"""

import argparse
import json
import os

CONFIG_FILE = "hiwalks.json"
"""Default name of a configuration file in the working directory."""


def get_parser(description, parents=[]):
    """Get an argument parser with common arguments created."""

    parser = argparse.ArgumentParser(description=description, parents=parents)

    parser.add_argument("--config-file", "-cfg",
                        help="Path to a JSON configuration file")

    return parser


def merge(root_config, *args):
    """Merge configuration dictionaries, later ones winning.

    ``None`` values never override anything.
    """

    root = root_config.copy()

    for arg in args:
        clean = {k: v for k, v in arg.items() if v is not None}
        root.update(clean)
    return root


def read_args(parser, argv=None):
    """Return a ``dict`` of the arguments in ``argv`` that are not ``None``.

    ``argv`` defaults to ``sys.argv[1:]``, as in ``parser.parse_args``.
    """
    args = parser.parse_args(argv)
    return {k: v for k, v in vars(args).items() if v is not None}


def write_file(config):
    """Writes configuration to a JSON file.

    The filepath is read from the "config_file" key. Values JSON cannot hold
    are written as strings.
    """
    data = json.dumps(config, indent=4, separators=(',', ': '), default=str,
                      sort_keys=True)
    with open(config["config_file"], "w") as handle:
        handle.write(data)


def read_file(args):
    """Read configuration from a JSON file.

    The filepath is read from the "config_file" key, falling back to
    ``hiwalks.json`` in the working directory. A missing default file gives
    an empty configuration.
    """
    if "config_file" in args:
        config_file = args["config_file"]
    else:
        config_file = os.path.join(os.getcwd(), CONFIG_FILE)
        if not os.path.exists(config_file):
            return {}

    with open(config_file, "r") as infile:
        return json.loads(infile.read())
