# Copyright 2026 The hitchin-toolkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
"""Entry point of the ``hitchin-toolkit`` console script."""
import sys

from oslo_config import cfg
from oslo_log import log as logging

from hitchin_toolkit.cli import base
from hitchin_toolkit.cli import commands
from hitchin_toolkit import config

LOG = logging.getLogger(__name__)
CONF = config.CONF

command_opt = cfg.SubCommandOpt('command',
                                title='Commands',
                                help='Available commands',
                                handler=commands.add_command_parsers)


def register_cli_opts(conf=CONF):
    try:
        conf.register_cli_opt(command_opt)
    except cfg.DuplicateOptError:
        pass


def main(argv=None, default_config_files=None):
    """Run one sub-command and return its exit code.

    Usage errors raised by argparse leave with status 2 on their own.
    """
    # drop the arguments of an earlier call in the same process
    CONF.clear()
    register_cli_opts(CONF)
    logging.register_options(CONF)
    argv = sys.argv[1:] if argv is None else argv
    try:
        CONF(argv, project='hitchin-toolkit',
             version=base.tool_version(),
             default_config_files=default_config_files)
    except cfg.Error as e:
        LOG.error('Configuration error: %s', e)
        return base.EXIT_USAGE
    logging.setup(CONF, 'hitchin-toolkit')
    LOG.debug('Running %s', CONF.command.name)
    return CONF.command.func(CONF.command)


if __name__ == '__main__':
    sys.exit(main())
