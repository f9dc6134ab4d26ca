#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.commands import Command, InvalidCommandLine
from pdd.core import Pdd
from pdd.ui import UI

from logging import basicConfig, getLevelName, WARNING

from os import environ

from sys import argv, stderr



LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]



def configure_logging(environment=None):
    environment = environ if environment is None else environment
    name = environment.get("PDD_LOG", "WARNING").strip().upper()
    level = getLevelName(name) if name in LOG_LEVELS else WARNING
    basicConfig(level=level,
                stream=stderr,
                format="%(levelname)s %(name)s: %(message)s")
    return level



def main(command_line=None):
    configure_logging()
    ui = UI()
    try:
        command = Command.extract_from(argv[1:] if command_line is None
                                       else command_line)
    except InvalidCommandLine as error:
        ui.invalid_command_line(error)
        return error.EXIT_STATUS
    return command.send_to(Pdd(ui))
