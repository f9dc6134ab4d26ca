#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



class About:

    PROGRAM = "pdd"

    VERSION = "0.1.0"

    LICENSE = "MIT"

    COPYRIGHT = "Copyright (C) 2026 The PDD Graph developers"

    DESCRIPTION = "Link EMR drugs and diseases to biomedical knowledge graphs"
