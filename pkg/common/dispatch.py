# Copyright 2024 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging

from common.errors import PreconditionError


def call_command(service, name, params):
    """Invokes `service.cmd_<name>(**params)`."""
    handler = getattr(service, "cmd_" + name, None)
    if handler is None:
        logging.error("Cannot dispatch unknown command %s", name)
        raise PreconditionError(f"unknown command {name!r}")
    logging.debug("Calling cmd_%s with %s", name, params)
    return handler(**params)
