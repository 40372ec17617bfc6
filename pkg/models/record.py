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

import json

# keys of a serialized record that echo the command's inputs
INPUT_KEYS = ("nu", "mu", "lambda", "max_total")


class OutputRecord:
    """What one CLI command produced, flattened into a single JSON object.

    The inputs and the result payload share the top level, e.g.
    {"command": "expand", "nu": [2], "mu": [2], "terms": [...], "oracle_agrees": null}.
    """

    def __init__(self, command, inputs, result, oracle_agrees=None):
        self.command = command
        self.inputs = dict(inputs)
        self.result = dict(result)
        self.oracle_agrees = oracle_agrees

    def to_dict(self):
        data = {"command": self.command}
        data.update(self.inputs)
        data.update(self.result)
        data["oracle_agrees"] = self.oracle_agrees
        return data

    @classmethod
    def from_dict(cls, data):
        inputs = {k: data[k] for k in INPUT_KEYS if k in data}
        result = {k: v for k, v in data.items() if k not in inputs and k not in ("command", "oracle_agrees")}
        return cls(data["command"], inputs, result, data.get("oracle_agrees"))

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __eq__(self, other):
        return isinstance(other, OutputRecord) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)
