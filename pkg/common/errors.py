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

class PlethysmError(Exception):
    """Base class for every error raised by the toolkit."""
    exit_code = 4


class PartitionParseError(PlethysmError, ValueError):
    exit_code = 2


class SizeMismatchError(PlethysmError, ValueError):
    exit_code = 2


class ShapeError(PlethysmError, ValueError):
    exit_code = 2


class PreconditionError(PlethysmError, ValueError):
    exit_code = 2


class BudgetExceededError(PlethysmError):
    """Raised when a computation would exceed a configured size cap."""
    exit_code = 3

    def __init__(self, what, degree, cap):
        super().__init__(f"{what}: degree {degree} exceeds the configured cap {cap}")
        self.what = what
        self.degree = degree
        self.cap = cap


class InternalConsistencyError(PlethysmError):
    """An invariant that only an implementation bug can break was violated."""
    exit_code = 4
