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

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from common.config import Config  # noqa: E402
from services.classifier import Classifier  # noqa: E402
from services.engine import PlethysmEngine  # noqa: E402
from services.oracle import PowerSumOracle  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the desk-scale sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale sweep, only run with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def config():
    return Config.get_instance()


@pytest.fixture(scope="session")
def engine(config):
    return PlethysmEngine(config)


@pytest.fixture(scope="session")
def oracle(config):
    return PowerSumOracle(config)


@pytest.fixture(scope="session")
def classifier(engine, config):
    return Classifier(engine, config)
