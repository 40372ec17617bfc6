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

import configparser
import os

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CONFIG_PATH = os.path.join(ROOT_DIR, "config.ini")

# Singleton config class
class Config:
    __instance = None

    @staticmethod
    def get_instance():
        if Config.__instance is None:
            Config()
        return Config.__instance

    def __init__(self):
        if Config.__instance is not None:
            raise Exception("This class is a singleton!")
        else:
            Config.__instance = self
            self.config = {}
            self.read_config()

    def read_config(self, path=CONFIG_PATH):
        with open(path, mode='r') as file:
            config = configparser.ConfigParser(interpolation=None)
            config.read_file(file)
            self.config = config

    def get_property(self, section, key, fallback=None):
        if not self.config.has_option(section, key):
            return fallback
        return self.config.get(section, key).strip('"')

    def get_int(self, section, key, fallback=None):
        value = self.get_property(section, key)
        return fallback if value is None else int(value)

    def get_bool(self, section, key, fallback=False):
        value = self.get_property(section, key)
        if value is None:
            return fallback
        return value.strip().lower() in ("1", "true", "yes", "on")

    def resolve_path(self, section, key):
        """Returns a configured path, interpreted relative to the repository root."""
        value = self.get_property(section, key)
        if value is None or os.path.isabs(value):
            return value
        return os.path.join(ROOT_DIR, value)
