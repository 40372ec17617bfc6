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

import csv
import logging
from concurrent.futures import ProcessPoolExecutor

from common.config import Config
from common.errors import BudgetExceededError, PreconditionError
from common.partitions import partitions_of
from models.partition import Partition
from models.record import OutputRecord
from services.domino import enumerate_dom, render_ascii, symmetric_square_split
from services.engine import PlethysmEngine

_worker_engine = None


def _init_worker(max_degree):
    global _worker_engine
    _worker_engine = PlethysmEngine(Config.get_instance(), max_degree)


def _worker_max(pair):
    nu, mu = pair
    return _worker_engine.max_multiplicity(nu, mu)


def table_pairs(max_total):
    """(ν, μ) with 2 ≤ |ν|+|μ| ≤ max_total, by total, then |ν|, then ν and μ lex-descending."""
    pairs = []
    for total in range(2, max_total + 1):
        for n in range(1, total):
            for nu in partitions_of(n):
                for mu in partitions_of(total - n):
                    pairs.append((nu, mu))
    return pairs


def load_golden(path):
    """Reads `ν<TAB>μ<TAB>p` lines; blank lines and lines starting with # are skipped."""
    golden = {}
    with open(path, mode='r', newline='') as file:
        for row in csv.reader(file, delimiter='\t'):
            if not row or row[0].startswith("#"):
                continue
            golden[(Partition.parse(row[0]), Partition.parse(row[1]))] = int(row[2])
    return golden


class Commands:
    """The CLI subcommands, each returning an OutputRecord."""

    def __init__(self, engine, oracle, classifier, config_service, threads=None):
        """
        Args:
            engine: PlethysmEngine for every coefficient.
            oracle: PowerSumOracle used by the --oracle cross-checks.
            classifier: Classifier for verdicts and witnesses.
            config_service: Service to get configuration values.
            threads: Worker processes for `table`; the [cli] setting when None.
        """
        self.engine = engine
        self.oracle = oracle
        self.classifier = classifier
        self.config_service = config_service
        self.threads = threads or config_service.get_int("cli", "threads", 1)
        self.domino_max_degree = config_service.get_int("domino", "max_degree", 12)

    def _agrees(self, label, ours, theirs):
        agrees = ours == theirs
        if not agrees:
            logging.warning("%s: engine and oracle disagree", label)
        return agrees

    def cmd_expand(self, nu, mu, oracle=False):
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        expansion = self.engine.plethysm_expand(nu, mu)
        agrees = None
        if oracle:
            agrees = self._agrees(f"s_{nu}∘s_{mu}", expansion, self.oracle.plethysm_expand_powersum(nu, mu))
        return OutputRecord("expand", {"nu": nu.to_list(), "mu": mu.to_list()}, expansion.to_dict(), agrees)

    def cmd_coeff(self, nu, mu, lam, oracle=False):
        nu, mu, lam = Partition.coerce(nu), Partition.coerce(mu), Partition.coerce(lam)
        value = self.engine.plethysm_coefficient(nu, mu, lam)
        agrees = None
        if oracle:
            other = self.oracle.plethysm_expand_powersum(nu, mu).coefficient(lam)
            agrees = self._agrees(f"p({nu} | {mu} | {lam})", value, other)
        inputs = {"nu": nu.to_list(), "mu": mu.to_list(), "lambda": lam.to_list()}
        return OutputRecord("coeff", inputs, {"coeff": str(value)}, agrees)

    def cmd_mf(self, nu, mu):
        verdict = self.classifier.is_multiplicity_free(nu, mu)
        result = {"verdict": verdict.verdict, "clause": verdict.clause, "detail": verdict.detail}
        return OutputRecord("mf", {"nu": verdict.nu.to_list(), "mu": verdict.mu.to_list()}, result)

    def cmd_witness(self, nu, mu):
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        certificate = self.classifier.witness(nu, mu)
        result = {"certificate": None if certificate is None else certificate.to_dict()}
        return OutputRecord("witness", {"nu": nu.to_list(), "mu": mu.to_list()}, result)

    def cmd_domino(self, mu, render=False, oracle=False):
        """Both halves of s_μ⊠s_μ read off the spins of Dom(μ, ·)."""
        mu = Partition.coerce(mu)
        plus, minus = symmetric_square_split(mu, self.domino_max_degree)
        result = {"plus": plus.to_dict()["terms"], "minus": minus.to_dict()["terms"]}
        if render:
            result["renders"] = [
                f"weight {tableau.weight()}\n{render_ascii(tableau)}" for tableau in enumerate_dom(mu)
            ]
        agrees = None
        if oracle:
            agrees = (
                self._agrees(f"s_(2)∘s_{mu}", plus, self.engine.plethysm_expand((2,), mu))
                and self._agrees(f"s_(1,1)∘s_{mu}", minus, self.engine.plethysm_expand((1, 1), mu))
            )
        return OutputRecord("domino", {"mu": mu.to_list()}, result, agrees)

    def cmd_table(self, max_total, check=False):
        """p(ν, μ) for every pair with |ν|+|μ| ≤ max_total."""
        max_total = int(max_total)
        if max_total < 2:
            raise PreconditionError(f"table needs a total size of at least 2, got {max_total}")
        worst = (max_total // 2) * ((max_total + 1) // 2)
        if worst > self.engine.max_degree:
            raise BudgetExceededError(f"table up to |ν|+|μ| = {max_total}", worst, self.engine.max_degree)
        pairs = table_pairs(max_total)
        logging.info("table: %d pairs on %d worker(s)", len(pairs), self.threads)
        if self.threads > 1:
            with ProcessPoolExecutor(self.threads, initializer=_init_worker,
                                     initargs=(self.engine.max_degree,)) as executor:
                values = list(executor.map(_worker_max, pairs, chunksize=8))
        else:
            values = [self.engine.max_multiplicity(nu, mu) for nu, mu in pairs]
        rows = [
            {"nu": nu.to_list(), "mu": mu.to_list(), "p": str(value)}
            for (nu, mu), value in zip(pairs, values)
        ]
        result = {"rows": rows}
        if check:
            golden = load_golden(self.config_service.resolve_path("cli", "golden_table"))
            mismatches = [
                (nu, mu) for (nu, mu), value in zip(pairs, values)
                if (nu, mu) in golden and golden[(nu, mu)] != value
            ]
            for nu, mu in mismatches:
                logging.error("table: p(%s | %s) differs from the golden value", nu, mu)
            result["golden_agrees"] = not mismatches
        return OutputRecord("table", {"max_total": max_total}, result)
