"""
Workbench module for bfs-hvs.

Provides the main interface for loading structure documents and running the
engine's operations on their named definitions.
"""

import logging
from pathlib import Path
from typing import List, Optional, Sequence, Union

from .algebra.checkers import CrossCheck, Verdict, check_bfs_hvs, cross_check
from .algebra.constructions import (
    GeneratedBfsHvs,
    characteristic_bfs,
    generate_bfs_hvs,
    is_normal,
    level_promote,
    normalize,
)
from .algebra.fuzzy import (
    BipolarFuzzySoftSet,
    LevelSoftSet,
    bfs_negate,
    bfs_scalar,
    bfs_sum,
    level_soft_set,
)
from .algebra.oracle import SuiteReport, equivalence_suite
from .algebra.space import (
    AxiomReport,
    HyperVectorSpace,
    VectorSubset,
    enumerate_subhyperspaces,
    span,
)
from .algebra.utils.rational_utils import GradeLike
from .dsl import Document, parse_document, read_document
from .exceptions import BfsHvsError, NameNotFoundError
from .types import (
    CharacteristicVariant,
    CheckMethod,
    EngineLimits,
    NormalizeMode,
    SuiteConfig,
)

logger = logging.getLogger(__name__)


class Workbench:
    """
    Main workbench class for bfs-hvs.

    Wraps one structure document and resolves names for every operation.
    Derived soft sets are returned together with the document context they
    need to be written back out.
    """

    def __init__(
        self,
        path: Optional[Union[str, Path]] = None,
        limits: Optional[EngineLimits] = None,
    ):
        """
        Initialize the workbench.

        Args:
            path: Structure document to read on ``load``
            limits: Capacity limits for exhaustive scans
        """
        self._path: Optional[Path] = Path(path) if path is not None else None
        self._limits: EngineLimits = limits or EngineLimits()
        self._document: Optional[Document] = None

    def load(self) -> "Workbench":
        """Read and parse the document given at construction."""
        if self._path is None:
            raise BfsHvsError("Workbench has no document path")
        self._document = read_document(self._path)
        logger.debug("Loaded %s", self._path)
        return self

    def load_text(self, text: str) -> "Workbench":
        self._document = parse_document(text)
        return self

    @property
    def document(self) -> Document:
        if self._document is None:
            raise BfsHvsError("No document loaded. Call load() first.")
        return self._document

    def space(self, name: str) -> HyperVectorSpace:
        return self.document.get_space(name)

    def bfs(self, name: str) -> BipolarFuzzySoftSet:
        return self.document.get_bfs(name)

    def subset(self, space_name: str, ids: Sequence[str]) -> VectorSubset:
        return self.space(space_name).subset(ids)

    def check_space(self, name: str) -> AxiomReport:
        return self.space(name).axioms

    def check_bfs(
        self, name: str, method: CheckMethod = "direct", require_hvs: bool = False
    ) -> Verdict:
        return check_bfs_hvs(self.bfs(name), method, require_hvs)

    def cross_check(self, name: str, require_hvs: bool = False) -> CrossCheck:
        return cross_check(self.bfs(name), require_hvs=require_hvs)

    def level(self, name: str, alpha: GradeLike, beta: GradeLike) -> LevelSoftSet:
        return level_soft_set(self.bfs(name), alpha, beta)

    def span(self, space_name: str, ids: Sequence[str]) -> VectorSubset:
        return span(self.space(space_name), self.subset(space_name, ids))

    def enumerate_subhyperspaces(self, space_name: str) -> List[VectorSubset]:
        return enumerate_subhyperspaces(self.space(space_name), self._limits)

    def sum(self, left: str, right: str) -> BipolarFuzzySoftSet:
        return bfs_sum(self.bfs(left), self.bfs(right))

    def scale(self, name: str, scalar: str) -> BipolarFuzzySoftSet:
        G = self.bfs(name)
        return bfs_scalar(G.space.field.index(scalar), G)

    def negate(self, name: str) -> BipolarFuzzySoftSet:
        return bfs_negate(self.bfs(name))

    def generate(self, name: str) -> GeneratedBfsHvs:
        return generate_bfs_hvs(self.bfs(name))

    def normalize(
        self, name: str, mode: NormalizeMode = "shift", strict: bool = False
    ) -> BipolarFuzzySoftSet:
        return normalize(self.bfs(name), mode, strict)

    def is_normal(self, name: str) -> bool:
        return is_normal(self.bfs(name))

    def promote(
        self, name: str, param: str, alpha: GradeLike, beta: GradeLike
    ) -> BipolarFuzzySoftSet:
        return level_promote(self.bfs(name), param, alpha, beta)

    def characteristic(
        self,
        space_name: str,
        ids: Sequence[str],
        params: Sequence[str],
        variant: CharacteristicVariant = "pos",
    ) -> BipolarFuzzySoftSet:
        space = self.space(space_name)
        return characteristic_bfs(space, space.subset(ids), params, variant)

    def verify(
        self, space_name: str, config: Optional[SuiteConfig] = None
    ) -> SuiteReport:
        config = config or SuiteConfig(limits=self._limits)
        return equivalence_suite(self.space(space_name), config=config)

    def space_name_of(self, bfs: BipolarFuzzySoftSet) -> str:
        """Name of the document space a soft set lives on."""
        for name, space in self.document.spaces.items():
            if space == bfs.space:
                return name
        raise NameNotFoundError("Soft set lives on no space of this document")

    def derived_document(
        self, result_name: str, bfs: BipolarFuzzySoftSet
    ) -> Document:
        """A document holding ``bfs`` as ``result_name`` with its space and field."""
        out = self.document.context(self.space_name_of(bfs))
        out.add_bfs(result_name, bfs, self.space_name_of(bfs))
        return out


def open_workbench(
    path: Union[str, Path], limits: Optional[EngineLimits] = None
) -> Workbench:
    """
    Create and return a loaded workbench.

    Args:
        path: Structure document to read
        limits: Capacity limits for exhaustive scans

    Returns:
        Workbench instance
    """
    return Workbench(path, limits).load()
