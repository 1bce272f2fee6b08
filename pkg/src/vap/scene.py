"""Core value types shared by every stage of the pipeline.

All types are immutable after construction and safe to share across
workers. Pixel coordinates are (x, y) with the origin at the top-left
corner of the image; bounding boxes include both corner pixels, so a
1x1 box has ``x_min == x_max``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, InvalidEmbeddingError

NORM_TOL = 1e-6


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Embedding:
    """Unit-norm feature vector; construction normalizes the input."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise InvalidEmbeddingError("embedding must be a non-empty 1-d vector")
        if not np.all(np.isfinite(values)):
            raise InvalidEmbeddingError("embedding has non-finite entries")
        norm = float(np.linalg.norm(values))
        if norm == 0.0:
            raise InvalidEmbeddingError("cannot normalize a zero vector")
        object.__setattr__(self, "values", _frozen(values / norm))

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])

    def dot(self, other: "Embedding") -> float:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"embedding dims differ: {self.dim} vs {other.dim}")
        return float(self.values @ other.values)


def normalize(values: Iterable[float]) -> Embedding:
    """Project a raw vector onto the unit sphere.

    Raises InvalidEmbeddingError for zero vectors or non-finite entries.
    """
    return Embedding(np.asarray(values, dtype=np.float64))


@dataclass(frozen=True)
class BoundingBox:
    """Axis-aligned box with inclusive integer corners."""

    x_min: int
    y_min: int
    x_max: int
    y_max: int

    def __post_init__(self):
        for name in ("x_min", "y_min", "x_max", "y_max"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValueError(f"inverted box corners: {self}")

    @property
    def width(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def height(self) -> int:
        return self.y_max - self.y_min + 1

    def center(self) -> tuple[float, float]:
        return ((self.x_min + self.x_max) / 2.0, (self.y_min + self.y_max) / 2.0)

    def contains_point(self, x: float, y: float) -> bool:
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max

    def within_image(self, width: int, height: int) -> bool:
        return self.x_min >= 0 and self.y_min >= 0 and self.x_max < width and self.y_max < height


@dataclass(frozen=True, eq=False)
class Mask:
    """Dense binary occupancy grid, row-major, shape (height, width)."""

    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=bool)
        if bits.ndim != 2 or bits.shape[0] < 1 or bits.shape[1] < 1:
            raise ValueError("mask must be a 2-d grid with positive dimensions")
        object.__setattr__(self, "bits", _frozen(bits))

    @property
    def height(self) -> int:
        return int(self.bits.shape[0])

    @property
    def width(self) -> int:
        return int(self.bits.shape[1])

    @property
    def count(self) -> int:
        return int(self.bits.sum())

    def centroid(self) -> tuple[float, float]:
        """Mean (x, y) of set pixels; undefined for an empty mask."""
        ys, xs = np.nonzero(self.bits)
        if xs.size == 0:
            raise ValueError("centroid of an empty mask is undefined")
        return (float(xs.mean()), float(ys.mean()))

    def bounding_box(self) -> BoundingBox:
        """Tight box around set pixels; undefined for an empty mask."""
        ys, xs = np.nonzero(self.bits)
        if xs.size == 0:
            raise ValueError("bounding box of an empty mask is undefined")
        return BoundingBox(int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max()))


@dataclass(frozen=True, eq=False)
class RasterImage:
    """8-bit RGB raster, shape (height, width, 3)."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 3 or px.shape[2] != 3 or px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError("image must have shape (height, width, 3)")
        if px.dtype != np.uint8:
            if np.issubdtype(px.dtype, np.integer) and px.size and px.min() >= 0 and px.max() <= 255:
                px = px.astype(np.uint8)
            else:
                raise ValueError("pixel channels must be 8-bit values in [0, 255]")
        object.__setattr__(self, "pixels", _frozen(px))

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])


@dataclass(frozen=True)
class Proposal:
    """One detection candidate: box, score, appearance, optional mask.

    The centroid defaults to the mean of the mask pixels when a mask is
    attached, else the box center; it must land inside the box.
    """

    box: BoundingBox
    confidence: float
    embedding: Embedding
    mask: Mask | None = None
    centroid: tuple[float, float] | None = None

    def __post_init__(self):
        conf = float(self.confidence)
        if not 0.0 <= conf <= 1.0:
            raise ValueError(f"confidence {conf} outside [0, 1]")
        object.__setattr__(self, "confidence", conf)
        if self.centroid is None:
            if self.mask is not None and self.mask.count > 0:
                c = self.mask.centroid()
            else:
                c = self.box.center()
            object.__setattr__(self, "centroid", c)
        else:
            object.__setattr__(self, "centroid", (float(self.centroid[0]), float(self.centroid[1])))
        cx, cy = self.centroid
        if not self.box.contains_point(cx, cy):
            raise ValueError(f"centroid ({cx}, {cy}) falls outside {self.box}")


@dataclass(frozen=True)
class ReferenceSet:
    """Reference memory for one personal object."""

    object_id: str
    category: str
    references: tuple[Embedding, ...]

    def __post_init__(self):
        refs = tuple(self.references)
        if len(refs) < 1:
            raise ValueError("a reference set needs at least one embedding")
        dims = {r.dim for r in refs}
        if len(dims) != 1:
            raise DimensionMismatchError(f"mixed reference dims: {sorted(dims)}")
        object.__setattr__(self, "references", refs)

    @property
    def k(self) -> int:
        return len(self.references)

    @property
    def dim(self) -> int:
        return self.references[0].dim

    def matrix(self) -> np.ndarray:
        """References stacked row-wise, shape (k, dim)."""
        return np.stack([r.values for r in self.references])


@dataclass(frozen=True)
class Observation:
    """Multi-view camera frame plus opaque proprioception and instruction.

    ``proprio`` is never inspected, only forwarded unchanged.
    """

    views: tuple[RasterImage, ...]
    proprio: bytes
    instruction: str

    def __post_init__(self):
        views = tuple(self.views)
        if len(views) < 1:
            raise ValueError("observation needs at least one view")
        object.__setattr__(self, "views", views)


@dataclass(frozen=True)
class ViewTrackState:
    """Per-view tracking snapshot; ``memory`` is opaque to the pipeline."""

    view_index: int
    current_mask: Mask | None
    memory: Any
