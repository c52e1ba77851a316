"""Dandelion-chart geometry in the amplitude plane.

Each alive basis state becomes a point (re, im) whose distance from the origin
is r0 = sqrt(probability), a circle of radius k * r0 that keeps the point on
its edge (center = (1 - k) * point, on the origin-to-point stem) and two
perpendicular sticks dropping the point onto the axes. Circle areas
pi * k^2 * r0^2 stay proportional to probabilities for any shared k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadScaleError
from .statevec import StateVector

EPS_ALIVE = 1e-9
DEFAULT_K = 0.25

Point = tuple[float, float]


@dataclass(frozen=True)
class DandelionElement:
    label: str
    index: int
    point: Point  # (re, im)
    r0: float  # sqrt(probability)
    k: float

    @property
    def radius(self) -> float:
        return self.k * self.r0

    @property
    def center(self) -> Point:
        return ((1.0 - self.k) * self.point[0], (1.0 - self.k) * self.point[1])

    @property
    def area(self) -> float:
        return area_of(self, self.k)

    @property
    def stem(self) -> tuple[Point, Point]:
        return ((0.0, 0.0), self.point)

    @property
    def stick_real(self) -> tuple[Point, Point]:
        # horizontal drop onto the y-axis; length = |re|
        return (self.point, (0.0, self.point[1]))

    @property
    def stick_imag(self) -> tuple[Point, Point]:
        # vertical drop onto the x-axis; length = |im|
        return (self.point, (self.point[0], 0.0))

    def to_dict(self) -> dict:
        x, y = self.point
        return {
            "label": self.label,
            "point": [x, y],
            "r0": self.r0,
            "k": self.k,
            "center": list(self.center),
            "radius": self.radius,
            "sticks": {
                "real": [[x, y], [0.0, y]],
                "imag": [[x, y], [x, 0.0]],
            },
        }


@dataclass(frozen=True)
class DandelionFigure:
    k: float
    axis_extent: float
    elements: tuple[DandelionElement, ...]

    def element(self, label: str) -> DandelionElement | None:
        for el in self.elements:
            if el.label == label:
                return el
        return None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "axis_extent": self.axis_extent,
            "elements": [el.to_dict() for el in self.elements],
        }


def _check_scale(k: float) -> float:
    if not (isinstance(k, (int, float)) and math.isfinite(k) and 0.0 < k <= 1.0):
        raise BadScaleError(f"scale factor must be in (0, 1], got {k!r}")
    return float(k)


def elements_from_points(points: list[tuple[str, int, complex]], k: float) -> DandelionFigure:
    """Build a figure from (label, index, amplitude) triples already filtered
    to alive states. Shared with the service, which stores points and r0 only."""
    k = _check_scale(k)
    elements = []
    extent = 1.0
    for label, index, amp in points:
        x, y = float(amp.real), float(amp.imag)
        extent = max(extent, abs(x), abs(y))
        elements.append(DandelionElement(label=label, index=index, point=(x, y),
                                         r0=math.hypot(x, y), k=k))
    return DandelionFigure(k=k, axis_extent=extent, elements=tuple(elements))


def build_figure(state: StateVector, k: float = DEFAULT_K) -> DandelionFigure:
    """One element per basis state with probability above EPS_ALIVE."""
    k = _check_scale(k)
    probs = state.probabilities()
    points = [
        (state.label(i), i, complex(state.amps[i]))
        for i in range(probs.size)
        if probs[i] > EPS_ALIVE
    ]
    return elements_from_points(points, k)


def compare_pair(pre: StateVector, post: StateVector,
                 k: float = DEFAULT_K) -> tuple[DandelionFigure, DandelionFigure]:
    """Figures for the states before and after one gate, at the same scale."""
    return build_figure(pre, k), build_figure(post, k)


def area_of(element: DandelionElement, k: float) -> float:
    """Circle area pi * k^2 * r0^2 at an arbitrary scale factor."""
    return math.pi * k * k * element.r0 * element.r0
