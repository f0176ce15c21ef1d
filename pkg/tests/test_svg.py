"""Tests for the rank-2 arrangement SVG renderer."""

import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from orbitchar.arrangement import chamber_hyperplanes, enumerate_regions
from orbitchar.liecore import (
    build_root_system,
    highest_roots,
    highest_short_root,
    invariant_form,
    weight_system,
)
from orbitchar.svg import render_arrangement

NS = "{http://www.w3.org/2000/svg}"
Q = Fraction


def _arrangement(factors, spec=None, little=False):
    rs = build_root_system(factors)
    if spec is None:
        spec = (highest_short_root(rs),) if little else highest_roots(rs)
    ws = weight_system(rs, spec)
    hps = chamber_hyperplanes(ws)
    regions = enumerate_regions(rs, hps)
    return rs, invariant_form(rs), hps, regions


CASES = [
    ([("A", 1), ("A", 1)], ((1, 1), (1, 0)), False),
    ([("A", 2)], None, False),
    ([("B", 2)], None, True),
    ([("G", 2)], None, True),
]


@pytest.mark.parametrize("factors,spec,little", CASES)
def test_one_line_element_per_hyperplane(factors, spec, little):
    rs, form, hps, regions = _arrangement(factors, spec, little)
    text = render_arrangement(rs, form, hps, regions)
    root = ET.fromstring(text)
    assert len(root.findall(f".//{NS}line")) == len(hps)
    assert len(root.findall(f".//{NS}path")) == 2  # the two chamber walls
    labels = [t.text for t in root.findall(f".//{NS}text") if t.get("class") == "region-label"]
    assert labels == [f"R{r.id}" for r in regions]


def test_well_formed_with_labels_and_marks():
    rs, form, hps, regions = _arrangement([("A", 1), ("A", 1)], ((1, 1), (1, 0)))
    labels = {r.id: f"L{r.id}" for r in regions}
    marks = [((Q(2), Q(0)), "O2=O4"), ((Q(2), Q(4)), "O5")]
    text = render_arrangement(rs, form, hps, regions, region_labels=labels, marks=marks)
    root = ET.fromstring(text)  # raises on malformed XML
    assert text.startswith('<?xml version="1.0"')
    circles = root.findall(f".//{NS}circle")
    assert len(circles) == 2
    captions = [t.text for t in root.findall(f".//{NS}text") if t.get("class") == "mark-label"]
    assert captions == ["O2=O4", "O5"]
    label_texts = [t.text for t in root.findall(f".//{NS}text") if t.get("class") == "region-label"]
    assert sorted(label_texts) == sorted(labels.values())


def test_coordinates_have_fixed_precision():
    rs, form, hps, regions = _arrangement([("A", 2)])
    text = render_arrangement(rs, form, hps, regions)
    root = ET.fromstring(text)
    for line in root.findall(f".//{NS}line"):
        for attr in ("x1", "y1", "x2", "y2"):
            assert re.fullmatch(r"-?\d+\.\d{3}", line.get(attr)), line.get(attr)


def test_rendering_is_deterministic():
    rs, form, hps, regions = _arrangement([("B", 2)], little=True)
    assert render_arrangement(rs, form, hps, regions) == render_arrangement(
        rs, form, hps, regions
    )


def test_rank_must_be_two():
    rs = build_root_system([("A", 3)])
    ws = weight_system(rs, highest_roots(rs))
    hps = chamber_hyperplanes(ws)
    regions = enumerate_regions(rs, hps)
    with pytest.raises(ValueError):
        render_arrangement(rs, invariant_form(rs), hps, regions)
