"""SVG rendering: structure, determinism, unsupported input."""

import pytest

from delzant import UnsupportedError, enumerate_candidates, spectral_data
from delzant.render import render_svg


def test_square_single_path(unit_square):
    svg = render_svg(unit_square)
    text = svg.decode("utf-8")
    assert text.count("<path") == 1
    assert "<svg" in text and "</svg>" in text
    # One outward-normal arrow per edge, one label per vertex.
    assert text.count("<line") == 4
    assert text.count("<circle") == 4


def test_overlay_path_count(unit_triangle):
    candidates = enumerate_candidates(spectral_data(unit_triangle))
    svg = render_svg(unit_triangle, candidates)
    assert svg.decode("utf-8").count("<path") == 3


def test_deterministic_bytes(hirzebruch_111):
    assert render_svg(hirzebruch_111) == render_svg(hirzebruch_111)


def test_rejects_3d(unit_cube):
    with pytest.raises(UnsupportedError):
        render_svg(unit_cube)
