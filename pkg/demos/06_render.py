"""Render a polygon and its reconstruction candidates to SVG files."""

import pathlib

from delzant import enumerate_candidates, hirzebruch, spectral_data
from delzant.render import render_svg

out_dir = pathlib.Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

polygon = hirzebruch(1, 1, 1)
(out_dir / "hirzebruch.svg").write_bytes(render_svg(polygon))

candidates = enumerate_candidates(spectral_data(polygon))
(out_dir / "hirzebruch_candidates.svg").write_bytes(render_svg(polygon, candidates))

print(f"wrote {out_dir}/hirzebruch.svg and {out_dir}/hirzebruch_candidates.svg")
print(f"candidate count: {len(candidates)}")
