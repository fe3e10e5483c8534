"""
Excess, backward edges, and window decompositions
=================================================

The quantity driving every guarantee in this package is the *excess* of a
path: its length minus the straight-line distance between its endpoints.
This script builds a wiggly path, measures its excess, splits its edges into
forward and backward classes, and decomposes it into the disjoint "windows"
that swallow all backward motion.  It finishes by checking the three
inequalities that make the sweep algorithms work, then draws the picture.
"""

import numpy as np

from orienteer import (
    Path,
    PointSet,
    decompose_path,
    directed_edge_partition,
    excess,
    offangle_edge_mass,
    path_length,
    window_excess,
)
from orienteer.io import Instance, Solution
from orienteer.paths import edge_set_length
from orienteer.render import render_svg

rng = np.random.default_rng(7)

# A 12-point path: mostly rightward, with two deliberate backtracks.
xs = [0.0, 1.0, 2.2, 1.4, 3.1, 4.0, 5.2, 4.4, 3.9, 6.0, 7.1, 8.0]
ys = rng.random(12) * 1.5
pts = PointSet(np.column_stack([xs, ys]))
path = Path(pts, tuple(range(12)))

print(f"path length          : {path_length(path):.4f}")
print(f"endpoint distance    : {pts.distance(0, 11):.4f}")
print(f"excess               : {excess(path):.4f}")

forward, backward = directed_edge_partition(path, (1.0, 0.0))
fwd_len = edge_set_length(pts, forward)
bwd_len = edge_set_length(pts, backward)
print(f"\nforward edge mass    : {fwd_len:.4f}  ({len(forward)} edges)")
print(f"backward edge mass   : {bwd_len:.4f}  ({len(backward)} edges)")
print(f"backward <= excess?  : {bwd_len <= excess(path) + 1e-12}")

deco = decompose_path(path)
print(f"\nwindows after merging: {len(deco.windows)}")
total_window_excess = 0.0
for w, (entry, exit_) in zip(deco.windows, deco.entry_exit):
    wexc = window_excess(path, w, entry, exit_)
    total_window_excess += wexc
    print(
        f"  window [{w.left_id} .. {w.right_id}] width {w.width:.3f}: "
        f"enter at {entry}, leave at {exit_}, window excess {wexc:.4f}"
    )
print(f"sum of window excess : {total_window_excess:.4f} (<= path excess)")

print("\noff-angle edge mass vs. the 24/(11 g^2) * excess bound:")
for gamma in (0.25, 0.5, 1.0):
    mass = offangle_edge_mass(path, gamma)
    bound = 24.0 / (11.0 * gamma**2) * excess(path)
    print(f"  gamma={gamma:.2f}: mass {mass:.4f} <= bound {bound:.4f}")

# Draw it: route in black, merged windows as shaded slabs.
inst = Instance(kind="ktsp", points=[[float(a), float(b)] for a, b in pts.coords],
                delta=0.25, source=0, sink=11, k=12).validate()
sol = Solution(kind="ktsp", length=path_length(path), visited=12,
               visits=list(path.visits))
with open("windows_demo.svg", "w") as fh:
    fh.write(render_svg(inst, sol, show_windows=True))
print("\nwrote windows_demo.svg (shaded slabs = merged windows)")
