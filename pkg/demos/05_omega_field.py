"""Sampling the omega density over a hemisphere and writing the CSV grid.

omega is a rational function of the Cartesian coordinates of the sample
point, with poles at the three vertex antipodes.  The CSV produced here is
the interchange format consumed by the renderer in frontend/.
"""

import io

import sphwhitney as sw
from sphwhitney.fieldgrid import figure_preset, sample_grid, write_csv

t, hemisphere, notes = figure_preset(1)
print("figure preset 1:")
for name, v in zip("ABC", t.vertices):
    print(f"  {name} = ({v[0]:+.6f}, {v[1]:+.6f}, {v[2]:+.6f})")
for note in notes:
    print(f"  note: {note}")

grid = sample_grid(t, hemisphere=hemisphere, resolution=96, scaled=True, notes=notes)
values = [(val, x, y) for x, y, _, val in grid.rows if val is not None]
lo = min(values)
hi = max(values)
print(f"\nsampled {len(grid.rows)} grid points on the {hemisphere} hemisphere")
print(f"  min S*omega = {lo[0]:+.6f} at (x, y) = ({lo[1]:+.4f}, {lo[2]:+.4f})")
print(f"  max S*omega = {hi[0]:+.6f} at (x, y) = ({hi[1]:+.4f}, {hi[2]:+.4f})")
print("  (grid extrema are reported, never asserted: their relation to the")
print("   vertices is an open question)")

buf = io.StringIO()
write_csv(grid, buf)
head = "\n".join(buf.getvalue().splitlines()[:10])
print(f"\nCSV header:\n{head}")

lower = sample_grid(t, hemisphere="lower", resolution=96, scaled=True)
vals = [abs(v) for _, _, _, v in lower.rows if v is not None]
print(f"\nlower hemisphere |S*omega| reaches {max(vals):.1f} near the antipodes")
