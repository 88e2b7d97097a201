"""Dynamic orthogonal range search over segment endpoints.

Endpoints are bucketed into unit grid cells.  A unit-square query touches at
most four cells, so with bounded local density a query costs O(1 + k) and a
deletion O(1).  Coordinates are kept as integers scaled by the common
denominator of the input.
"""

from collections import defaultdict
from math import ceil, floor

from .geometry import scaled_coords


class PointIndex:
    """Live endpoints keyed by the segment that owns them.

    Supports closed-rectangle queries and deletion of both endpoints of a
    segment once it is flagged.
    """

    def __init__(self, segments, scaled=None):
        den, coords = scaled if scaled is not None else scaled_coords(segments)
        self.den = den
        self._cells = defaultdict(dict)
        self._where = {}
        for i, (lx, ly, rx, ry) in enumerate(coords):
            kl = (lx // den, ly // den)
            kr = (rx // den, ry // den)
            if kl == kr:
                self._cells[kl][i] = ((lx, ly), (rx, ry))
                self._where[i] = (kl,)
            else:
                self._cells[kl][i] = ((lx, ly),)
                self._cells[kr][i] = ((rx, ry),)
                self._where[i] = (kl, kr)
        self.live = len(coords)

    def __contains__(self, i):
        return i in self._where

    def delete(self, i):
        keys = self._where.pop(i, None)
        if keys is None:
            return
        for key in keys:
            cell = self._cells[key]
            del cell[i]
            if not cell:
                del self._cells[key]
        self.live -= 1

    def query(self, x0, y0, x1, y1):
        """Sorted indices of segments with an endpoint in the closed box [x0,x1]x[y0,y1]."""
        d = self.den
        return self._query(ceil(x0 * d), ceil(y0 * d), floor(x1 * d), floor(y1 * d))

    def _query(self, X0, Y0, X1, Y1):
        d = self.den
        hits = set()
        cells = self._cells
        for cx in range(X0 // d, X1 // d + 1):
            for cy in range(Y0 // d, Y1 // d + 1):
                cell = cells.get((cx, cy))
                if not cell:
                    continue
                for i, pts in cell.items():
                    for px, py in pts:
                        if X0 <= px <= X1 and Y0 <= py <= Y1:
                            hits.add(i)
                            break
        return sorted(hits)

    def query_square(self, t):
        return self.query(t.x, t.y, t.x + 1, t.y + 1)

    def take_square(self, t):
        """Report and delete every live segment with an endpoint in ``t``.

        Results are in ascending segment index for determinism.
        """
        hit = self.query_square(t)
        for i in hit:
            self.delete(i)
        return hit
