"""Rectangle centers: the Gauss-Newton line, the third diagonal, and loci.

Centers only make sense in odd characteristic; the scalar layer already
rejects characteristic 2.  For a degenerate configuration the centers fall on
two lines (the aspect-path centers on the Gauss-Newton line, the slope-path
centers on a parallel of the diagonal G); otherwise they trace the image of a
conic, pinned down here by an exact fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import hpoly
from .configuration import InputLine, LocusShape, NormalizedConfig, classify
from .errors import (
    AtInfinityError,
    InternalCheckError,
    ParallelPairError,
    PreconditionError,
)
from .linalg import intersect_lines, nullspace
from .rectangles import ProjectiveRectangle, Ratio
from .paths import (
    aspect_path_eval,
    aspect_path_polys,
    eval_path,
    ratio_samples,
    slope_path_polys,
)

PAIRS = (("A", "B"), ("C", "D"), ("A", "D"), ("B", "C"), ("A", "C"), ("B", "D"))


@dataclass(frozen=True)
class AffineLineDescription:
    """A line a x + b y = c together with where it came from."""

    a: object
    b: object
    c: object
    source: str

    def as_line(self) -> InputLine:
        return InputLine(self.a, self.b, self.c)

    def contains(self, point) -> bool:
        x, y = point
        return self.a * x + self.b * y == self.c

    def slope(self) -> Ratio:
        return Ratio.of(-self.a, self.b)

    def parallel_to(self, other) -> bool:
        return not (self.a * other.b - self.b * other.a)


def center_of(p: ProjectiveRectangle):
    """The affine center ((x_A + x_C) / 2w, (y_A + y_C) / 2w)."""
    if p.at_infinity:
        raise AtInfinityError("rectangle at infinity has no center")
    xa, ya = p.vertex("A")
    xc, yc = p.vertex("C")
    two_w = 2 * p.w
    return (xa + xc) / two_w, (ya + yc) / two_w


def _line_through(p, q, source: str) -> AffineLineDescription:
    dx, dy = q[0] - p[0], q[1] - p[1]
    if not dx and not dy:
        raise PreconditionError("cannot draw a line through a repeated point")
    a, b = -dy, dx
    return AffineLineDescription(a, b, a * p[0] + b * p[1], source)


def _corner(cfg: NormalizedConfig, r1: str, r2: str):
    point = cfg.corner(r1, r2)
    if point is None:
        raise ParallelPairError((r1, r2))
    return point


def _midpoint(p, q):
    return (p[0] + q[0]) / 2, (p[1] + q[1]) / 2


def gauss_newton_line(cfg: NormalizedConfig) -> AffineLineDescription:
    """The line through the midpoints of the three diagonals.

    Midpoints of (A∩B, C∩D), (A∩D, B∩C) and (A∩C, B∩D); the third is
    verified to be collinear with the first two.
    """
    mids = []
    for r1, r2, r3, r4 in (("A", "B", "C", "D"), ("A", "D", "B", "C"), ("A", "C", "B", "D")):
        mids.append(_midpoint(_corner(cfg, r1, r2), _corner(cfg, r3, r4)))
    line = _line_through(mids[0], mids[1], "gauss-newton")
    if not line.contains(mids[2]):
        raise InternalCheckError("Gauss-Newton midpoints are not collinear")
    return line


def diagonal_g(cfg: NormalizedConfig) -> AffineLineDescription:
    """The diagonal through A∩C and B∩D."""
    return _line_through(_corner(cfg, "A", "C"), _corner(cfg, "B", "D"), "diagonal-g")


@dataclass(frozen=True)
class CenterMap:
    """The center of the slope-path rectangle as a function of the ratio.

    center(r) = (x_num(r) / den(r), y_num(r) / den(r)) with den twice the
    path's homogenizing polynomial.
    """

    x_num: tuple
    y_num: tuple
    den: tuple

    def at(self, r: Ratio):
        d = hpoly.eval_at(self.den, r.num, r.den)
        if not d:
            raise AtInfinityError("center map undefined at a path root")
        return (
            hpoly.eval_at(self.x_num, r.num, r.den) / d,
            hpoly.eval_at(self.y_num, r.num, r.den) / d,
        )


@dataclass(frozen=True)
class LocusReport:
    """Exact description of the set of centers of affine inscribed rectangles."""

    shape: LocusShape
    slope_centers: Optional[AffineLineDescription] = None
    aspect_centers: Optional[AffineLineDescription] = None
    gauss_newton: Optional[AffineLineDescription] = None
    diagonal_g: Optional[AffineLineDescription] = None
    single_line: Optional[AffineLineDescription] = None
    conic: Optional[tuple] = None  # coefficients of x^2, xy, y^2, x, y, 1
    point: Optional[tuple] = None
    center_map: Optional[CenterMap] = None


def _path_centers(cfg, pp, want: int):
    """Centers of the first `want` affine rectangles along a path."""
    centers = []
    budget = want + 8  # a couple of ratios may land at infinity
    for r in ratio_samples(cfg.field, budget):
        rect = eval_path(cfg, pp, r)
        if rect.at_infinity:
            continue
        centers.append(center_of(rect))
        if len(centers) == want:
            break
    return centers


def _fit_line(centers, source: str) -> Optional[AffineLineDescription]:
    """Exact line through sampled centers; None when they all coincide."""
    base = centers[0]
    other = next((c for c in centers if c != base), None)
    if other is None:
        return None
    line = _line_through(base, other, source)
    for c in centers:
        if not line.contains(c):
            raise InternalCheckError("sampled path centers are not collinear")
    return line


def _fit_line_or_none(centers) -> Optional[AffineLineDescription]:
    """Like _fit_line but returns None instead of raising on non-collinear data."""
    try:
        return _fit_line(centers, "slope-centers")
    except InternalCheckError:
        return None


def _conic_row(center, one):
    x, y = center
    return [x * x, x * y, y * y, x, y, one]


def centers_paths(cfg: NormalizedConfig) -> LocusReport:
    """Describe the rectangle locus.

    Degenerate configurations yield two lines of centers (cross-checked
    against the Gauss-Newton line and the diagonal G whenever no lines are
    parallel); twin or dual pairs leave a single affine line; otherwise six
    sampled centers determine an exact conic that twenty further samples
    must satisfy.
    """
    cls = classify(cfg)
    one = cfg.field.one()
    if cls.locus_shape is LocusShape.LINE_PLUS_INFINITY:
        pp = aspect_path_polys(cfg) if cls.twin_pairs else slope_path_polys(cfg)
        source = "aspect-centers" if cls.twin_pairs else "slope-centers"
        centers = _path_centers(cfg, pp, 8)
        line = _fit_line(centers, source)
        if line is None:
            return LocusReport(shape=cls.locus_shape, point=centers[0])
        return LocusReport(shape=cls.locus_shape, single_line=line)

    if cls.degenerate:
        slope_centers = _path_centers(cfg, slope_path_polys(cfg), 6)
        aspect_centers = _path_centers(cfg, aspect_path_polys(cfg), 6)
        slope_line = _fit_line(slope_centers, "slope-centers")
        aspect_line = _fit_line(aspect_centers, "aspect-centers")
        gn = g = None
        slopes = [cfg.m_a, cfg.m_b, cfg.m_c, cfg.m_d]
        no_parallels = len({cfg.field.format(m) for m in slopes}) == 4
        if no_parallels:
            gn = gauss_newton_line(cfg)
            g = diagonal_g(cfg)
            if aspect_line is not None and not aspect_line.as_line().same_line(gn.as_line()):
                raise InternalCheckError("aspect centers left the Gauss-Newton line")
            if slope_line is not None and not slope_line.parallel_to(g):
                raise InternalCheckError("slope centers not parallel to diagonal G")
        return LocusReport(
            shape=cls.locus_shape,
            slope_centers=slope_line,
            aspect_centers=aspect_line,
            gauss_newton=gn,
            diagonal_g=g,
        )

    # Non-degenerate: exact conic through the sampled centers.
    pp = slope_path_polys(cfg)
    cmap = CenterMap(
        x_num=hpoly.add(pp.x["A"], pp.x["C"]),
        y_num=hpoly.add(pp.y["A"], pp.y["C"]),
        den=hpoly.scale(cfg.field.from_int(2), pp.w),
    )
    centers = _path_centers(cfg, pp, 26)
    distinct = []
    for c in centers:
        if c not in distinct:
            distinct.append(c)
    if len(distinct) == 1:
        return LocusReport(shape=cls.locus_shape, point=distinct[0], center_map=cmap)
    if len(distinct) < 6:
        # Tiny prime fields cannot supply six distinct samples; report the
        # parametric map, plus the line when the few centers are collinear.
        line = _fit_line_or_none(centers)
        return LocusReport(shape=cls.locus_shape, single_line=line, center_map=cmap)
    fit_rows = [_conic_row(c, one) for c in distinct[:6]]
    basis = nullspace(fit_rows)
    if not basis:
        raise InternalCheckError("no conic through sampled centers")
    if len(basis) > 1:
        line = _fit_line(centers, "slope-centers")
        if line is None:
            raise InternalCheckError("conic fit is underdetermined")
        return LocusReport(shape=cls.locus_shape, single_line=line, center_map=cmap)
    conic = basis[0]
    for c in centers:
        row = _conic_row(c, one)
        val = sum((rc * cc for rc, cc in zip(row, conic)), cfg.field.zero())
        if val:
            raise InternalCheckError("verification center off the fitted conic")
    return LocusReport(shape=cls.locus_shape, conic=tuple(conic), center_map=cmap)


@dataclass(frozen=True)
class SpecialRectangles:
    """The center and centroid rectangles of a degenerate configuration."""

    center_rectangle: ProjectiveRectangle
    center_point: tuple
    centroid_rectangle: ProjectiveRectangle
    centroid_point: tuple


def special_rectangles(cfg: NormalizedConfig) -> SpecialRectangles:
    """Center rectangle (centered on the locus-line intersection) and
    centroid rectangle (centered on the centroid of the four corner points).

    Requires a degenerate configuration with no two lines parallel and at
    least one non-orthogonal pair.
    """
    cls = classify(cfg)
    if not cls.degenerate:
        raise PreconditionError("special rectangles need a degenerate configuration")
    slopes = [cfg.m_a, cfg.m_b, cfg.m_c, cfg.m_d]
    if len({cfg.field.format(m) for m in slopes}) != 4:
        raise PreconditionError("special rectangles need pairwise non-parallel lines")
    one = cfg.field.one()
    if cfg.m_a * cfg.m_c == -one and cfg.m_b * cfg.m_d == -one:
        raise PreconditionError("both pairs orthogonal (twin pairs)")

    report = centers_paths(cfg)
    sl, al = report.slope_centers, report.aspect_centers
    if sl is None or al is None:
        raise InternalCheckError("degenerate locus did not produce two lines")
    cross = intersect_lines(sl.a, sl.b, sl.c, al.a, al.b, al.c)
    if cross is None:
        raise InternalCheckError("locus lines of a degenerate configuration are parallel")

    pp = slope_path_polys(cfg)
    shared_aspect = Ratio.of((cfg.m_c - cfg.m_d) * pp.first[0], pp.second[0])
    center_rect = aspect_path_eval(cfg, shared_aspect)
    if center_of(center_rect) != cross:
        raise InternalCheckError("center rectangle misses the locus intersection")

    corners = [_corner(cfg, r1, r2) for r1, r2 in (("A", "B"), ("B", "C"), ("C", "D"), ("A", "D"))]
    four = cfg.field.from_int(4)
    centroid = (
        sum((p[0] for p in corners), cfg.field.zero()) / four,
        sum((p[1] for p in corners), cfg.field.zero()) / four,
    )
    ap = aspect_path_polys(cfg)
    x_num = hpoly.add(ap.x["A"], ap.x["C"])
    y_num = hpoly.add(ap.y["A"], ap.y["C"])
    two = cfg.field.from_int(2)
    eq_x = hpoly.sub(x_num, hpoly.scale(two * centroid[0], ap.w))
    eq_y = hpoly.sub(y_num, hpoly.scale(two * centroid[1], ap.w))
    if not hpoly.is_zero(eq_x):
        ratio = Ratio.of(-eq_x[1], eq_x[0])
        if hpoly.eval_at(eq_y, ratio.num, ratio.den):
            raise InternalCheckError("centroid is not on the aspect path of centers")
    elif not hpoly.is_zero(eq_y):
        ratio = Ratio.of(-eq_y[1], eq_y[0])
    else:
        raise InternalCheckError("centroid equations vanished identically")
    centroid_rect = aspect_path_eval(cfg, ratio)
    if center_of(centroid_rect) != centroid:
        raise InternalCheckError("centroid rectangle misses the centroid")
    return SpecialRectangles(center_rect, cross, centroid_rect, centroid)


@dataclass(frozen=True)
class AllParallelReport:
    """Outcome of the all-parallel analysis."""

    midline_shared: bool
    midline: Optional[InputLine]
    description: str


def all_parallel_analysis(field, lines) -> AllParallelReport:
    """Four parallel lines: rectangles exist exactly when the two pairs share
    a midline, and then the midline is the rectangle locus.

    ``lines`` is the sequence (A, B, C, D).  When the midlines agree, every
    choice of x_A != x_B gives a unique inscribed rectangle, so the family is
    two-dimensional rather than a curve.
    """
    a, b, c, d = lines
    for other in (b, c, d):
        if not a.parallel_to(other):
            raise PreconditionError("all four lines must be parallel")
    ref = a

    def scaled_offset(line):
        factor = line.a / ref.a if ref.a else line.b / ref.b
        if not factor:
            raise PreconditionError("degenerate line normal")
        return line.c / factor

    two = field.from_int(2)
    mid_ac = (scaled_offset(a) + scaled_offset(c)) / two
    mid_bd = (scaled_offset(b) + scaled_offset(d)) / two
    if mid_ac == mid_bd:
        return AllParallelReport(
            True,
            InputLine(ref.a, ref.b, mid_ac),
            "midlines coincide: the midline is the rectangle locus and every "
            "choice of x_A != x_B yields a unique inscribed rectangle",
        )
    return AllParallelReport(
        False, None, "the pairs (A, C) and (B, D) have different midlines: no inscribed rectangles"
    )
