"""Command-line interface.

    quadriline <classify|rect|path|locus|census|render> --input FILE [flags]

The input file is JSON: {"field": "rational" | {"prime": p}, "pairs": [[lineA,
lineC], [lineB, lineD]]} with each line {"a": ..., "b": ..., "c": ...} written
in the exact literal grammar (integers, or "p/q" over the rationals).  All
exact values in reports are strings; floats appear only inside SVG output.

Exit codes: 0 success, 2 parse or precondition error, 3 internal assertion
failure (a theorem-backed check went wrong, i.e. a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import quadric_point_count, verify_against_paths
from .configuration import (
    ConfigurationInput,
    DiagonalMarker,
    InputLine,
    classify,
    diagonal_slopes,
    normalize,
)
from .errors import (
    AllParallelError,
    InternalCheckError,
    ParseError,
    PreconditionError,
    QuadrilineError,
)
from .locus import all_parallel_analysis, center_of, centers_paths, special_rectangles
from .paths import (
    aspect_path_eval,
    ratio_samples,
    slope_path_eval,
)
from .rectangles import (
    ALL_RATIOS,
    INDETERMINATE,
    ProjectiveRectangle,
    aspect_of,
    aspects_at_infinity,
    slope_of,
    slopes_at_infinity,
)
from .scalars import PrimeField, QQ, ratio_format, ratio_parse
from .svgfig import render

ROLES = ("A", "B", "C", "D")


def load_config(path: str) -> ConfigurationInput:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    field_tag = raw.get("field")
    if field_tag == "rational":
        field = QQ
    elif isinstance(field_tag, dict) and "prime" in field_tag:
        field = PrimeField(int(field_tag["prime"]))
    else:
        raise ParseError(f"{path}: field must be \"rational\" or {{\"prime\": p}}")
    pairs = raw.get("pairs")
    if not isinstance(pairs, list) or len(pairs) != 2:
        raise ParseError(f"{path}: pairs must hold two ordered pairs of lines")
    parsed = []
    for i, pair in enumerate(pairs):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"{path}: pairs[{i}] must hold two lines")
        lines = []
        for j, entry in enumerate(pair):
            coeffs = []
            for key in ("a", "b", "c"):
                if not isinstance(entry, dict) or key not in entry:
                    raise ParseError(f"{path}: pairs[{i}][{j}] missing '{key}'")
                try:
                    coeffs.append(field.parse(str(entry[key])))
                except ParseError as exc:
                    raise ParseError(f"{path}: pairs[{i}][{j}].{key}: {exc}") from None
            try:
                lines.append(InputLine(*coeffs))
            except PreconditionError as exc:
                raise ParseError(f"{path}: pairs[{i}][{j}]: {exc}") from None
        parsed.append(tuple(lines))
    return ConfigurationInput(field, parsed[0], parsed[1])


def _ratio_json(field, value):
    if value is INDETERMINATE:
        return "indeterminate"
    return ratio_format(value, field)


def _ratios_json(field, value):
    if value is ALL_RATIOS:
        return "all"
    return [ratio_format(r, field) for r in value]


def _point_json(field, point):
    return [field.format(point[0]), field.format(point[1])]


def _line_json(field, desc):
    out = {"a": field.format(desc.a), "b": field.format(desc.b), "c": field.format(desc.c)}
    if getattr(desc, "source", None):
        out["source"] = desc.source
    return out


def _plane_map_json(pm):
    field = pm.field
    return {
        "swaps": {"pair1": pm.swaps[0], "pair2": pm.swaps[1], "roles": pm.swaps[2]},
        "role_to_input": dict(pm.role_to_input),
        "translation": _point_json(field, pm.translation),
        "reflection_t": field.format(pm.reflection_t) if pm.reflection_t is not None else None,
        "scale": field.format(pm.scale),
    }


def rectangle_json(rect: ProjectiveRectangle, cfg, pm) -> dict:
    field = cfg.field
    out = {
        "projective": [field.format(c) for c in rect.coords],
        "at_infinity": rect.at_infinity,
        "slope": _ratio_json(field, slope_of(rect)),
        "aspect": _ratio_json(field, aspect_of(rect)),
        "sequence": [pm.role_to_input[r] for r in ROLES],
        "vertices": None,
        "center": None,
    }
    if not rect.at_infinity:
        verts = rect.affine_vertices()
        out["vertices"] = {
            pm.role_to_input[role]: _point_json(field, pm.invert_point(verts[role]))
            for role in ROLES
        }
        out["center"] = _point_json(field, pm.invert_point(center_of(rect)))
    return out


def parse_rectangle_json(field, data) -> ProjectiveRectangle:
    """Round-trip: rebuild the canonical projective point from a report."""
    coords = tuple(field.parse(text) for text in data["projective"])
    return ProjectiveRectangle.canonical(field, coords)


def _normalized_json(cfg):
    f = cfg.field
    return {
        "m_A": f.format(cfg.m_a),
        "m_B": f.format(cfg.m_b),
        "m_C": f.format(cfg.m_c),
        "m_D": f.format(cfg.m_d),
        "b_A": f.format(cfg.b_a),
    }


def _field_json(field):
    return "rational" if not field.char else {"prime": field.char}


def cmd_classify(args) -> dict:
    cfg_input = load_config(args.input)
    try:
        cfg, pm = normalize(cfg_input)
    except AllParallelError:
        by_label = cfg_input.lines_by_label()
        ordered = [by_label[r] for r in ROLES]
        report = all_parallel_analysis(cfg_input.field, ordered)
        return {
            "field": _field_json(cfg_input.field),
            "all_parallel": {
                "midline_shared": report.midline_shared,
                "midline": _line_json(cfg_input.field, report.midline)
                if report.midline
                else None,
                "description": report.description,
            },
        }
    cls = classify(cfg)
    e_diag, f_diag = diagonal_slopes(cfg)
    field = cfg.field

    def diag_json(value):
        if isinstance(value, DiagonalMarker):
            return value.value
        return ratio_format(value, field)

    return {
        "field": _field_json(field),
        "normalized": _normalized_json(cfg),
        "constants": {
            "e1": field.format(cfg.e1),
            "e2": field.format(cfg.e2),
            "f1": field.format(cfg.f1),
            "f2": field.format(cfg.f2),
        },
        "diagonals": {"E": diag_json(e_diag), "F": diag_json(f_diag)},
        "class": {
            "degenerate": cls.degenerate,
            "twin_pairs": cls.twin_pairs,
            "dual_pairs": cls.dual_pairs,
            "slope_path_at_infinity": cls.slope_path_at_infinity,
            "aspect_path_at_infinity": cls.aspect_path_at_infinity,
            "locus_shape": cls.locus_shape.value,
        },
        "at_infinity": {
            "slopes": _ratios_json(field, slopes_at_infinity(cfg)),
            "aspects": _ratios_json(field, aspects_at_infinity(cfg)),
        },
        "plane_map": _plane_map_json(pm),
    }


def cmd_rect(args) -> dict:
    cfg_input = load_config(args.input)
    cfg, pm = normalize(cfg_input)
    field = cfg.field
    if args.slope is not None:
        r = ratio_parse(args.slope, field)
        rect = slope_path_eval(cfg, r)
    else:
        r = ratio_parse(args.aspect, field)
        rect = aspect_path_eval(cfg, r)
    return rectangle_json(rect, cfg, pm)


def cmd_path(args) -> dict:
    cfg_input = load_config(args.input)
    cfg, pm = normalize(cfg_input)
    evaluator = slope_path_eval if args.kind == "slope" else aspect_path_eval
    rects = []
    for r in ratio_samples(cfg.field, args.samples):
        rects.append(
            {"ratio": ratio_format(r, cfg.field), **rectangle_json(evaluator(cfg, r), cfg, pm)}
        )
    return {"kind": args.kind, "rectangles": rects}


def cmd_locus(args) -> dict:
    cfg_input = load_config(args.input)
    try:
        cfg, pm = normalize(cfg_input)
    except AllParallelError:
        by_label = cfg_input.lines_by_label()
        report = all_parallel_analysis(cfg_input.field, [by_label[r] for r in ROLES])
        return {
            "shape": "AllParallel",
            "midline_shared": report.midline_shared,
            "midline": _line_json(cfg_input.field, report.midline) if report.midline else None,
            "description": report.description,
        }
    field = cfg.field
    report = centers_paths(cfg)
    out = {"shape": report.shape.value}
    for key in ("slope_centers", "aspect_centers", "gauss_newton", "diagonal_g", "single_line"):
        desc = getattr(report, key)
        out[key] = _line_json(field, desc) if desc is not None else None
    out["conic"] = [field.format(c) for c in report.conic] if report.conic else None
    out["point"] = _point_json(field, report.point) if report.point else None
    try:
        special = special_rectangles(cfg)
    except (PreconditionError, InternalCheckError):
        special = None
    if special is not None:
        out["special_rectangles"] = {
            "center": rectangle_json(special.center_rectangle, cfg, pm),
            "centroid": rectangle_json(special.centroid_rectangle, cfg, pm),
        }
    else:
        out["special_rectangles"] = None
    return out


def cmd_census(args) -> dict:
    cfg_input = load_config(args.input)
    if not cfg_input.field.char:
        raise PreconditionError("census requires a prime field configuration")
    cfg, _pm = normalize(cfg_input)
    report = verify_against_paths(cfg)
    return {
        "p": report.p,
        "total": report.total,
        "at_infinity": report.at_infinity,
        "by_slope": report.by_slope,
        "by_aspect": report.by_aspect,
        "union_covered": report.union_covered,
        "at_infinity_bound_ok": report.at_infinity_bound_ok,
        "degenerate_consistency_ok": report.degenerate_consistency_ok,
        "failures": report.failures,
        "quadric_points": quadric_point_count(cfg),
    }


def cmd_render(args) -> dict:
    cfg_input = load_config(args.input)
    cfg, pm = normalize(cfg_input)
    render(cfg_input, cfg, pm, args.out, samples=args.samples, diagonals=args.diagonals)
    return {"written": args.out}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadriline",
        description="Rectangles inscribed in four lines, exactly, over Q or F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--input", required=True, help="configuration JSON file")
        p.set_defaults(fn=fn)
        return p

    add("classify", cmd_classify, help="normalized constants, diagonals, classification")
    p_rect = add("rect", cmd_rect, help="the inscribed rectangle of a given slope or aspect")
    group = p_rect.add_mutually_exclusive_group(required=True)
    group.add_argument("--slope", help="slope ratio s/t (write --slope=-1/2 for negatives)")
    group.add_argument("--aspect", help="aspect ratio u/v (write --aspect=-1/2 for negatives)")
    p_path = add("path", cmd_path, help="sample a path of rectangles")
    p_path.add_argument("--kind", choices=("slope", "aspect"), default="slope")
    p_path.add_argument("--samples", type=int, default=8)
    add("locus", cmd_locus, help="the locus of rectangle centers")
    add("census", cmd_census, help="brute-force verification over a prime field")
    p_render = add("render", cmd_render, help="draw the configuration as SVG")
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.add_argument("--samples", type=int, default=12)
    p_render.add_argument("--diagonals", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except InternalCheckError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3
    except (QuadrilineError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    json.dump(result, sys.stdout, indent=2)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
