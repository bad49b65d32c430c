"""Bare-bones SVG line plots (axes, polylines, optional unit circle)."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

W, H = 480, 360
ML, MR, MT, MB = 64, 16, 28, 48
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


def _ticks(lo, hi, n=5):
    if hi <= lo:
        return [lo]
    step = 10 ** np.floor(np.log10((hi - lo) / n))
    for m in (1, 2, 5, 10):
        if (hi - lo) / (m * step) <= n:
            step *= m
            break
    start = np.ceil(lo / step) * step
    return list(np.arange(start, hi + step * 1e-9, step))


def line_plot(series, *, xlabel="", ylabel="", title="", unit_disk=False, markers=False) -> str:
    """Render ``series`` (a list of ``(x, y, label)``) as an SVG document.

    NaN values break a polyline. ``unit_disk`` fixes equal axes on
    [-1.1, 1.1] and draws the unit circle, for complex-plane trajectories.
    """
    xs = np.concatenate([np.asarray(s[0], float) for s in series]) if series else np.zeros(1)
    ys = np.concatenate([np.asarray(s[1], float) for s in series]) if series else np.zeros(1)
    if unit_disk:
        x0, x1, y0, y1 = -1.1, 1.1, -1.1, 1.1
    else:
        fx, fy = xs[np.isfinite(xs)], ys[np.isfinite(ys)]
        x0, x1 = (fx.min(), fx.max()) if fx.size else (0.0, 1.0)
        y0, y1 = (fy.min(), fy.max()) if fy.size else (0.0, 1.0)
        if x1 == x0:
            x0, x1 = x0 - 0.5, x1 + 0.5
        pad = 0.05 * (y1 - y0) or 0.5
        y0, y1 = y0 - pad, y1 + pad
    pw, ph = W - ML - MR, H - MT - MB

    def px(x):
        return ML + (x - x0) / (x1 - x0) * pw

    def py(y):
        return MT + (y1 - y) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="11">',
        f'<rect x="{ML}" y="{MT}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in _ticks(x0, x1):
        out.append(f'<line x1="{px(t):.2f}" y1="{MT + ph}" x2="{px(t):.2f}" y2="{MT + ph + 4}" stroke="black"/>')
        out.append(f'<text x="{px(t):.2f}" y="{MT + ph + 16}" text-anchor="middle">{t:.3g}</text>')
    for t in _ticks(y0, y1):
        out.append(f'<line x1="{ML - 4}" y1="{py(t):.2f}" x2="{ML}" y2="{py(t):.2f}" stroke="black"/>')
        out.append(f'<text x="{ML - 6}" y="{py(t) + 4:.2f}" text-anchor="end">{t:.3g}</text>')
    if unit_disk:
        out.append(f'<ellipse cx="{px(0):.2f}" cy="{py(0):.2f}" rx="{px(1) - px(0):.2f}" ry="{py(0) - py(1):.2f}" fill="none" stroke="#999" stroke-dasharray="4 3"/>')
    for k, (x, y, label) in enumerate(series):
        c = COLORS[k % len(COLORS)]
        x, y = np.asarray(x, float), np.asarray(y, float)
        ok = np.isfinite(x) & np.isfinite(y)
        runs, cur = [], []
        for i in range(len(x)):
            if ok[i]:
                cur.append(f"{px(x[i]):.2f},{py(y[i]):.2f}")
            elif cur:
                runs.append(cur)
                cur = []
        if cur:
            runs.append(cur)
        for run in runs:
            out.append(f'<polyline points="{" ".join(run)}" fill="none" stroke="{c}" stroke-width="1.2"/>')
            if markers:
                out.extend(f'<circle cx="{p.split(",")[0]}" cy="{p.split(",")[1]}" r="1.5" fill="{c}"/>' for p in run)
        if label:
            out.append(f'<text x="{ML + pw - 4}" y="{MT + 14 + 13 * k}" text-anchor="end" fill="{c}">{escape(label)}</text>')
    out.append(f'<text x="{ML + pw / 2}" y="{H - 10}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(f'<text x="14" y="{MT + ph / 2}" text-anchor="middle" transform="rotate(-90 14 {MT + ph / 2})">{escape(ylabel)}</text>')
    if title:
        out.append(f'<text x="{ML + pw / 2}" y="18" text-anchor="middle">{escape(title)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


PANELS = {
    "cnum": dict(xlabel="Re C", ylabel="Im C", unit_disk=True, markers=True),
    "phase": dict(xlabel="(J - Jc)/r", ylabel="phi/pi", markers=True),
    "joined": dict(xlabel="(J - Jc)/r", ylabel="joined phi/pi"),
    "abs": dict(xlabel="(J - Jc)/r", ylabel="|C|"),
    "speed": dict(xlabel="(J - Jc)/r", ylabel="speed v"),
}


def panel_series(result, panel: str, label: str = ""):
    """(x, y, label) for one of the standard panels of a SweepResult."""
    if panel == "cnum":
        return result.C.real, result.C.imag, label
    if panel == "phase":
        return result.x, result.phase / np.pi, label
    if panel == "joined":
        return result.x, result.joined_phase / np.pi, label
    if panel == "abs":
        return result.x, result.magnitude, label
    if panel == "speed":
        return result.x[:-1], result.speed, label
    raise ValueError(f"unknown panel {panel!r}")


def panel_svg(results, panel: str, labels=None, title="") -> str:
    labels = labels or [""] * len(results)
    return line_plot([panel_series(r, panel, l) for r, l in zip(results, labels)], title=title, **PANELS[panel])
