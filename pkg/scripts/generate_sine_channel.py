"""Regenerate src/curvedvem/_sine_channel.py from the closed-form exact solution.

    python scripts/generate_sine_channel.py
"""
from pathlib import Path

import sympy as sp
from sympy.printing.numpy import NumPyPrinter

x, y = sp.symbols("x y", real=True)
g_bt = sp.sin(sp.pi * x) / 20
g_tp = 1 + sp.sin(3 * sp.pi * x) / 20
u = -(y - g_bt) ** 2 * (y - g_tp) ** 2 * x ** 2 * (1 - x) ** 2 * (3 + sp.sin(5 * x) * sp.sin(7 * y))

exprs = {
    "u": u,
    "ux": sp.diff(u, x),
    "uy": sp.diff(u, y),
    "uxx": sp.diff(u, x, 2),
    "uxy": sp.diff(u, x, y),
    "uyy": sp.diff(u, y, 2),
}
lap = exprs["uxx"] + exprs["uyy"]
exprs["f"] = sp.diff(lap, x, 2) + sp.diff(lap, y, 2)

printer = NumPyPrinter({"fully_qualified_modules": False})
lines = [
    '"""Sine-channel exact solution and its derivatives (generated, do not edit).',
    "",
    "Produced by scripts/generate_sine_channel.py with sympy.",
    '"""',
    "from numpy import cos, pi, sin",
    "",
]
for name, e in exprs.items():
    reps, (red,) = sp.cse(e, optimizations="basic")
    lines += ["", f"def {name}(x, y):"]
    for sym, sub in reps:
        lines.append(f"    {sym} = {printer.doprint(sub)}")
    lines.append(f"    return {printer.doprint(red)}")
    lines.append("")

out = Path(__file__).resolve().parents[1] / "src" / "curvedvem" / "_sine_channel.py"
out.write_text("\n".join(lines).replace("\n\n\n\n", "\n\n\n"))
print(f"wrote {out}")
