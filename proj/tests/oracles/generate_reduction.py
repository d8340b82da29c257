"""Writes reduction_values.hpp: reduced forms of the fourth-order profile
equation f'''' = f'f'''/f + (11/10) f''^2/f - (12/5) f'^2 f''/f^2 + (9/10) f'^4/f^3
under (t, y) = (f, f'), then z = y'/y, then (u, v) = (t z, t z + t^2 z').

Run from this directory:  python3 generate_reduction.py
"""
import sympy as sp

t, y, yd, ydd, yddd = sp.symbols('t y yd ydd yddd')
z, zd, zdd, u, v = sp.symbols('z zd zdd u v')
R = sp.Rational

# x-derivatives of f in stage-1 variables; d/dx = y d/dt.
f0, f1 = t, y
f2 = y * yd
f3 = y * sp.diff(f2, y) * yd + y * sp.diff(f2, yd) * ydd
f4 = y * (sp.diff(f3, y) * yd + sp.diff(f3, yd) * ydd + sp.diff(f3, ydd) * yddd)
d12 = f4 - (f1 * f3 / f0 + R(11, 10) * f2**2 / f0 - R(12, 5) * f1**2 * f2 / f0**2 + R(9, 10) * f1**4 / f0**3)
stage1 = sp.expand(sp.solve(d12, yddd)[0])

# y = exp(int z): yd = z y, ydd = (zd + z^2) y, yddd = (zdd + 3 z zd + z^3) y.
e = (zdd + 3 * z * zd + z**3) * y - stage1.subs({yd: z * y, ydd: (zd + z**2) * y})
stage2 = sp.expand(sp.solve(e, zdd)[0])

# du/dt = z + t zd, dv/dt = z + 3 t zd + t^2 zdd.
slope = (z + 3 * t * zd + t**2 * stage2) / (z + t * zd)
slope = sp.simplify(slope.subs(zd, (v - u) / t**2).subs(z, u / t))
stage3 = sp.expand(sp.apart(slope, v))

MONOMIALS = {
    1: [('ydd/t', ydd / t), ('yd*ydd/y', yd * ydd / y), ('yd^3/y^2', yd**3 / y**2), ('yd^2/y', yd**2 / y),
        ('yd^2/(y*t)', yd**2 / (y * t)), ('yd/t^2', yd / t**2), ('y/t^3', y / t**3)],
    2: [('zd/t', zd / t), ('z*zd', z * zd), ('z^2/t', z**2 / t), ('z^3', z**3), ('z', z), ('z/t^2', z / t**2),
        ('1/t^3', 1 / t**3)],
    3: [('1', sp.Integer(1)), ('u', u), ('u^3/v', u**3 / v), ('u^2/v', u**2 / v), ('u/v', u / v), ('1/v', 1 / v)],
}

rows = []
for stage, expr in ((1, stage1), (2, stage2), (3, stage3)):
    terms = expr.as_coefficients_dict()
    seen = set()
    for name, mono in MONOMIALS[stage]:
        c = sp.Rational(terms.get(sp.expand(mono), 0))
        seen.add(sp.expand(mono))
        rows.append((stage, name, c))
    assert set(terms) <= seen, (stage, set(terms) - seen)

# Stationary points of the stage-3 relation: zeros of its 1/v numerator at v = 0.
numerator = sp.Poly(sp.numer(sp.together(sp.expand(stage3 * v).subs(v, 0))), u)
equilibria = sorted(sp.roots(numerator).keys())

out = ['#pragma once', '', '// Generated by generate_reduction.py.', '', '#include <array>', '', 'namespace oracle {', '',
       'struct ReducedCoefficient {', '  int stage;', '  const char* monomial;', '  long num;', '  long den;', '};', '',
       'inline constexpr std::array<ReducedCoefficient, %d> kReducedCoefficients = {{' % len(rows)]
for stage, name, c in rows:
    out.append('    {%d, "%s", %d, %d},' % (stage, name, c.p, c.q))
out += ['}};', '', '// u where the stage-3 relation has a v = 0 fixed point.',
        'inline constexpr std::array<double, %d> kStage3Equilibria = {%s};' % (
            len(equilibria), ', '.join('%d.0 / %d' % (r.p, r.q) for r in equilibria)),
        '', '}  // namespace oracle']
open('reduction_values.hpp', 'w').write('\n'.join(out) + '\n')
print(stage1, stage2, stage3, equilibria, sep='\n')
