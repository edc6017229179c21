"""Identity suites behind ``monoclif verify`` and the acceptance tests.

Each check yields ``(name, parameters, thunk)``; the runner times the thunk,
which returns the two independently computed sides. A case passes iff the
sides are identical exact values.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import factorial, prod
from typing import Callable, Iterable, Iterator

from .bargmann import (
    bargmann_inner_product,
    l2_inner_product,
    monogenic_part_of_transform,
    segal_bargmann,
    segal_bargmann_moments,
    hermite_shift_check,
)
from .calculus import HALF, QUARTER, GaussianSection, dirac_left, laplacian, weighted_dirac
from .clifford import (
    MultiVector,
    all_blades,
    conjugate,
    dot_and_wedge,
    hermitian_conjugate,
)
from .fischer import (
    beta,
    fischer_decompose,
    fischer_gaussian_identity_check,
    fischer_inner_product,
    fischer_summands,
    truncated_projection,
)
from .hermite import basis_section, clifford_hermite, scalar_basis_section
from .kernels import (
    bs_kernel,
    default_table,
    exp_kernel_taylor,
    exp_pairing_taylor,
    plane_wave,
    random_plane_wave,
    reproducing_check,
    two_sided_monogenic,
    weierstrass_kernel_check,
    zonal,
)
from .polynomial import CliffPoly, evaluate, norm_squared, vector_power_mul
from .sampling import (
    random_harmonic,
    random_homogeneous,
    random_monogenic,
    random_multivector,
    random_polynomial,
    random_s_monogenic,
    rng_for,
)
from .serialize import to_json

SUITES = ("core", "hermite", "bargmann", "kernels")


@dataclass(frozen=True)
class Settings:
    seed: int = 0
    dims: tuple[int, ...] | None = None
    max_degree: int | None = None

    def pick_dims(self, default: Iterable[int]) -> list[int]:
        default = list(default)
        if self.dims is None:
            return default
        return list(self.dims)

    def cap(self, default: int) -> int:
        return default if self.max_degree is None else min(default, self.max_degree)


@dataclass
class Case:
    name: str
    parameters: dict
    lhs: object
    rhs: object
    elapsed_ms: float

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self, full: bool = True) -> dict:
        out = {
            "name": self.name,
            "parameters": self.parameters,
            "equal": self.equal,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if full or not self.equal:
            out["lhs"] = to_json(self.lhs)
            out["rhs"] = to_json(self.rhs)
        return out


@dataclass(frozen=True)
class Criterion:
    key: str
    suite: str
    title: str
    generate: Callable[[Settings], Iterator]
    min_cases: int = 1


CRITERIA: dict[str, Criterion] = {}


def criterion(key: str, suite: str, title: str, min_cases: int = 1):
    def deco(fn):
        CRITERIA[key] = Criterion(key, suite, title, fn, min_cases)
        return fn

    return deco


def run_criterion(key: str, cfg: Settings) -> list[Case]:
    crit = CRITERIA[key]
    cases = []
    for name, params, thunk in crit.generate(cfg):
        t0 = time.perf_counter()
        lhs, rhs = thunk()
        cases.append(Case(name, params, lhs, rhs, (time.perf_counter() - t0) * 1000))
    return cases


def _zpow(m: int, exp) -> CliffPoly:
    return CliffPoly(m, "z", {tuple(exp): 1})


def _sample_monogenics(m: int, k: int, cfg: Settings, salt: str, count: int = 2) -> list[CliffPoly]:
    """Plane waves and projected random monogenics of degree k."""
    rng = rng_for(cfg.seed, salt, m, k)
    out = [random_plane_wave(m, k, rng)]
    while len(out) < count:
        out.append(random_monogenic(m, k, rng, complex_=len(out) % 2 == 1))
    return out


def _multi_indices(m: int, total: int):
    for ks in product(range(total + 1), repeat=m):
        if sum(ks) <= total:
            yield ks


# ---- core ----------------------------------------------------------------------

@criterion("core.clifford", "core", "Clifford algebra invariants", 10)
def _core_clifford(cfg):
    for m in cfg.pick_dims((2, 3, 4)):
        rng = rng_for(cfg.seed, "clifford", m)
        yield f"blade count m={m}", {"m": m}, lambda m=m: (len(all_blades(m)), 2 ** m)
        for i in range(4):
            a, b, c = (random_multivector(m, rng, 6, complex_=True) for _ in range(3))
            yield (
                f"associativity m={m} #{i}",
                {"m": m},
                lambda a=a, b=b, c=c: ((a * b) * c, a * (b * c)),
            )
            yield (
                f"conj anti-automorphism m={m} #{i}",
                {"m": m},
                lambda a=a, b=b: (conjugate(a * b), conjugate(b) * conjugate(a)),
            )
            yield (
                f"dagger anti-automorphism m={m} #{i}",
                {"m": m},
                lambda a=a, b=b: (hermitian_conjugate(a * b), hermitian_conjugate(b) * hermitian_conjugate(a)),
            )
            coords = [rng.randint(-4, 4) for _ in range(m)]
            x = MultiVector.vector(m, coords)
            yield (
                f"x^2 = -|x|^2 m={m} #{i}",
                {"m": m, "x": coords},
                lambda x=x, coords=coords, m=m: (x * x, MultiVector.scalar(m, -sum(v * v for v in coords))),
            )
            y = MultiVector.vector(m, [rng.randint(-4, 4) for _ in range(m)])

            def split(x=x, y=y):
                d, w = dot_and_wedge(x, y)
                return x * y, w - MultiVector.scalar(x.m, d)

            yield f"xy = -<x,y> + x^y m={m} #{i}", {"m": m}, split


@criterion("core.polynomial", "core", "Polynomial ring and calculus invariants", 10)
def _core_polynomial(cfg):
    for m in cfg.pick_dims((2, 3, 4)):
        rng = rng_for(cfg.seed, "poly", m)
        d = cfg.cap(3)
        for i in range(3):
            p, q, r = (random_polynomial(m, d, rng, 3, complex_=True) for _ in range(3))
            yield f"mul associative m={m} #{i}", {"m": m}, lambda p=p, q=q, r=r: ((p * q) * r, p * (q * r))
            yield f"mul distributive m={m} #{i}", {"m": m}, lambda p=p, q=q, r=r: (p * (q + r), p * q + p * r)
            yield (
                f"x(xp) = -|x|^2 p m={m} #{i}",
                {"m": m},
                lambda p=p, m=m: (vector_power_mul(p, 2), -(norm_squared(m) * p)),
            )
            pt = [rng.randint(-3, 3) for _ in range(m)]
            yield (
                f"evaluate homomorphism m={m} #{i}",
                {"m": m, "point": pt},
                lambda p=p, q=q, pt=pt: (evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt)),
            )
            yield (
                f"dirac^2 = -laplacian m={m} #{i}",
                {"m": m},
                lambda p=p: (dirac_left(dirac_left(p)), -laplacian(p)),
            )


@criterion("A7", "core", "Fischer round-trip, monogenic parts and uniqueness", 50)
def _a7(cfg):
    for m in cfg.pick_dims((2, 3, 4)):
        for k in range(cfg.cap(5) + 1):
            rng = rng_for(cfg.seed, "A7", m, k)
            for i in range(3):
                R = random_homogeneous(m, k, rng, 4, complex_=(i == 2))
                fp = fischer_decompose(R, degree=k)
                params = {"m": m, "k": k, "seed": i}
                yield f"round-trip m={m} k={k} #{i}", params, lambda fp=fp, R=R: (fp.reassemble(), R)
                yield (
                    f"parts monogenic m={m} k={k} #{i}",
                    params,
                    lambda fp=fp: ([dirac_left(p) for p in fp.parts], [p.zero_like() for p in fp.parts]),
                )
            if k >= 1:
                j = rng.randint(0, k)
                M = random_monogenic(m, k - j, rng)

                def uniq(M=M, j=j, k=k):
                    got = fischer_decompose(vector_power_mul(M, j), degree=k).parts
                    want = [M if s == j else M.zero_like() for s in range(k + 1)]
                    return got, want

                yield f"uniqueness m={m} k={k} j={j}", {"m": m, "k": k, "j": j}, uniq


@criterion("A8", "core", "beta constants match the Dirac operator", 20)
def _a8(cfg):
    for m in cfg.pick_dims((2, 3, 4)):
        rng = rng_for(cfg.seed, "A8", m)
        for k in range(cfg.cap(4) + 1):
            P = random_plane_wave(m, k, rng)
            for s in range(1, 7):
                yield (
                    f"d(x^s P_k) m={m} s={s} k={k}",
                    {"m": m, "s": s, "k": k},
                    lambda P=P, s=s, k=k, m=m: (
                        dirac_left(vector_power_mul(P, s)),
                        vector_power_mul(P, s - 1).scale(beta(s, k, m)),
                    ),
                )


# ---- hermite -------------------------------------------------------------------

@criterion("hermite.defining", "hermite", "Clifford-Hermite defining relation", 10)
def _hermite_defining(cfg):
    for m in cfg.pick_dims((2, 3)):
        rng = rng_for(cfg.seed, "hermite", m)
        for k in range(cfg.cap(3) + 1):
            P = random_plane_wave(m, k, rng)
            for s in range(5):

                def rel(P=P, s=s, k=k, m=m):
                    g = GaussianSection(P, HALF)
                    for _ in range(s):
                        g = weighted_dirac(g)
                    H = clifford_hermite(s, k, m).apply(P)
                    return g.poly, H.scale((-1) ** s)

                yield f"(-1)^s d^s(P e) = H P e m={m} s={s} k={k}", {"m": m, "s": s, "k": k}, rel


@criterion("A2", "hermite", "1D orthogonality <psi_l, psi_k> = delta k!", 49)
def _a2(cfg):
    for l, k in product(range(7), repeat=2):
        yield (
            f"<psi_{l}, psi_{k}>",
            {"l": l, "k": k},
            lambda l=l, k=k: (
                l2_inner_product(scalar_basis_section((l,)), scalar_basis_section((k,))),
                MultiVector.scalar(1, factorial(k) if l == k else 0),
            ),
        )


@criterion("A3", "hermite", "multi-index transform and norms", 20)
def _a3(cfg):
    for m in cfg.pick_dims((2, 3)):
        for ks in _multi_indices(m, cfg.cap(5)):
            f = scalar_basis_section(ks)
            yield f"B[psi_{ks}]", {"m": m, "k": list(ks)}, lambda f=f, m=m, ks=ks: (segal_bargmann(f), _zpow(m, ks))
            yield (
                f"|psi_{ks}|^2",
                {"m": m, "k": list(ks)},
                lambda f=f, m=m, ks=ks: (l2_inner_product(f, f), MultiVector.scalar(m, prod(factorial(k) for k in ks))),
            )


# ---- bargmann ------------------------------------------------------------------

@criterion("A1", "bargmann", "1D transform B[psi_k] = z^k", 9)
def _a1(cfg):
    for k in range(9):
        yield f"B[psi_{k}]", {"k": k}, lambda k=k: (segal_bargmann(scalar_basis_section((k,))), _zpow(1, (k,)))


@criterion("A4", "bargmann", "plane wave (x1 - e1e2 x2)^k transforms to (z1 - e1e2 z2)^k", 12)
def _a4(cfg):
    for m in cfg.pick_dims((2, 3)):
        e1 = [int(j == 0) for j in range(m)]
        e2 = [int(j == 1) for j in range(m)]
        for k in range(cfg.cap(5) + 1):

            def both(m=m, k=k):
                P = plane_wave(e1, e2, k)
                lin = CliffPoly(
                    m,
                    "z",
                    {
                        tuple(int(j == 0) for j in range(m)): 1,
                        tuple(int(j == 1) for j in range(m)): MultiVector.blade(m, (1, 2), -1),
                    },
                )
                return segal_bargmann(GaussianSection(P, QUARTER)), lin ** k

            yield f"plane wave m={m} k={k}", {"m": m, "k": k}, both


def _basis_grid(cfg, salt):
    for m in cfg.pick_dims((2, 3)):
        for k in range(cfg.cap(3) + 1):
            for idx, P in enumerate(_sample_monogenics(m, k, cfg, salt)):
                for s in range(cfg.cap(3) + 1):
                    yield m, k, s, idx, P


@criterion("A5", "bargmann", "B[psi_{s,k} P_k] = z^s B[P_k e^{-|x|^2/4}]", 20)
def _a5(cfg):
    for m, k, s, idx, P in _basis_grid(cfg, "A5"):
        yield (
            f"m={m} s={s} k={k} P#{idx}",
            {"m": m, "s": s, "k": k, "P": idx},
            lambda s=s, k=k, P=P: hermite_shift_check(s, k, P),
        )


@criterion("A6", "bargmann", "B[H_{s,k} e^{-|x|^2/4} P_k] = z^s P_k(z)", 20)
def _a6(cfg):
    for m, k, s, idx, P in _basis_grid(cfg, "A6"):
        params = {"m": m, "s": s, "k": k, "P": idx}
        yield (
            f"heat route m={m} s={s} k={k} P#{idx}",
            params,
            lambda s=s, k=k, P=P: (segal_bargmann(basis_section(s, k, P)), vector_power_mul(P.with_role("z"), s)),
        )
        yield (
            f"moment route m={m} s={s} k={k} P#{idx}",
            params,
            lambda s=s, k=k, P=P: (
                segal_bargmann_moments(basis_section(s, k, P)),
                vector_power_mul(P.with_role("z"), s),
            ),
        )


@criterion("A11", "bargmann", "isometry on basis sections; Fischer summands Bargmann-orthogonal", 20)
def _a11(cfg):
    for m in cfg.pick_dims((2, 3)):
        top = cfg.cap(4)
        sections = []
        for k in range(top + 1):
            for idx, P in enumerate(_sample_monogenics(m, k, cfg, "A11")):
                for s in range(top - k + 1):
                    f = basis_section(s, k, P)
                    sections.append(((s, k, idx), f, segal_bargmann(f)))
        for (la, f, Bf), (lb, g, Bg) in product(sections, repeat=2):
            yield (
                f"isometry m={m} {la} x {lb}",
                {"m": m, "f": list(la), "g": list(lb)},
                lambda f=f, g=g, Bf=Bf, Bg=Bg: (l2_inner_product(f, g), bargmann_inner_product(Bf, Bg)),
            )
        rng = rng_for(cfg.seed, "A11-orth", m)
        for i in range(6):
            f = random_polynomial(m, top, rng, 6, complex_=True, role="z")
            parts = fischer_summands(f)
            for a, b in combinations(sorted(parts), 2):
                yield (
                    f"summands orthogonal m={m} #{i} j={a},{b}",
                    {"m": m, "j": [a, b]},
                    lambda pa=parts[a], pb=parts[b], m=m: (
                        [bargmann_inner_product(pa, pb), bargmann_inner_product(pb, pa)],
                        [MultiVector(m), MultiVector(m)],
                    ),
                )


@criterion("A12", "bargmann", "Fischer-Gaussian (harmonic) and Bargmann-Fischer identities", 40)
def _a12(cfg):
    dims = cfg.pick_dims((2, 3))
    top = cfg.cap(4)
    for i in range(24):
        m = dims[i % len(dims)]
        rng = rng_for(cfg.seed, "A12", i)
        R, S = random_harmonic(m, top, rng), random_harmonic(m, top, rng)
        yield f"harmonic m={m} #{i}", {"m": m}, lambda R=R, S=S: fischer_gaussian_identity_check(R, S)
        R, S = random_polynomial(m, top, rng, 5, True), random_polynomial(m, top, rng, 5, True)
        yield (
            f"complex m={m} #{i}",
            {"m": m},
            lambda R=R, S=S: (fischer_inner_product(R, S), bargmann_inner_product(R.with_role("z"), S.with_role("z"))),
        )


@criterion("A14", "bargmann", "monogenic part of B[g e^{-|x|^2/4}] is g(z)", 10)
def _a14(cfg):
    for m in cfg.pick_dims((2, 3)):
        for k in range(cfg.cap(4) + 1):
            for idx, g in enumerate(_sample_monogenics(m, k, cfg, "A14")):
                yield (
                    f"m={m} k={k} g#{idx}",
                    {"m": m, "k": k, "g": idx},
                    lambda g=g: (monogenic_part_of_transform(GaussianSection(g, QUARTER)), g.with_role("z")),
                )


# ---- kernels -------------------------------------------------------------------

@criterion("A9", "kernels", "zonal route agreement", 20)
def _a9(cfg):
    for m in cfg.pick_dims((2, 3, 4)):
        for k in range(cfg.cap(5) + 1):
            for s in range(k + 1):
                yield (
                    f"fischer vs recursion m={m} (k,s)=({k},{s})",
                    {"m": m, "k": k, "s": s},
                    lambda k=k, s=s, m=m: (zonal(k, s, m, "fischer"), zonal(k, s, m, "recursion")),
                )
            if m >= 3:
                yield (
                    f"fischer vs gegenbauer m={m} (k,s)=({k},0)",
                    {"m": m, "k": k, "s": 0},
                    lambda k=k, m=m: (zonal(k, 0, m, "fischer"), zonal(k, 0, m, "gegenbauer")),
                )


@criterion("kernels.structure", "kernels", "zonal bihomogeneity, two-sided monogenicity, reassembly", 10)
def _kernels_structure(cfg):
    for m in cfg.pick_dims((2, 3, 4)):
        K = cfg.cap(5)
        for k in range(K + 1):
            for s in range(k + 1):
                Z = zonal(k, s, m, "fischer")
                yield (
                    f"Z_{k},{s} structure m={m}",
                    {"m": m, "k": k, "s": s},
                    lambda Z=Z, k=k, s=s: (
                        (Z.homogeneous_component(k - s, 0) == Z, Z.homogeneous_component(k - s, 1) == Z, two_sided_monogenic(Z)),
                        (True, True, True),
                    ),
                )

            def reassemble(k=k, m=m):
                Zs = [zonal(k, s, m, "fischer") for s in range(k + 1)]
                total = Zs[0].zero_like()
                for s, Z in enumerate(Zs):
                    total = total + vector_power_mul(vector_power_mul(Z, s, "left", 0), s, "right", 1)
                return total, exp_pairing_taylor(k, m).homogeneous_component(2 * k)

            yield f"sum x^s Z u^s = <x,u>^k/k! m={m} k={k}", {"m": m, "k": k}, reassemble


@criterion("A10", "kernels", "reproducing property of Z_k and truncated E", 16)
def _a10(cfg):
    for m in cfg.pick_dims((2, 3)):
        top = cfg.cap(4)
        table = default_table(m, top + 1)
        for k in range(top + 1):
            for idx, P in enumerate(_sample_monogenics(m, k, cfg, "A10")):
                params = {"m": m, "k": k, "P": idx}
                yield f"[Z_k(u,x)^+, P] m={m} k={k} P#{idx}", params, lambda P=P: reproducing_check(P, table, "zonal")
                yield (
                    f"[E<=K(u,x)^+, P] m={m} k={k} K={top + 1} P#{idx}",
                    dict(params, K=top + 1),
                    lambda P=P: reproducing_check(P, table, "fourier_borel"),
                )
                tk = default_table(m, k)
                yield (
                    f"[E<=K(u,x)^+, P] m={m} k={k} K={k} P#{idx}",
                    dict(params, K=k),
                    lambda P=P, tk=tk: reproducing_check(P, tk, "fourier_borel"),
                )


@criterion("A13", "kernels", "B_s kernel projection and Weierstrass kernel reproduction", 10)
def _a13(cfg):
    for m in cfg.pick_dims((2, 3)):
        Kmax = cfg.cap(6)
        for s in (1, 2, 3):
            for K in range(s, Kmax + 1):
                yield (
                    f"B_s = M_s(exp taylor) m={m} s={s} K={K}",
                    {"m": m, "s": s, "K": K},
                    lambda s=s, K=K, m=m: (
                        bs_kernel(s, K, m),
                        truncated_projection(exp_kernel_taylor(K, K + s - 1, m), s, group=0),
                    ),
                )
        rng = rng_for(cfg.seed, "A13", m)
        for s in (1, 2, 3):
            K = max(s, min(Kmax, 4))
            for _ in range(3):
                deg = rng.randint(0, K - s + 1)
                g = random_s_monogenic(m, s, deg, rng)
                yield (
                    f"W[g] via B_s m={m} s={s} K={K} deg={deg}",
                    {"m": m, "s": s, "K": K, "deg": deg},
                    lambda g=g, s=s, K=K: weierstrass_kernel_check(g, s, K),
                )


ACCEPTANCE = tuple(f"A{i}" for i in range(1, 15))


def criteria_for(suite: str) -> list[str]:
    if suite == "all":
        return list(CRITERIA)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    return [k for k, c in CRITERIA.items() if c.suite == suite]


def _run_for_report(args) -> tuple[str, list[dict]]:
    key, cfg, full = args
    return key, [c.to_json(full) for c in run_criterion(key, cfg)]


def run_suite(suite: str, cfg: Settings, jobs: int = 1, full: bool = False) -> dict:
    """Run a suite and assemble the VerifyReport JSON object."""
    keys = criteria_for(suite)
    work = [(k, cfg, full) for k in keys]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(pool.map(_run_for_report, work))
    else:
        results = dict(map(_run_for_report, work))
    cases = []
    summary = {}
    for key in keys:
        rows = results[key]
        for r in rows:
            r["criterion"] = key
        cases.extend(rows)
        passed = sum(r["equal"] for r in rows)
        summary[key] = {
            "title": CRITERIA[key].title,
            "cases": len(rows),
            "passed": passed,
            "ok": passed == len(rows) and len(rows) >= min(CRITERIA[key].min_cases, 1),
        }
    total = len(cases)
    passed = sum(r["equal"] for r in cases)
    return {
        "suite": suite,
        "seed": cfg.seed,
        "cases": cases,
        "summary": {"total": total, "passed": passed, "failed": total - passed, "criteria": summary},
        "ok": passed == total,
    }
