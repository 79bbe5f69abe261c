"""Offline catalog builder.

Finds, for each trace ring Z[y]/r(y) the pipeline twists in:
  * unit square-class generators (norm +/-1, independent real-embedding
    sign vectors), and
  * generators of the prime ideals the assembly plans need,
by LLL / Fincke-Pohst search against the trace form Tr(y^(i+j)).  Every
element is verified exactly (norm via resultants, ideal membership by
reduction) before it is written; the runtime package re-verifies all of it
again through verify_catalog_entry.

Writes src/salemforge/data/catalog.txt.  Pure salemforge; no external CAS.
"""

from __future__ import annotations

import sys
import time

sys.path.insert(0, "src")

from salemforge.exact import fppoly as fp
from salemforge.exact import intmatrix as im
from salemforge.exact import intpoly as ip
from salemforge.exact import realalg as ra
from salemforge.lattice import signature
from salemforge.numberfield import (_ideal_hnf, element_norm,
                                    principal_lattice, prime_splitting, twist)

SALEM_TABLE = {
    2: [1, -3, 1],
    4: [1, -1, -1, -1, 1],
    6: [1, 0, -1, -1, -1, 0, 1],
    8: [1, 0, 0, -1, -1, -1, 0, 0, 1],
    10: [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1],
    12: [1, -1, 1, -1, 0, 0, -1, 0, 0, -1, 1, -1, 1],
    14: [1, 0, 0, -1, -1, 0, 0, 1, 0, 0, -1, -1, 0, 0, 1],
    16: [1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 1],
    18: [1, -1, 1, -1, 0, 0, -1, 1, -1, 1, -1, 1, -1, 0, 0, -1, 1, -1, 1],
    20: [1, -1, 0, 0, 0, -1, 1, 0, 0, -1, 1, -1, 0, 0, 1, -1, 0, 0, 0, -1, 1],
    22: [1, 0, -1, -1, 0, 0, 0, 1, 1, 0, -1, -1, -1, 0, 1, 1, 0, 0, 0, -1, -1, 0, 1],
}

CYCLO_IDS = (12, 14, 30)


class Field:
    def __init__(self, label: str, poly: list):
        self.label = label
        self.poly = ip.trim(list(poly))
        self.r = ip.symmetrize_reciprocal(self.poly)
        self.n = ip.degree(self.r)
        ps = ip.power_sums(self.r, 2 * self.n)
        self.t2 = [[int(ps[i + j]) for j in range(self.n)] for i in range(self.n)]
        self.roots = ra.isolate_real_roots(self.r)
        self.units: list[list[int]] = []
        self.primegens: list[dict] = []

    def norm(self, a) -> int:
        return element_norm(self.r, a)

    def sign_vector(self, a) -> tuple:
        return tuple(ra.sign_of_poly_at(a, t) for t in self.roots)

    def reduce_mod_r(self, a) -> list:
        _, rem = ip.divmod_rational(a, self.r)
        return [int(x) for x in rem]

    def mul(self, a, b) -> list:
        return self.reduce_mod_r(ip.mul(a, b))


def unit_seeds(field: Field) -> list[list[int]]:
    out = [[-1]]
    for c in range(-8, 9):
        cand = [-c, 1]
        if abs(field.norm(cand)) == 1:
            out.append(cand)
    for c0 in range(-4, 5):
        for c1 in range(-3, 4):
            cand = ip.trim([c0, c1, 1])
            if ip.degree(cand) >= 1 and abs(field.norm(cand)) == 1:
                out.append(cand)
    return out


def enumerate_units(field: Field, extra: int) -> list[list[int]]:
    basis = im.lll_reduce(im.identity(field.n), form=field.t2)
    gram = im.matmul(im.matmul(basis, field.t2), im.transpose(basis))
    found = []
    from salemforge.lattice import enumerate_quadratic
    for v in enumerate_quadratic(gram, field.n + extra):
        elem = [0] * field.n
        for c, row in zip(v, basis):
            for i in range(field.n):
                elem[i] += c * row[i]
        elem = ip.trim(elem)
        if elem and abs(field.norm(elem)) == 1:
            found.append(elem)
    return found


def _character_primes(field: Field, count=6) -> list[tuple[int, int]]:
    """(q, root) pairs giving residue characters that separate square
    classes beyond the archimedean signs."""
    out = []
    disc = ip.resultant(field.r, ip.derivative(field.r))
    q = 3
    while len(out) < count and q < 400:
        if disc % q:
            for c in range(q):
                if fp.fp_eval([x % q for x in field.r], c, q) == 0:
                    out.append((q, c))
                    break
        q += 2
        while any(q % s == 0 for s in (3, 5, 7)) and q > 7:
            q += 2
    return out


def collect_units(field: Field) -> list[list[int]]:
    """Unit generators that are independent modulo squares, as witnessed by
    real-embedding signs together with residue characters at split primes;
    enriched by pairwise products to enlarge the achievable span."""
    pool = unit_seeds(field)
    pool += enumerate_units(field, 25)
    chars = _character_primes(field)

    def to_bits(elem):
        bits = [0 if s > 0 else 1 for s in field.sign_vector(elem)]
        for q, c in chars:
            v = fp.fp_eval([x % q for x in elem], c, q)
            if v == 0:
                bits.append(0)  # unreachable for units; keep length stable
            else:
                bits.append(0 if pow(v, (q - 1) // 2, q) == 1 else 1)
        return tuple(bits)

    chosen: list[tuple] = []
    span: set[tuple] = {to_bits([1])}

    def try_add(elem):
        bits = to_bits(elem)
        if bits in span:
            return False
        span.update(tuple(a ^ b for a, b in zip(s, bits)) for s in list(span))
        chosen.append((bits, elem))
        return True

    for elem in pool:
        try_add(elem)
    for extra in (40, 55):
        if len(chosen) >= field.n:
            break
        for elem in enumerate_units(field, extra):
            try_add(elem)
    for _ in range(3):
        grew = False
        base = [e for _, e in chosen] + pool[:20]
        for i in range(len(base)):
            for j in range(i + 1, len(base)):
                prod = field.mul(base[i], base[j])
                if abs(field.norm(prod)) == 1 and try_add(prod):
                    grew = True
        if not grew:
            break
    return [e for _, e in chosen]


def find_prime_generator(field: Field, q: int, g: list[int]) -> list[int] | None:
    """Generator of (q, g(y)) with |norm| = q^deg(g), by LLL + enumeration."""
    glift = [c if c <= q // 2 else c - q for c in g]
    rows = _ideal_hnf(field.r, [[q], glift])
    red = im.lll_reduce(rows, form=field.t2)
    target = q ** (len(g) - 1)

    def ok(elem):
        elem = ip.trim(list(elem))
        if not elem or abs(field.norm(elem)) != target:
            return False
        rem = fp.fp_divmod(fp.fp_from_int(elem, q), list(g), q)[1]
        return not rem

    for v in red:
        if ok(v):
            return ip.trim(list(v))
    # unit multiples of the short rows
    for v in red:
        for u in field.units:
            cand = field.mul(list(v), u)
            if ok(cand):
                return cand
    # bounded enumeration on the reduced ideal basis
    gram = im.matmul(im.matmul(red, field.t2), im.transpose(red))
    from salemforge.lattice import enumerate_quadratic
    floor = min(gram[i][i] for i in range(field.n))
    for mult in (1, 2, 4):
        vecs = enumerate_quadratic(gram, floor * mult)
        for v in vecs:
            elem = [0] * field.n
            for c, row in zip(v, red):
                for i in range(field.n):
                    elem[i] += c * row[i]
            if ok(elem):
                return ip.trim(elem)
    return None


def fmt_poly(p) -> str:
    return ip.format_poly_line(ip.trim(list(p)))


def norm_string(q: int, value: int) -> str:
    sign = "-" if value < 0 else ""
    m = 0
    v = abs(value)
    while v % q == 0 and v > 1:
        v //= q
        m += 1
    assert v == 1, (q, value)
    return f"{sign}{q}^{m}" if m != 1 else f"{sign}{q}"


def required_primes(label: str, field: Field) -> list[tuple[int, int | None]]:
    """(q, wanted y-root or None) pairs; None means 'every factor of r mod q
    that the plans can use' (we then store generators for all factors of
    residue degree small enough to need building)."""
    want = {
        "salem22": [(5, None)],
        "salem20": [(5, None), (11, None)],
        "salem18": [(13, None), (7, None)],
        "salem16": [(5, None), (3, None), (29, None)],
        "salem14": [(5, None)],
        "salem12": [(5, None), (31, 15), (13, None)],
        "salem10": [(5, None), (13, None)],
        "salem8": [(3, None)],
        "salem6": [(13, 5)],
        "cyclo12": [(11, None), (13, None)],
        "cyclo14": [(13, None)],
        "cyclo30": [(31, 15)],
    }
    return want.get(label, [])


def main():
    out = ["# salemforge catalog: minimal Salem polynomials, trace-ring units and"]
    out.append("# prime generators.  Produced by tools/build_catalog.py (LLL search),")
    out.append("# every datum re-verified at load time.")
    entries = [(f"salem{d}", poly, f"salem {d}") for d, poly in SALEM_TABLE.items()]
    entries += [(f"cyclo{k}", ip.cyclotomic_poly(k), f"cyclo {k}") for k in CYCLO_IDS]
    for label, poly, header in entries:
        t0 = time.time()
        field = Field(label, poly)
        field.units = collect_units(field)
        print(f"[{label}] deg {field.n}, units: {len(field.units)} "
              f"(sign span 2^{len(field.units)})", flush=True)
        out.append("")
        out.append(header)
        out.append("poly " + fmt_poly(field.poly))
        out.append("trace " + fmt_poly(field.r))
        out.append("simple yes")
        out.append("note minimal-table polynomial; units and generators by exact LLL search")
        for u in field.units:
            out.append("unit " + fmt_poly(u))
        for q, wanted_root in required_primes(label, field):
            ps = prime_splitting(field.r, q)
            if ps.ramified_unhandled:
                print(f"  [{label}] q={q} ramified, skipped")
                continue
            for fct in ps.factors:
                if wanted_root is not None:
                    if len(fct.factor) != 2 or (-fct.factor[0]) % q != wanted_root % q:
                        continue
                gen = find_prime_generator(field, q, fct.factor)
                if gen is None:
                    print(f"  [{label}] q={q} g={fct.factor} NO GENERATOR FOUND")
                    continue
                nv = field.norm(gen)
                out.append(f"primegen q={q} g={{{fmt_poly(fct.factor)}}} "
                           f"norm={norm_string(q, nv)} a={{{fmt_poly(gen)}}}")
                print(f"  [{label}] q={q} deg g={len(fct.factor)-1} gen found "
                      f"norm={nv} ({time.time()-t0:.1f}s)", flush=True)
    path = "src/salemforge/data/catalog.txt"
    import os
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write("\n".join(out) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
