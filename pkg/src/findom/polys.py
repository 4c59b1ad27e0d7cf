"""Sparse multivariate polynomials over an exact field.

A polynomial is a ``dict`` mapping exponent tuples to nonzero coefficients.
Callers treat these dicts as immutable once built.
"""

from __future__ import annotations

from itertools import combinations


def lex_key(mono):
    return mono


def grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


ORDERS = {"lex": lex_key, "grevlex": grevlex_key}


def padd(p, q):
    out = dict(p)
    for m, c in q.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def pneg(p):
    return {m: -c for m, c in p.items()}


def psub(p, q):
    return padd(p, pneg(q))


def pscale(p, c):
    if not c:
        return {}
    return {m: c * v for m, v in p.items()}


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def pmul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            s = out.get(m)
            c = c1 * c2
            if s is None:
                out[m] = c
            else:
                out[m] = s + c
    return {m: c for m, c in out.items() if c}


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def leading(p, key):
    m = max(p, key=key)
    return m, p[m]


class GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""

    def __init__(self, gens, nvars, order="lex"):
        if order not in ORDERS:
            raise ValueError("unknown monomial order %r" % order)
        self.order = order
        self.key = ORDERS[order]
        self.nvars = nvars
        self.basis = self._reduce_basis(self._buchberger([g for g in gens if g]))
        self.leads = [leading(g, self.key)[0] for g in self.basis]

    def _monic(self, p):
        _, c = leading(p, self.key)
        inv = 1 / c
        return {m: v * inv for m, v in p.items()}

    def _reduce_by(self, p, basis, leads):
        key = self.key
        p = dict(p)
        rem = {}
        while p:
            m, c = leading(p, key)
            for g, lm in zip(basis, leads):
                if divides(lm, m):
                    q = mono_div(m, lm)
                    # g is monic
                    for gm, gc in g.items():
                        t = mono_mul(gm, q)
                        v = p.get(t)
                        v = -c * gc if v is None else v - c * gc
                        if v:
                            p[t] = v
                        else:
                            p.pop(t, None)
                    break
            else:
                rem[m] = c
                del p[m]
        return rem

    def _spoly(self, f, g):
        lf, cf = leading(f, self.key)
        lg, cg = leading(g, self.key)
        l = mono_lcm(lf, lg)
        a = {mono_div(l, lf): 1 / cf}
        b = {mono_div(l, lg): 1 / cg}
        return psub(pmul(a, f), pmul(b, g))

    def _buchberger(self, gens):
        basis = [self._monic(g) for g in gens]
        pairs = list(combinations(range(len(basis)), 2))
        while pairs:
            i, j = pairs.pop()
            li = leading(basis[i], self.key)[0]
            lj = leading(basis[j], self.key)[0]
            if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                continue  # coprime leading terms
            leads = [leading(g, self.key)[0] for g in basis]
            r = self._reduce_by(self._spoly(basis[i], basis[j]), basis, leads)
            if r:
                basis.append(self._monic(r))
                n = len(basis) - 1
                pairs.extend((k, n) for k in range(n))
        return basis

    def _reduce_basis(self, basis):
        basis = [g for g in basis]
        # drop elements whose leading monomial is divisible by another's
        leads = [leading(g, self.key)[0] for g in basis]
        keep = []
        for i, li in enumerate(leads):
            if any(j != i and divides(lj, li) and (lj != li or j < i)
                   for j, lj in enumerate(leads)):
                continue
            keep.append(basis[i])
        out = []
        for i, g in enumerate(keep):
            others = keep[:i] + keep[i + 1:]
            ol = [leading(h, self.key)[0] for h in others]
            lm, lc = leading(g, self.key)
            tail = {m: c for m, c in g.items() if m != lm}
            tail = self._reduce_by(tail, others, ol)
            out.append(padd({lm: lc}, tail))
        out.sort(key=lambda g: self.key(leading(g, self.key)[0]))
        return out

    def normal_form(self, p):
        return self._reduce_by(p, self.basis, self.leads)

    def is_one(self):
        return any(all(e == 0 for e in lm) for lm in self.leads)


def parse_poly(text, names, field, allow_negative=False):
    """Parse ``"3/2*A^2*B - C + 1"`` into a polynomial dict.

    Exponents may be negative only if ``allow_negative`` (Laurent input).
    """
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = _split_terms(s)
    nv = len(names)
    index = {n: i for i, n in enumerate(names)}
    out = {}
    for sign, body in terms:
        coef = field.convert(1)
        mono = [0] * nv
        for factor in body.split("*"):
            if not factor:
                raise ValueError("malformed term in %r" % text)
            if factor[0].isdigit():
                coef = coef * field.convert(factor)
                continue
            if "^" in factor:
                name, e = factor.split("^", 1)
                e = int(e.strip("()"))
            else:
                name, e = factor, 1
            if name not in index:
                raise ValueError("unknown variable %r in %r" % (name, text))
            if e < 0 and not allow_negative:
                raise ValueError("negative exponent in %r" % text)
            mono[index[name]] += e
        if sign == "-":
            coef = -coef
        out = padd(out, {tuple(mono): coef} if coef else {})
    return out


def _split_terms(s):
    terms = []
    i = 0
    n = len(s)
    while i < n:
        sign = s[i]
        if sign not in "+-":
            raise ValueError("malformed polynomial %r" % s)
        j = i + 1
        while j < n and not (s[j] in "+-" and s[j - 1] not in "^("):
            j += 1
        body = s[i + 1:j]
        if not body:
            raise ValueError("malformed polynomial %r" % s)
        terms.append((sign, body))
        i = j
    return terms


def format_poly(p, names, field, key=lex_key):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=key, reverse=True):
        c = p[m]
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append("%s^%d" % (name, e))
        cs = field.to_str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if factors:
            body = "*".join(factors) if cs == "1" else cs + "*" + "*".join(factors)
        else:
            body = cs
        parts.append(("-" if neg else "+", body))
    out = "".join("%s %s " % (s, b) for s, b in parts).strip()
    if out.startswith("+ "):
        out = out[2:]
    elif out.startswith("- "):
        out = "-" + out[2:]
    return out
