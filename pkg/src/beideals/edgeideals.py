"""Binomial edge ideals and their combinatorial Groebner theory.

For a graph G on vertices 1..n, the edge ideal lives in K[x_1..x_n,
y_1..y_n] and is generated by the 2x2 minors f_ij = x_i*y_j - x_j*y_i over
the edges {i, j}.  The lex Groebner basis is indexed by admissible paths:
the element for a path from i to j is u * f_ij where u collects x_k over
interior vertices k > j and y_k over interior vertices k < i.

The Frobenius side: in characteristic p the product of the consecutive
edge binomials, each raised to the (p-1)-st power, witnesses F-purity via
the colon criterion (ideal^[p] : ideal) versus m^[p].
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import GF, QQ
from .graphs import AdmissiblePath, Graph, admissible_paths, is_closed_with_labeling, is_connected
from .groebner import (
    IdealBasis,
    buchberger,
    colon_contains,
    frobenius_power,
    normal_form,
    not_in_bracket_m,
)
from .polys import Polynomial, PolyContext, mono_degree, mono_divides, mono_mul


class NotClosedError(ValueError):
    """The graph's labeling is not closed, so the check's hypothesis fails."""


def edge_binomial(ctx: PolyContext, i: int, j: int) -> Polynomial:
    """f_ij = x_i*y_j - x_j*y_i for i < j; f_ji = -f_ij; i == j is an error."""
    if i == j:
        raise ValueError(f"edge binomial needs distinct endpoints, got ({i}, {j})")
    if not (1 <= i <= ctx.n and 1 <= j <= ctx.n):
        raise ValueError(f"endpoints ({i}, {j}) out of range for n={ctx.n}")
    one = ctx.field.one
    pos = ctx.monomial(**{f"x{i}": 1, f"y{j}": 1})
    neg = ctx.monomial(**{f"x{j}": 1, f"y{i}": 1})
    return Polynomial(ctx, {pos: one, neg: ctx.field.neg(one)})


def edge_ideal_generators(ctx: PolyContext, g: Graph) -> IdealBasis:
    """The generating set {f_ij : {i, j} an edge of g}."""
    if ctx.n != g.n:
        raise ValueError(f"ring has n={ctx.n} but graph has n={g.n}")
    return IdealBasis([edge_binomial(ctx, i, j) for i, j in g.sorted_edges()])


@dataclass(frozen=True)
class GroebnerElement:
    """One reduced-basis element: the admissible path, its monomial u, and u * f_ij."""

    path: AdmissiblePath
    path_monomial: tuple
    poly: Polynomial


def path_monomial(ctx: PolyContext, path: AdmissiblePath) -> tuple:
    """u for the path: x_k for interior k > j times y_k for interior k < i."""
    powers = {}
    for k in path.interior:
        name = f"x{k}" if k > path.j else f"y{k}"
        powers[name] = 1
    return ctx.monomial(**powers)


def admissible_groebner_basis(g: Graph, fld=QQ) -> list:
    """The lex Groebner basis of the edge ideal, one element per admissible path.

    Elements come out sorted by (total degree, leading monomial); each is
    monic with leading monomial u * x_i * y_j.
    """
    ctx = PolyContext(g.n, fld)
    elems = []
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            f_ij = edge_binomial(ctx, i, j)
            for path in admissible_paths(g, i, j):
                u = path_monomial(ctx, path)
                elems.append(GroebnerElement(path, u, f_ij.times_term(u, ctx.field.one)))
    elems.sort(key=lambda e: (e.poly.degree(), e.poly.lm()))
    return elems


def groebner_ideal_basis(g: Graph, fld=QQ) -> IdealBasis:
    """The admissible-path basis packaged as a marked IdealBasis."""
    return IdealBasis(
        [e.poly for e in admissible_groebner_basis(g, fld)], marked_groebner=True
    )


def initial_ideal_generators(g: Graph) -> list:
    """Minimal monomial generators of the lex initial ideal, as exponent tuples.

    These are the monomials u * x_i * y_j over admissible paths.  They are
    square-free, and minimality (no generator divides another) is a theorem;
    it is re-checked here and a violation is an internal error.
    """
    ctx = PolyContext(g.n, QQ)
    gens = []
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            head = ctx.monomial(**{f"x{i}": 1, f"y{j}": 1})
            for path in admissible_paths(g, i, j):
                gens.append(mono_mul(path_monomial(ctx, path), head))
    gens.sort(key=lambda m: (mono_degree(m), m))
    for a, m in enumerate(gens):
        for b, m2 in enumerate(gens):
            if a != b and mono_divides(m, m2):
                raise RuntimeError(
                    "internal error: initial-ideal generators are not minimal"
                )
    return gens


def plucker_relation(ctx: PolyContext, i: int, j: int, k: int, l: int) -> Polynomial:
    """f_ij*f_kl - f_ik*f_jl + f_il*f_jk for i < j < k < l; identically zero.

    The value is computed, not assumed: callers assert on it.
    """
    if not i < j < k < l:
        raise ValueError(f"indices must be strictly increasing, got {(i, j, k, l)}")
    if l > ctx.n:
        raise ValueError(f"index {l} out of range for n={ctx.n}")

    def f(a, b):
        return edge_binomial(ctx, a, b)

    return f(i, j) * f(k, l) - f(i, k) * f(j, l) + f(i, l) * f(j, k)


def pair_power_product(ctx: PolyContext, vertices, exponent: int) -> Polynomial:
    """Product of f_{v_t, v_{t+1}} ** exponent over consecutive entries.

    Uses the signed convention f_ba = -f_ab, so the sequence may run in
    either direction through each pair.
    """
    seq = tuple(vertices)
    if len(seq) < 2:
        raise ValueError("need at least two vertices")
    out = ctx.one()
    for t in range(len(seq) - 1):
        a, b = seq[t], seq[t + 1]
        if a == b:
            raise ValueError(f"repeated consecutive vertex {a}")
        f = edge_binomial(ctx, a, b) if a < b else -edge_binomial(ctx, b, a)
        out = out * f**exponent
    return out


def fedder_witness(g: Graph, p: int) -> Polynomial:
    """The splitting witness: product over v of f_{v, v+1}^(p-1).

    Total degree is 2*(n-1)*(p-1) and the leading monomial is
    x_1^(p-1)..x_{n-1}^(p-1) * y_2^(p-1)..y_n^(p-1), every exponent at most
    p - 1, which keeps the witness outside m^[p].
    """
    if g.n < 2:
        raise ValueError("witness needs at least two vertices")
    ctx = PolyContext(g.n, GF(p))
    return pair_power_product(ctx, range(1, g.n + 1), p - 1)


@dataclass(frozen=True)
class FedderCertificate:
    """Outcome of the F-purity check at a prime p.

    ``valid`` holds exactly when the witness avoids m^[p] and every edge
    binomial multiplies it into the bracket power of the ideal.
    """

    n: int
    p: int
    witness: Polynomial
    witness_degree: int
    not_in_m_bracket: bool
    edge_memberships: dict
    closed_labeling: bool
    forced: bool

    @property
    def valid(self) -> bool:
        return self.not_in_m_bracket and all(self.edge_memberships.values())

    def to_json_dict(self) -> dict:
        from .polys import format_poly

        return {
            "n": self.n,
            "p": self.p,
            "witness": format_poly(self.witness),
            "witness_degree": self.witness_degree,
            "not_in_m_bracket": self.not_in_m_bracket,
            "edge_memberships": [
                {"edge": list(e), "in_colon": ok}
                for e, ok in sorted(self.edge_memberships.items())
            ],
            "closed_labeling": self.closed_labeling,
            "forced": self.forced,
            "valid": self.valid,
        }


def fedder_check(g: Graph, p: int, force: bool = False) -> FedderCertificate:
    """Run the F-purity criterion for the edge ideal of g at the prime p.

    Requires g connected and its labeling closed; a non-closed labeling is
    refused unless ``force`` is set, in which case the computation runs
    anyway and the certificate records the failed hypothesis.
    """
    if not is_connected(g):
        raise ValueError("the check needs a connected graph")
    if g.n < 2:
        raise ValueError("the check needs at least one edge")
    closed = is_closed_with_labeling(g)
    if not closed and not force:
        raise NotClosedError(
            "labeling is not closed; rerun with force to compute anyway"
        )
    ctx = PolyContext(g.n, GF(p))
    gens = edge_ideal_generators(ctx, g)
    bracket_gb = buchberger(frobenius_power(gens, p))
    witness = fedder_witness(g, p)
    memberships = {}
    for i, j in g.sorted_edges():
        product = witness * edge_binomial(ctx, i, j)
        memberships[(i, j)] = normal_form(product, bracket_gb).is_zero()
    return FedderCertificate(
        n=g.n,
        p=p,
        witness=witness,
        witness_degree=witness.degree(),
        not_in_m_bracket=not_in_bracket_m(witness, p),
        edge_memberships=memberships,
        closed_labeling=closed,
        forced=force,
    )


def swap_congruence_holds(g: Graph, vertices, pos: int, p: int) -> bool:
    """Transposing an adjacent edge pair inside a vertex chain preserves the
    chain product modulo the bracket power.

    ``vertices`` is a chain (v_1, ..., v_s); ``pos`` is the 0-based index of
    the left element of the swapped pair, which must be an edge of g and
    must have a predecessor and a successor in the chain.  Checks that the
    two chain products, each a product of f-powers with exponent p - 1,
    agree modulo ideal^[p].
    """
    seq = tuple(vertices)
    if len(seq) < 4:
        raise ValueError("chain too short: the swap needs a neighbor on each side")
    if not 1 <= pos <= len(seq) - 3:
        raise ValueError(f"swap position {pos} has no neighbor on each side")
    a, b = seq[pos], seq[pos + 1]
    if not g.has_edge(a, b):
        raise ValueError(f"swapped pair ({a}, {b}) is not an edge")
    swapped = seq[:pos] + (b, a) + seq[pos + 2:]
    ctx = PolyContext(g.n, GF(p))
    lhs = pair_power_product(ctx, seq, p - 1)
    rhs = pair_power_product(ctx, swapped, p - 1)
    if lhs == rhs:
        return True
    gens = edge_ideal_generators(ctx, g)
    bracket_gb = buchberger(frobenius_power(gens, p))
    return normal_form(lhs - rhs, bracket_gb).is_zero()


# ----------------------------------------------------------------------
# weight vectors certifying the lex initial terms
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class WeightVector:
    """Nonnegative integer weights, x-block then y-block, that pick out the
    lex leading monomial of every element of a basis by weighted degree."""

    weights: tuple

    def degree(self, m: tuple) -> int:
        return sum(w * e for w, e in zip(self.weights, m))


def initial_by_weight(f: Polynomial, w: WeightVector) -> tuple:
    """Monomial of f maximizing (weighted degree, lex) in that order."""
    return max(f.terms, key=lambda m: (w.degree(m), m))


def _dominates(w: WeightVector, polys) -> bool:
    for f in polys:
        lead = f.lm()
        d = w.degree(lead)
        if any(w.degree(m) >= d for m in f.terms if m != lead):
            return False
    return True


def find_weight_vector(elements) -> WeightVector:
    """A weight vector whose weighted order isolates each lex leading term.

    Tries the closed form w(x_i) = n - i, w(y_i) = 0 first; on the basis
    elements u * f_ij the two monomials differ by n - i versus n - j with
    i < j, so dominance is strict.  If a basis shape ever defeats the
    closed form, a bounded integer repair search runs before giving up.
    """
    polys = [e.poly if isinstance(e, GroebnerElement) else e for e in elements]
    if not polys:
        raise ValueError("need a nonempty basis")
    ctx = polys[0].ctx
    n = ctx.n
    closed = WeightVector(tuple(n - i for i in range(1, n + 1)) + (0,) * n)
    if _dominates(closed, polys):
        return closed

    bound = 4 * n
    w = list(closed.weights)
    for _ in range(1000 * len(polys)):
        cand = WeightVector(tuple(w))
        violated = None
        for f in polys:
            lead = f.lm()
            d = cand.degree(lead)
            for m in f.terms:
                if m != lead and cand.degree(m) >= d:
                    violated = (lead, m)
                    break
            if violated:
                break
        if violated is None:
            return cand
        lead, m = violated
        for t in range(2 * n):
            w[t] = min(bound, max(0, w[t] + lead[t] - m[t]))
    raise ValueError("no dominating weight vector found within bounds; this is a defect")
