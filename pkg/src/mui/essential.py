"""Maximal subgroups, restriction maps, and the essential ideal.

A maximal subgroup is the kernel of a nonzero linear form, one per point of
the projective space of the dual; restriction is the algebra map that kills
that form.  The essential classes of one degree are the joint kernel of all
restrictions, computed from scratch with exact linear algebra.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from . import field
from .algebra import Element, Ring, ZERO, _element
from .invariants import complement_sign, l_n, mui_set
from .linalg import (
    DegreeSpan,
    SpanBuilder,
    left_null_space,
    monomial_basis,
    rref,
    zero_span,
)
from .steenrod import bockstein, power_op

import numpy as np


@lru_cache(maxsize=None)
def projective_forms(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All nonzero linear forms normalized to leading coefficient 1, in
    lexicographic order; one per projective point."""
    forms = sorted(
        vec
        for vec in product(range(p), repeat=n)
        if any(vec) and next(c for c in vec if c) == 1
    )
    assert len(forms) == (p**n - 1) // (p - 1)
    return tuple(forms)


@dataclass(frozen=True)
class MaximalSubgroup:
    """The kernel of a normalized linear form, with a fixed restriction
    matrix whose rows give the images of the rank-(n-1) generators."""

    ring: Ring
    form: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def subring(self) -> Ring:
        return Ring(self.ring.p, self.ring.n - 1)

    def __repr__(self):
        return f"MaximalSubgroup(form={self.form})"


def _restriction_matrix(form: tuple[int, ...], p: int) -> tuple[tuple[int, ...], ...]:
    # pivot coordinate is eliminated: e_pivot maps to -sum of the others
    n = len(form)
    pivot = next(i for i, c in enumerate(form) if c)
    kept = [i for i in range(n) if i != pivot]
    rows = []
    for i in kept:
        row = [0] * n
        row[i] = 1
        row[pivot] = (-form[i]) % p
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def maximal_subgroups(ring: Ring) -> tuple[MaximalSubgroup, ...]:
    """One subgroup per projective point of the dual, deterministic order."""
    if ring.n < 1:
        raise ValueError("rank must be at least 1")
    return tuple(
        MaximalSubgroup(ring, form, _restriction_matrix(form, ring.p))
        for form in projective_forms(ring.p, ring.n)
    )


@lru_cache(maxsize=None)
def _generator_images(H: MaximalSubgroup) -> tuple[tuple[Element, ...], tuple[Element, ...]]:
    sub = H.subring
    p, n = H.ring.p, H.ring.n
    a_imgs = []
    x_imgs = []
    for i in range(n):
        a_img = sub.zero()
        x_img = sub.zero()
        for t in range(n - 1):
            c = H.matrix[t][i]
            if c:
                if not sub.mod2:
                    a_img = a_img + sub.a(t + 1) * c
                x_img = x_img + sub.x(t + 1) * c
        a_imgs.append(a_img)
        x_imgs.append(x_img)
    return tuple(a_imgs), tuple(x_imgs)


@lru_cache(maxsize=None)
def _restricted_power(H: MaximalSubgroup, i: int, e: int) -> Element:
    return _generator_images(H)[1][i - 1] ** e


def restrict(y: Element, H: MaximalSubgroup) -> Element:
    """Image of y under restriction to H, over rank n-1."""
    if (y.p, y.n) != (H.ring.p, H.ring.n):
        raise ValueError("element and subgroup live over different rings")
    sub = H.subring
    a_imgs, _ = _generator_images(H)
    out = sub.zero()
    for (ext, pows), c in y.terms.items():
        img = sub.scalar(c)
        for idx in ext:
            img = img * a_imgs[idx - 1]
            if img.is_zero():
                break
        if img.is_zero():
            continue
        for i, e in enumerate(pows, start=1):
            if e:
                img = img * _restricted_power(H, i, e)
                if img.is_zero():
                    break
        out = out + img
    return out


def is_essential(y: Element) -> bool:
    """True when every restriction to a maximal subgroup vanishes."""
    ring = Ring(y.p, y.n)
    return all(restrict(y, H).is_zero() for H in maximal_subgroups(ring))


@lru_cache(maxsize=None)
def _restriction_block(ring: Ring, degree: int):
    """Stacked coordinate matrix of all restriction maps on one degree."""
    basis = monomial_basis(ring, degree)
    subs = maximal_subgroups(ring)
    blocks = []
    for H in subs:
        cod = monomial_basis(H.subring, degree)
        A = np.zeros((len(basis), len(cod)), dtype=np.int64)
        for row, mon in enumerate(basis.monomials):
            img = restrict(Element(ring.p, ring.n, {tuple(mon): 1}), H)
            if not img.is_zero():
                A[row] = cod.coords(img)
        blocks.append(A)
    return np.hstack(blocks) if blocks else np.zeros((len(basis), 0), dtype=np.int64)


@lru_cache(maxsize=None)
def _ess_data(ring: Ring, degree: int):
    """(full kernel span, {exterior rank: kernel span embedded in the full
    coordinates}); asserts that the rank pieces sum to the full kernel."""
    basis = monomial_basis(ring, degree)
    dim = len(basis)
    p = ring.p
    stacked = _restriction_block(ring, degree)
    full = DegreeSpan(p, degree, left_null_space(stacked, p))
    ranks = {len(mon.ext) for mon in basis.monomials}
    if len(ranks) == 1:
        # single exterior rank in this degree: the split is the whole kernel
        return full, {ranks.pop(): full}
    by_rank: dict[int, DegreeSpan] = {}
    assembled = []
    for r in sorted(ranks):
        idx = [i for i, mon in enumerate(basis.monomials) if len(mon.ext) == r]
        sub_kernel = left_null_space(stacked[idx], p)
        rows = np.zeros((sub_kernel.shape[0], dim), dtype=np.int64)
        rows[:, idx] = sub_kernel
        by_rank[r] = DegreeSpan(p, degree, rows)
        assembled.extend(rows)
    if assembled:
        recombined = rref(np.array(assembled), p)
    else:
        recombined = np.zeros((0, dim), dtype=np.int64)
    if not (recombined.shape == full.rows.shape and np.array_equal(recombined, full.rows)):
        raise RuntimeError(
            f"essential classes of degree {degree} do not split by exterior rank"
        )
    return full, by_rank


def ess_basis(ring: Ring, degree: int) -> DegreeSpan:
    """RREF basis of the essential classes of one degree."""
    return _ess_data(ring, degree)[0]


def ess_basis_by_rank(ring: Ring, degree: int) -> dict[int, DegreeSpan]:
    """The essential classes of one degree, split by exterior rank."""
    return dict(_ess_data(ring, degree)[1])


def ess_elements(ring: Ring, degree: int) -> list[Element]:
    """The RREF basis of ess_basis as elements."""
    return monomial_basis(ring, degree).elements(ess_basis(ring, degree).rows)


def decompose(y: Element) -> dict[tuple[int, ...], Element]:
    """Coordinates of an essential class over the polynomial subalgebra, in
    the basis of subset invariants of its exterior rank.

    Requires y nonzero, concentrated in one exterior rank and essential; the
    returned map S -> f_S satisfies sum of f_S * M_{n,S} == y exactly.
    """
    ring = Ring(y.p, y.n)
    if ring.mod2:
        raise ValueError("subset-invariant decomposition needs odd p")
    if y.is_zero():
        raise ValueError("cannot infer the exterior rank of zero")
    ranks = y.exterior_ranks()
    if len(ranks) > 1:
        raise ValueError(f"element mixes exterior ranks {sorted(ranks)}")
    if not is_essential(y):
        raise ValueError("element is not essential")
    r = ranks.pop()
    n, p = ring.n, ring.p
    full = tuple(range(1, n + 1))
    top = mui_set(ring, full)
    lam = top.coefficient(full, (0,) * n)
    lam_inv = field.inv(lam, p)
    big_l = l_n(ring)
    result: dict[tuple[int, ...], Element] = {}
    recon = ring.zero()
    for subset in combinations(range(1, n + 1), r):
        comp = tuple(s for s in full if s not in subset)
        prod = y * mui_set(ring, comp)
        if prod.is_zero():
            f = ring.zero()
        else:
            q = prod.exact_divide(big_l) * complement_sign(ring, subset)
            poly: dict = {}
            for (ext, pows), c in q.terms.items():
                if ext != full:
                    raise RuntimeError("complementary product left the top rank")
                poly[((), pows)] = c * lam_inv
            f = _element(p, n, poly)
        result[subset] = f
        recon = recon + f * mui_set(ring, subset)
    if recon != y:
        raise RuntimeError("decomposition failed to reconstruct the input")
    return result


def steenrod_closure(
    seed: Element, max_degree: int, *, dim_cap: int = 100_000
) -> dict[int, DegreeSpan]:
    """Degreewise spans of the smallest ideal containing the seed and closed
    under the Steenrod operations, up to max_degree.

    Worklist saturation: each new span element is multiplied by every algebra
    generator and hit with every operation whose output degree stays in
    bounds.  All operations strictly raise degree, so one ascending pass over
    the degrees reaches the fixpoint.
    """
    ring = Ring(seed.p, seed.n)
    p = ring.p
    deg = seed.total_degree()
    if not isinstance(deg, int) and deg != ZERO:
        raise ValueError("seed must be homogeneous")
    builders: dict[int, SpanBuilder] = {}
    pending: dict[int, list[Element]] = defaultdict(list)
    total_dim = 0

    def insert(el: Element) -> None:
        nonlocal total_dim
        if el.is_zero():
            return
        d = el.total_degree()
        if d > max_degree:
            return
        builder = builders.get(d)
        if builder is None:
            builder = builders[d] = SpanBuilder(len(monomial_basis(ring, d)), p)
        if builder.insert(monomial_basis(ring, d).coords(el)):
            total_dim += 1
            if total_dim > dim_cap:
                raise RuntimeError(f"closure exceeded the dimension cap {dim_cap}")
            pending[d].append(el)

    if isinstance(deg, int) and deg <= max_degree:
        insert(seed)
    gens = ring.generators()
    for d in range(max_degree + 1):
        for el in pending.get(d, ()):
            for g in gens:
                insert(g * el)
            if not ring.mod2:
                if d + 1 <= max_degree:
                    insert(bockstein(el))
                top = (max_degree - d) // (2 * (p - 1))
            else:
                top = max_degree - d
            for k in range(1, top + 1):
                insert(power_op(k, el))
    return {
        d: builders[d].to_span(d)
        if d in builders
        else zero_span(p, d, len(monomial_basis(ring, d)))
        for d in range(max_degree + 1)
    }


def proof_word(ring: Ring, subset) -> tuple:
    """The explicit operation word carrying the top subset invariant to the
    one indexed by the given subset: a Bockstein step whenever 1 is missing,
    otherwise a power operation P^(p^(u-2)) that walks the smallest gap down."""
    if ring.mod2:
        raise ValueError("proof words need odd p")
    n = ring.n
    target = frozenset(subset)
    everything = frozenset(range(1, n + 1))
    if not target <= everything:
        raise ValueError("subset out of range")
    word = []
    current = target
    while current != everything:
        u = min(everything - current)
        if u == 1:
            word.append(("b",))
            current = current | {1}
        else:
            word.append(("P", ring.p ** (u - 2)))
            current = (current - {u - 1}) | {u}
    return tuple(word)
