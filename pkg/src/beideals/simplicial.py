"""Stanley-Reisner complexes of square-free monomial ideals, with exact
simplicial homology over a chosen coefficient field.

Vertices are variable indices 0..nvars-1 and faces are bitmasks over them.
A subset is a face exactly when it contains no generator's support.  The
reduced chain complex includes the empty face, so the homology of the
complex whose only face is the empty set has rank 1 in dimension -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polys import mono_is_squarefree, mono_support


def support_masks(mingens, nvars: int) -> list:
    """Supports of square-free generators as bitmasks; validates inputs."""
    masks = []
    for m in mingens:
        if len(m) != nvars:
            raise ValueError("generator does not match the variable count")
        if not mono_is_squarefree(m):
            raise ValueError(f"generator {m} is not square-free")
        mask = 0
        for v in mono_support(m):
            mask |= 1 << v
        if mask == 0:
            raise ValueError("constant generator: the ideal is the unit ideal")
        masks.append(mask)
    return masks


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet description of a complex on vertices 0..nvars-1."""

    nvars: int
    facets: tuple  # sorted tuples of vertex indices, pairwise incomparable

    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def max_facet_size(self) -> int:
        return max(len(f) for f in self.facets)


def stanley_reisner(mingens, nvars: int) -> SimplicialComplex:
    """Complex whose faces are the subsets containing no generator support.

    Works on all nvars vertices: a variable absent from every generator is
    a cone point and appears in every facet.  Brute force over subsets, so
    meant for the desk scale (nvars around 16 or less).
    """
    masks = support_masks(mingens, nvars)
    full = (1 << nvars) - 1

    def is_face(s: int) -> bool:
        return all(s & m != m for m in masks)

    facets = []
    for s in range(full + 1):
        if not is_face(s):
            continue
        maximal = True
        for v in range(nvars):
            if not s >> v & 1 and is_face(s | 1 << v):
                maximal = False
                break
        if maximal:
            facets.append(tuple(v for v in range(nvars) if s >> v & 1))
    facets.sort(key=lambda f: (len(f), f))
    return SimplicialComplex(nvars, tuple(facets))


def krull_dim(complex_: SimplicialComplex) -> int:
    """Krull dimension of the quotient by the ideal: the largest facet size."""
    return complex_.max_facet_size()


# ----------------------------------------------------------------------
# homology of restrictions, used by Hochster's formula
# ----------------------------------------------------------------------

def restriction_faces(masks, sigma: int) -> list:
    """All faces of the restriction to the vertex set ``sigma`` (a bitmask).

    Returns face bitmasks including 0 (the empty face).  Only generators
    whose support lies inside sigma can obstruct, so they are filtered
    first.
    """
    local = [m for m in masks if m & sigma == m]
    faces = []
    s = sigma
    while True:
        if all(s & m != m for m in local):
            faces.append(s)
        if s == 0:
            break
        s = (s - 1) & sigma
    return faces


def matrix_rank(rows, fld) -> int:
    """Rank of a sparse integer matrix over the field.

    ``rows`` is a list of dicts column -> nonzero int entry.  Over the
    rationals the elimination is fraction-free (integer cross
    multiplication), since the rank of an integer matrix over QQ needs no
    division; over F_p it is plain modular elimination.
    """
    if fld.char == 0:
        return _rank_over_z(rows)
    return _rank_mod_p(rows, fld.char)


def _rank_over_z(rows) -> int:
    pivots = {}
    rank = 0
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = r
                rank += 1
                break
            a = r.pop(c)
            pc = piv[c]
            new = {k: pc * v for k, v in r.items()}
            for k, v in piv.items():
                if k == c:
                    continue
                s = new.get(k, 0) - a * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            r = new
    return rank


def _rank_mod_p(rows, p: int) -> int:
    pivots = {}
    rank = 0
    for row in rows:
        r = {}
        for c, v in row.items():
            v %= p
            if v:
                r[c] = v
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                rank += 1
                break
            a = r.pop(c)
            for k, v in piv.items():
                if k == c:
                    continue
                s = (r.get(k, 0) - a * v) % p
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
    return rank


def boundary_rows(lower_index: dict, faces: list) -> list:
    """Rows of the boundary matrix, one row per face of the upper dimension.

    The row for a face lists, with alternating signs, the positions of its
    codimension-one subfaces in ``lower_index``.  Transposing rows and
    columns leaves rank unchanged, so rows-per-face is fine.
    """
    rows = []
    for f in faces:
        row = {}
        sign = 1
        m = f
        while m:
            v = m & -m
            row[lower_index[f ^ v]] = sign
            sign = -sign
            m ^= v
        rows.append(row)
    return rows


def chain_data(faces) -> tuple:
    """Face counts and boundary rows per dimension, field-independent.

    Returns (counts, boundaries): counts maps dimension to the number of
    faces there, boundaries maps d to the rows of the boundary map from
    dimension d.  Computed once and ranked over as many fields as needed.
    """
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    if not by_dim:
        return {}, {}
    top = max(by_dim)
    counts = {d: len(by_dim.get(d, [])) for d in range(-1, top + 1)}
    boundaries = {}
    for d in range(0, top + 1):
        lower = by_dim.get(d - 1, [])
        index = {f: t for t, f in enumerate(lower)}
        boundaries[d] = boundary_rows(index, by_dim.get(d, []))
    return counts, boundaries


def homology_ranks_from(counts: dict, boundaries: dict, fld) -> dict:
    """Reduced homology ranks from precomputed chain data."""
    if not counts:
        return {}
    ranks = {d: matrix_rank(rows, fld) for d, rows in boundaries.items()}
    top = max(counts)
    return {
        d: counts[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        for d in range(-1, top + 1)
    }


def homology_ranks(faces, fld) -> dict:
    """Reduced homology ranks by dimension for a face list (bitmasks).

    Expects the empty face 0 to be present when the complex is nonempty.
    Returns {d: rank} for d = -1 .. dim, zeros included.
    """
    counts, boundaries = chain_data(faces)
    return homology_ranks_from(counts, boundaries, fld)
