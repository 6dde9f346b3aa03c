"""Generic pentagon verification on labeled fusion trees.

A parenthesization of four tensor factors is a binary tree; a basis vector
of Hom(c, T) assigns a fusion channel to every internal vertex, where a
channel is a simple-object label plus a multiplicity index when both
inputs and the output are the noninvertible object.  The five trees and
five elementary reassociations of the pentagon are built directly from
the associator data, and the two composite paths are compared entry by
entry.  This is deliberately independent of the per-equation verifiers:
it knows nothing about the reduced equation families.

Labels are group elements or the module-level sentinel M.
"""

from __future__ import annotations

M = "m"

T1 = (((0, 1), 2), 3)
T2 = ((0, (1, 2)), 3)
T3 = (0, ((1, 2), 3))
T4 = (0, (1, (2, 3)))
T5 = ((0, 1), (2, 3))

PENTAGON_EDGES = (
    (T1, T2, (0,)),
    (T2, T3, ()),
    (T3, T4, (1,)),
    (T1, T5, ()),
    (T5, T4, ()),
)


def fuse_options(data, x, y) -> list:
    """Channels of x tensor y as (label, index-or-None) pairs."""
    if x != M and y != M:
        return [(x * y, None)]
    if x == M and y == M:
        return [(g, None) for g in data.group.elements()] + [
            (M, i) for i in data.algebra.indices()
        ]
    return [(M, None)]


def _channels(data, shape, leaves, path):
    if isinstance(shape, int):
        return [(leaves[shape], {})]
    out = []
    for lab_l, a_l in _channels(data, shape[0], leaves, path + (0,)):
        for lab_r, a_r in _channels(data, shape[1], leaves, path + (1,)):
            for lab, idx in fuse_options(data, lab_l, lab_r):
                asgn = dict(a_l)
                asgn.update(a_r)
                asgn[path] = (lab, idx)
                out.append((lab, asgn))
    return out


def tree_basis(data, shape, leaves, summand) -> list[dict]:
    """All vertex-channel assignments realizing `summand` at the root."""
    return [asgn for lab, asgn in _channels(data, shape, leaves, ()) if lab == summand]


def freeze(asgn) -> tuple:
    return tuple(sorted(asgn.items()))


def _subtree(shape, path):
    for step in path:
        shape = shape[step]
    return shape


def _label_of(shape, leaves, asgn, path):
    if isinstance(shape, int):
        return leaves[shape]
    return asgn[path][0]


def assoc_value(data, x, y, z, w, p, ia, ic, q, ib, id_):
    """Single associator matrix entry between two channel states.

    Source: (x y) z with inner channel (p, ia) and outer (w, ic).
    Target: x (y z) with inner channel (q, ib) and outer (w, id_).
    """
    ms = (x == M) + (y == M) + (z == M)
    if ms <= 1:
        return 1
    if ms == 2:
        if w != M:
            return 1
        if z != M:
            return data.gamma3_at(z, ia) if id_ == ia else 0
        if y != M:
            return data.gamma2_at(y, ic) if id_ == ic else 0
        return data.gamma1_at(x, ic) if ib == ic else 0
    # x = y = z = m
    if w != M:
        return data.lam_val(w, ia) if ib == data.algebra.perm(ia) else 0
    alg = data.algebra
    if q != M:
        if p != M:
            return data.m_entry()
        return data.r_val(q, ic) if alg.star(ic, ia) == 0 else 0
    if p != M:
        return data.c_val(p, id_) if ib == alg.circ_inverse(id_) else 0
    if alg.star(ic, ia) == id_ and alg.circ(id_, ib) == ic:
        return data.n(ic, ia)
    return 0


def _remap(asgn, path):
    # Vertex keys move when ((X Y) Z) becomes (X (Y Z)) at `path`.
    out = {}
    pl = len(path)
    for key, val in asgn.items():
        if key[:pl] != path:
            out[key] = val
        elif key == path or key == path + (0,):
            continue
        elif key[: pl + 2] == path + (0, 0):
            out[path + (0,) + key[pl + 2:]] = val
        elif key[: pl + 2] == path + (0, 1):
            out[path + (1, 0) + key[pl + 2:]] = val
        else:
            out[path + (1, 1) + key[pl + 1:]] = val
    return out


def associator_edge(data, src_shape, dst_shape, path, leaves, summand) -> dict:
    """Sparse matrix of one elementary reassociation.

    Returns {frozen source state: [(frozen target state, value), ...]}.
    """
    sub = _subtree(src_shape, path)
    (xshape, yshape), zshape = sub
    if _subtree(dst_shape, path) != (xshape, (yshape, zshape)):
        raise ValueError("destination shape does not match the reassociation")
    dst_states = {freeze(a) for a in tree_basis(data, dst_shape, leaves, summand)}
    out = {}
    for asgn in tree_basis(data, src_shape, leaves, summand):
        x = _label_of(xshape, leaves, asgn, path + (0, 0))
        y = _label_of(yshape, leaves, asgn, path + (0, 1))
        z = _label_of(zshape, leaves, asgn, path + (1,))
        p, ia = asgn[path + (0,)]
        w, ic = asgn[path]
        base = _remap(asgn, path)
        terms = []
        for q, ib in fuse_options(data, y, z):
            for w2, id_ in fuse_options(data, x, q):
                if w2 != w:
                    continue
                value = assoc_value(data, x, y, z, w, p, ia, ic, q, ib, id_)
                if not value:
                    continue
                dst = dict(base)
                dst[path + (1,)] = (q, ib)
                dst[path] = (w, id_)
                key = freeze(dst)
                if key not in dst_states:
                    raise AssertionError("reassociation produced an invalid state")
                terms.append((key, value))
        out[freeze(asgn)] = terms
    return out


def compose(later, earlier) -> dict:
    """Matrix product of sparse edges: apply `earlier`, then `later`."""
    out = {}
    for col, terms in earlier.items():
        acc = {}
        for mid, v in terms:
            for row, w in later[mid]:
                acc[row] = acc.get(row, 0) + v * w
        out[col] = [(row, val) for row, val in acc.items() if val]
    return out


def pentagon_discrepancies(data, leaves, summand) -> tuple[list, int]:
    """Compare the two pentagon paths; return (mismatch list, basis size).

    Each mismatch is (row state, column state, three-step value, two-step
    value).  An empty list means the pentagon holds on this word/summand.
    """
    dims = {
        shape: len(tree_basis(data, shape, leaves, summand))
        for shape in (T1, T2, T3, T4, T5)
    }
    if len(set(dims.values())) != 1:
        raise AssertionError(f"hom space dimensions disagree: {dims}")
    e1 = associator_edge(data, T1, T2, (0,), leaves, summand)
    e2 = associator_edge(data, T2, T3, (), leaves, summand)
    e3 = associator_edge(data, T3, T4, (1,), leaves, summand)
    e4 = associator_edge(data, T1, T5, (), leaves, summand)
    e5 = associator_edge(data, T5, T4, (), leaves, summand)
    long_path = compose(e3, compose(e2, e1))
    short_path = compose(e5, e4)
    mismatches = []
    for col in long_path:
        lhs = dict(long_path[col])
        rhs = dict(short_path[col])
        for row in set(lhs) | set(rhs):
            a = lhs.get(row, 0)
            b = rhs.get(row, 0)
            if a != b:
                mismatches.append((row, col, a, b))
    return mismatches, dims[T1]


def state_str(state) -> str:
    parts = []
    for path, (label, idx) in state:
        name = label if isinstance(label, str) else label.name
        loc = "".join(str(s) for s in path) or "root"
        parts.append(f"{loc}:{name}" + (f".{idx}" if idx is not None else ""))
    return "[" + " ".join(parts) + "]"
