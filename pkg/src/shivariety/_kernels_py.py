"""Pure-Python versions of the hot loops; same contracts as ``_kernels.pyx``."""
import numpy as np


def coroot_first_violation(tuples, triples):
    """For each row, index of the first triple with ``k_c`` outside ``[k_a+k_b, k_a+k_b+1]``."""
    rows = np.asarray(tuples).tolist()
    trip = [tuple(t) for t in np.asarray(triples).tolist()]
    out = np.full(len(rows), -1, dtype=np.int64)
    for r, k in enumerate(rows):
        for j, (a, b, c) in enumerate(trip):
            d = k[c] - k[a] - k[b]
            if d < 0 or d > 1:
                out[r] = j
                break
    return out


def bfs_alcoves(gen_perm, wall, step, roots, simple_idx, max_length=-1, parallelepiped=False):
    """Breadth-first search over alcoves by right multiplication by generators.

    State per alcove: Shi vector ``k``, translation ``x`` and the finite part
    as a signed permutation of roots (index ``r`` for a positive root, ``r+m``
    for its negative).  Crossing the wall of generator ``g`` changes exactly
    one coordinate of ``k``, at the root ``u(wall[g])``, by ``step[g]``;
    a generator with positive step (the affine one) also translates ``x`` by
    ``u(wall[g])``.  Dropping that generator searches the finite group.

    ``max_length >= 0`` bounds the depth (the length, when unrestricted);
    ``parallelepiped`` keeps only alcoves whose simple-root entries are 0.
    Returns ``(k, x, perm, parent, gen, depth)`` as arrays in BFS order.
    """
    gen_perm = np.asarray(gen_perm).tolist()
    wall = [int(v) for v in wall]
    step = [int(v) for v in step]
    roots = np.asarray(roots).tolist()
    simple = [int(v) for v in simple_idx]
    m, n = len(roots), len(roots[0])
    ngen = len(wall)

    K = [tuple([0] * m)]
    X = [tuple([0] * n)]
    P = [tuple(range(2 * m))]
    parent, gen, depth = [-1], [-1], [0]
    seen = {K[0]}
    head = 0
    while head < len(K):
        if max_length >= 0 and depth[head] >= max_length:
            head += 1
            continue
        k, x, u = K[head], X[head], P[head]
        for g in range(ngen):
            beta = u[wall[g]]
            nk = list(k)
            if beta < m:
                nk[beta] += step[g]
            else:
                nk[beta - m] -= step[g]
            if parallelepiped and any(nk[s] for s in simple):
                continue
            nk = tuple(nk)
            if nk in seen:
                continue
            seen.add(nk)
            if step[g] > 0:
                r = roots[beta % m]
                sg = 1 if beta < m else -1
                nx = tuple(a + sg * b for a, b in zip(x, r))
            else:
                nx = x
            perm = gen_perm[g]
            K.append(nk)
            X.append(nx)
            P.append(tuple(u[perm[i]] for i in range(2 * m)))
            parent.append(head)
            gen.append(g)
            depth.append(depth[head] + 1)
        head += 1
    return (
        np.array(K, dtype=np.int64).reshape(len(K), m),
        np.array(X, dtype=np.int64).reshape(len(X), n),
        np.array(P, dtype=np.int64).reshape(len(P), 2 * m),
        np.array(parent, dtype=np.int64),
        np.array(gen, dtype=np.int64),
        np.array(depth, dtype=np.int64),
    )
