"""Pure-Python homology kernel; reference implementation for _kernels.pyx.

A Koszul strand of K^(n) in a fixed fine degree D is the simplicial chain
complex of

    Delta_D = {J subset of the variables : D - fdeg(J) lies in supp K^(n)},

so its homology in position i is the reduced homology of Delta_D in
dimension i-1.  Faces are encoded as bitmasks over the variables.  A face J
is admissible iff, summed over J, the alpha weights stay <= alim, the beta
weights stay <= blim and block u contributes at most ecap[u] variables.
"""


def rank_mod_p(rows: list, p: int) -> int:
    """Rank over GF(p) of a sparse matrix given as a list of {col: value}."""
    pivots = {}
    rank = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                rank += 1
                break
            f = row[col]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank


def faces_by_size(alphas, betas, blocks, ecap, alim, blim) -> list:
    nv = len(alphas)
    nb = len(ecap)
    out = [[] for _ in range(nv + 1)]

    def walk(start, mask, size, a, b, counts):
        out[size].append(mask)
        for v in range(start, nv):
            na, nb_ = a + alphas[v], b + betas[v]
            blk = blocks[v]
            if na > alim or nb_ > blim or counts[blk] >= ecap[blk]:
                continue
            counts[blk] += 1
            walk(v + 1, mask | (1 << v), size + 1, na, nb_, counts)
            counts[blk] -= 1

    if alim >= 0 and blim >= 0:
        walk(0, 0, 0, 0, 0, [0] * nb)
    return out


def koszul_homology(alphas, betas, blocks, ecap, alim, blim, p) -> list:
    """dims[i] = dim H_i of the strand = reduced H_{i-1} of Delta_D over GF(p)."""
    nv = len(alphas)
    faces = faces_by_size(alphas, betas, blocks, ecap, alim, blim)
    dims = [0] * (nv + 1)
    if not faces[0]:
        return dims
    index = {}
    for size in faces:
        for j, m in enumerate(size):
            index[m] = j
    # a cone point makes the complex acyclic
    all_faces = [m for size in faces for m in size]
    for v in range(nv):
        bit = 1 << v
        if all((m | bit) in index for m in all_faces):
            return dims
    ranks = [0] * (nv + 2)
    for i in range(1, nv + 1):
        if not faces[i] or not faces[i - 1]:
            continue
        prev = index
        rows = []
        for m in faces[i]:
            row = {}
            sign = 1
            for v in range(nv):
                bit = 1 << v
                if m & bit:
                    row[prev[m ^ bit]] = sign
                    sign = -sign
            rows.append(row)
        ranks[i] = rank_mod_p(rows, p)
    for i in range(nv + 1):
        dims[i] = len(faces[i]) - ranks[i] - ranks[i + 1]
    return dims
