# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled homology kernel; mirrors _kernels_py.koszul_homology."""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t, int32_t

DEF MAXV = 24
DEF MAXB = 64


cdef int64_t _inv(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, nt = 1, r = p, nr = a % p, q, tmp
    if nr < 0:
        nr += p
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef int _rank(int64_t* mat, int nrows, int ncols, int64_t p) nogil:
    """Dense Gaussian elimination mod p; destroys mat."""
    cdef int rank = 0, col, r, piv, c
    cdef int64_t inv, f, tmp
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if mat[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(col, ncols):
                tmp = mat[piv * ncols + c]
                mat[piv * ncols + c] = mat[rank * ncols + c]
                mat[rank * ncols + c] = tmp
        inv = _inv(mat[rank * ncols + col], p)
        for c in range(col, ncols):
            mat[rank * ncols + c] = mat[rank * ncols + c] * inv % p
        for r in range(rank + 1, nrows):
            f = mat[r * ncols + col]
            if f != 0:
                for c in range(col, ncols):
                    mat[r * ncols + c] = (mat[r * ncols + c] - f * mat[rank * ncols + c]) % p
                    if mat[r * ncols + c] < 0:
                        mat[r * ncols + c] += p
        rank += 1
    return rank


cdef int _homology(int nv, int nb, long* alphas, long* betas, int* blocks, long* ecap,
                   long alim, long blim, int64_t p, long* dims) nogil:
    """Returns 0 on success, -1 on allocation failure."""
    cdef long nmasks = 1 << nv
    cdef int32_t* index = <int32_t*> malloc(nmasks * sizeof(int32_t))
    cdef long* asum = <long*> malloc(nmasks * sizeof(long))
    cdef long* bsum = <long*> malloc(nmasks * sizeof(long))
    cdef signed char* cnt = <signed char*> malloc(nmasks * nb * sizeof(signed char))
    cdef long* count = <long*> calloc(nv + 1, sizeof(long))
    cdef int* size = <int*> malloc(nmasks * sizeof(int))
    cdef long* ranks = <long*> calloc(nv + 2, sizeof(long))
    cdef long m, low, prev, j, k, nf, rowi, coli
    cdef int v, b, i, sign, cone
    cdef int64_t* mat
    cdef long* rowmap
    cdef long* colmap
    if not (index and asum and bsum and cnt and count and size and ranks):
        free(index); free(asum); free(bsum); free(cnt); free(count); free(size); free(ranks)
        return -1
    for i in range(nv + 1):
        dims[i] = 0
    if alim < 0 or blim < 0:
        free(index); free(asum); free(bsum); free(cnt); free(count); free(size); free(ranks)
        return 0
    # faces: a mask is a face iff its parent (lowest bit removed) is and the
    # lowest vertex fits within the remaining budget
    index[0] = 0
    asum[0] = 0
    bsum[0] = 0
    size[0] = 0
    for b in range(nb):
        cnt[b] = 0
    count[0] = 1
    for m in range(1, nmasks):
        low = m & (-m)
        prev = m ^ low
        v = 0
        while (1 << v) != low:
            v += 1
        index[m] = -1
        if index[prev] < 0:
            continue
        # every (size-1)-subset must be a face; the constraints are
        # monotone so checking the sums suffices
        asum[m] = asum[prev] + alphas[v]
        bsum[m] = bsum[prev] + betas[v]
        if asum[m] > alim or bsum[m] > blim:
            continue
        for b in range(nb):
            cnt[m * nb + b] = cnt[prev * nb + b]
        cnt[m * nb + blocks[v]] += 1
        if cnt[m * nb + blocks[v]] > ecap[blocks[v]]:
            continue
        size[m] = size[prev] + 1
        index[m] = count[size[m]]
        count[size[m]] += 1
    # cone point test
    for v in range(nv):
        cone = 1
        for m in range(nmasks):
            if index[m] >= 0 and not (m >> v) & 1 and index[m | (1 << v)] < 0:
                cone = 0
                break
        if cone:
            free(index); free(asum); free(bsum); free(cnt); free(count); free(size); free(ranks)
            return 0
    for i in range(1, nv + 1):
        if count[i] == 0 or count[i - 1] == 0:
            continue
        mat = <int64_t*> calloc(count[i] * count[i - 1], sizeof(int64_t))
        if not mat:
            free(index); free(asum); free(bsum); free(cnt); free(count); free(size); free(ranks)
            return -1
        for m in range(nmasks):
            if index[m] < 0 or size[m] != i:
                continue
            rowi = index[m]
            sign = 1
            for v in range(nv):
                if (m >> v) & 1:
                    coli = index[m ^ (1 << v)]
                    mat[rowi * count[i - 1] + coli] = 1 if sign > 0 else p - 1
                    sign = -sign
        ranks[i] = _rank(mat, count[i], count[i - 1], p)
        free(mat)
    for i in range(nv + 1):
        dims[i] = count[i] - ranks[i] - ranks[i + 1]
    free(index); free(asum); free(bsum); free(cnt); free(count); free(size); free(ranks)
    return 0


def koszul_homology(alphas, betas, blocks, ecap, long alim, long blim, long long p):
    """dims[i] = dim H_i of the strand = reduced H_{i-1} of Delta_D over GF(p)."""
    cdef int nv = len(alphas), nb = len(ecap), i, rc
    cdef long ca[MAXV]
    cdef long cb[MAXV]
    cdef int cbl[MAXV]
    cdef long ce[MAXB]
    cdef long out[MAXV + 1]
    if nv > MAXV or nb > MAXB:
        raise ValueError(f"compiled kernel supports at most {MAXV} variables and {MAXB} blocks")
    if p <= 1 or p >= (1 << 31):
        raise ValueError("compiled kernel needs 1 < p < 2**31")
    for i in range(nv):
        ca[i] = alphas[i]
        cb[i] = betas[i]
        cbl[i] = blocks[i]
    for i in range(nb):
        ce[i] = ecap[i]
    with nogil:
        rc = _homology(nv, nb, ca, cb, cbl, ce, alim, blim, p, out)
    if rc != 0:
        raise MemoryError("homology kernel allocation failed")
    return [out[i] for i in range(nv + 1)]


def rank_mod_p(rows, long long p):
    """Rank over GF(p) of a matrix given as a list of {col: value} rows."""
    cdef int nrows = len(rows), ncols = 0, r
    cdef int64_t* mat
    cdef int rk
    for row in rows:
        for c in row:
            if c + 1 > ncols:
                ncols = c + 1
    if nrows == 0 or ncols == 0:
        return 0
    mat = <int64_t*> calloc(nrows * ncols, sizeof(int64_t))
    if not mat:
        raise MemoryError()
    for r, row in enumerate(rows):
        for c, v in row.items():
            mat[r * ncols + c] = v % p
    with nogil:
        rk = _rank(mat, nrows, ncols, p)
    free(mat)
    return rk
