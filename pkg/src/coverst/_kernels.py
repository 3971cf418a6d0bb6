"""Compiled kernels behind the suffix-structure and cover-tree builders.

Every function here works on flat numpy arrays so numba can compile it;
the classes in the sibling modules own allocation and orchestration.
Conventions: text positions are 1-based (sym[0] is an unused slot, the
sentinel 0 sits at position n+1), node ids are 0-based with the root at
node 0, preorder numbers are 0-based internally.
"""

import numpy as np
from numba import njit

# Block size of the block/sparse RMQ layout, as a shift amount.
_BSHIFT = 4
_BLOCK = 1 << _BSHIFT
# Symbols compared directly before an LCE falls back to the RMQ path.
_LCE_SCAN = 16


# --------------------------------------------------------------------------
# suffix array (induced sorting) and LCP
# --------------------------------------------------------------------------

@njit(cache=True)
def _sais_induce(s, sa, stype, bcnt, seed, sigma):
    """One induced-sorting round: seed LMS positions, induce L then S.

    seed holds LMS positions; they are placed at their bucket tails in
    reverse order, so passing them sorted yields the final suffix array.
    """
    n = s.shape[0]
    tails = np.empty(sigma, dtype=np.int64)
    acc = 0
    for c in range(sigma):
        acc += bcnt[c]
        tails[c] = acc
    tmp = tails.copy()
    for t in range(seed.shape[0] - 1, -1, -1):
        j = seed[t]
        c = s[j]
        tmp[c] -= 1
        sa[tmp[c]] = j
    heads = np.empty(sigma, dtype=np.int64)
    acc = 0
    for c in range(sigma):
        heads[c] = acc
        acc += bcnt[c]
    for t in range(n):
        j = sa[t]
        if j > 0 and not stype[j - 1]:
            c = s[j - 1]
            sa[heads[c]] = j - 1
            heads[c] += 1
    tmp = tails
    for t in range(n - 1, -1, -1):
        j = sa[t]
        if j > 0 and stype[j - 1]:
            c = s[j - 1]
            tmp[c] -= 1
            sa[tmp[c]] = j - 1


@njit(cache=True)
def sais(s, sigma):
    """Suffix array of s by induced sorting (SA-IS), linear time.

    s must be a non-negative int64 array whose last symbol is a unique
    smallest sentinel; sigma exceeds the largest symbol.
    """
    n = s.shape[0]
    sa = np.full(n, -1, dtype=np.int64)
    if n == 1:
        sa[0] = 0
        return sa
    stype = np.zeros(n, dtype=np.bool_)
    stype[n - 1] = True
    for i in range(n - 2, -1, -1):
        if s[i] < s[i + 1] or (s[i] == s[i + 1] and stype[i + 1]):
            stype[i] = True
    bcnt = np.zeros(sigma, dtype=np.int64)
    for i in range(n):
        bcnt[s[i]] += 1
    nlms = 0
    for i in range(1, n):
        if stype[i] and not stype[i - 1]:
            nlms += 1
    lms = np.empty(max(nlms, 1), dtype=np.int64)
    k = 0
    for i in range(1, n):
        if stype[i] and not stype[i - 1]:
            lms[k] = i
            k += 1
    _sais_induce(s, sa, stype, bcnt, lms[:nlms], sigma)
    if nlms == 0:
        return sa

    # name the LMS substrings in their induced order
    order = np.empty(nlms, dtype=np.int64)
    k = 0
    for t in range(n):
        j = sa[t]
        if j > 0 and stype[j] and not stype[j - 1]:
            order[k] = j
            k += 1
    names = np.full(n, -1, dtype=np.int64)
    cur = 0
    names[order[0]] = 0
    for t in range(1, nlms):
        a = order[t - 1]
        b = order[t]
        same = True
        off = 0
        while True:
            ca = a + off
            cb = b + off
            if ca >= n or cb >= n or s[ca] != s[cb] or stype[ca] != stype[cb]:
                same = False
                break
            if off > 0:
                a_end = stype[ca] and not stype[ca - 1]
                b_end = stype[cb] and not stype[cb - 1]
                if a_end or b_end:
                    same = a_end and b_end
                    break
            off += 1
        if not same:
            cur += 1
        names[b] = cur
    if cur + 1 < nlms:
        reduced = np.empty(nlms, dtype=np.int64)
        k = 0
        for i in range(n):
            if names[i] >= 0:
                reduced[k] = names[i]
                k += 1
        rsa = sais(reduced, cur + 1)
        seed = np.empty(nlms, dtype=np.int64)
        for t in range(nlms):
            seed[t] = lms[rsa[t]]
    else:
        seed = order
    sa[:] = -1
    _sais_induce(s, sa, stype, bcnt, seed, sigma)
    return sa


def suffix_array_build(s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sa, rank) of an int array ending in a unique smallest sentinel."""
    s64 = np.ascontiguousarray(s, dtype=np.int64)
    sa = sais(s64, int(s64.max()) + 1)
    rank = np.empty(len(sa), dtype=np.int32)
    rank[sa] = np.arange(len(sa), dtype=np.int32)
    return sa.astype(np.int32), rank


@njit(cache=True)
def kasai_lcp(sym, sa1, rank0, n):
    """LCP array by Kasai's rank scan.

    sym is 1-based with sentinel at n+1, sa1 holds 1-based suffix starts,
    rank0 the 0-based lexicographic index per start. lcp[k] is the LCP of
    the suffixes sa1[k-1] and sa1[k], lcp[0] == 0.
    """
    m = n + 1
    lcp = np.zeros(m, dtype=np.int32)
    h = 0
    for i in range(1, m + 1):
        r = rank0[i]
        if r > 0:
            j = sa1[r - 1]
            while i + h <= m and j + h <= m and sym[i + h] == sym[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


# --------------------------------------------------------------------------
# block + sparse-table RMQ (leftmost argmin on ties)
# --------------------------------------------------------------------------

def block_rmq_build(keys: np.ndarray):
    """Preprocess an int64 array for range-minimum queries.

    Layout: per-block minima (block = 32 slots, padded with int64 max)
    plus a sparse table of block indices. Returns the tuple of arrays
    consumed by block_rmq_query.
    """
    keys = np.ascontiguousarray(keys, dtype=np.int64)
    m = len(keys)
    nb = max(1, (m + _BLOCK - 1) >> _BSHIFT)
    pad = np.full(nb << _BSHIFT, np.iinfo(np.int64).max, dtype=np.int64)
    pad[:m] = keys
    blocks = pad.reshape(nb, _BLOCK)
    barg = blocks.argmin(axis=1).astype(np.int32)
    bmin = blocks[np.arange(nb), barg]
    levels = max(1, int(nb).bit_length())
    sp = np.zeros((levels, nb), dtype=np.int32)
    sp[0] = np.arange(nb, dtype=np.int32)
    j = 1
    while (1 << j) <= nb:
        span = 1 << j
        half = span >> 1
        left = sp[j - 1, : nb - span + 1]
        right = sp[j - 1, half : nb - span + 1 + half]
        sp[j, : nb - span + 1] = np.where(bmin[left] <= bmin[right], left, right)
        j += 1
    logt = np.zeros(nb + 1, dtype=np.int8)
    for i in range(2, nb + 1):
        logt[i] = logt[i >> 1] + 1
    return pad, bmin, barg, sp, logt


@njit(cache=True)
def block_rmq_query(pad, bmin, barg, sp, logt, l, r):
    """Minimum and leftmost argmin of keys[l..r], 0-based inclusive."""
    best = pad[l]
    arg = l
    lb = l >> _BSHIFT
    rb = r >> _BSHIFT
    if lb == rb:
        for t in range(l + 1, r + 1):
            if pad[t] < best:
                best = pad[t]
                arg = t
        return best, arg
    for t in range(l + 1, (lb + 1) << _BSHIFT):
        if pad[t] < best:
            best = pad[t]
            arg = t
    if rb - lb >= 2:
        a = lb + 1
        b = rb - 1
        k = logt[b - a + 1]
        i1 = sp[k, a]
        i2 = sp[k, b - (1 << k) + 1]
        bi = i1 if bmin[i1] <= bmin[i2] else i2
        if bmin[bi] < best:
            best = bmin[bi]
            arg = (bi << _BSHIFT) + barg[bi]
    for t in range(rb << _BSHIFT, r + 1):
        if pad[t] < best:
            best = pad[t]
            arg = t
    return best, arg


@njit(cache=True)
def lce_query(rank0, pad, bmin, barg, sp, logt, n, i, j):
    """Length of the longest common prefix of suffixes i and j (1-based)."""
    if i == j:
        return n + 2 - i
    ri = rank0[i]
    rj = rank0[j]
    if ri > rj:
        ri, rj = rj, ri
    v, _ = block_rmq_query(pad, bmin, barg, sp, logt, ri + 1, rj)
    return v


# --------------------------------------------------------------------------
# suffix tree from suffix array + LCP
# --------------------------------------------------------------------------

@njit(cache=True)
def st_from_sa_lcp(sa1, lcp, n):
    """Compact suffix tree by left-to-right stack insertion over the SA.

    Returns (parent, depth, pos, leaf_suffix, leaf_node, node_count).
    pos[v] is a witness occurrence start of v's string label.
    """
    nleaves = n + 1
    cap = 2 * nleaves + 2
    parent = np.full(cap, -1, dtype=np.int32)
    depth = np.zeros(cap, dtype=np.int32)
    pos = np.zeros(cap, dtype=np.int32)
    leaf_suffix = np.full(cap, -1, dtype=np.int32)
    leaf_node = np.full(n + 2, -1, dtype=np.int32)
    pos[0] = 1
    nodes = 1
    stack = np.empty(cap, dtype=np.int32)
    stack[0] = 0
    top = 0
    for t in range(nleaves):
        i = sa1[t]
        h = lcp[t]
        last = -1
        while depth[stack[top]] > h:
            last = stack[top]
            top -= 1
        at = stack[top]
        if depth[at] < h:
            mid = nodes
            nodes += 1
            parent[mid] = at
            depth[mid] = h
            pos[mid] = pos[last]
            parent[last] = mid
            top += 1
            stack[top] = mid
            at = mid
        leaf = nodes
        nodes += 1
        parent[leaf] = at
        depth[leaf] = n + 2 - i
        pos[leaf] = i
        leaf_suffix[leaf] = i
        leaf_node[i] = leaf
        top += 1
        stack[top] = leaf
    return (
        parent[:nodes].copy(),
        depth[:nodes].copy(),
        pos[:nodes].copy(),
        leaf_suffix[:nodes].copy(),
        leaf_node,
        nodes,
    )


def children_csr(parent, first_sym, nodes):
    """CSR child lists ordered by ascending first edge symbol.

    first_sym[v] must hold the first symbol of the edge into v (any value
    for the root, which has no incoming edge).
    """
    ids = np.arange(nodes, dtype=np.int64)
    child_ids = ids[parent >= 0]
    order = np.lexsort((first_sym[child_ids], parent[child_ids]))
    csr_child = child_ids[order].astype(np.int32)
    counts = np.bincount(parent[child_ids], minlength=nodes)
    csr_start = np.zeros(nodes + 1, dtype=np.int64)
    np.cumsum(counts, out=csr_start[1:])
    return csr_start, csr_child


@njit(cache=True)
def wa_batch(csr_start, csr_child, depth, nodes, qptr, qdepth, qslot, ans):
    """Answer grouped weighted-ancestor queries in one DFS.

    qptr is a CSR over nodes; query q asks, at the node it is attached
    to, for the topmost ancestor w with depth[w] >= qdepth[q]; the node
    id is written to ans[qslot[q]].
    """
    path_node = np.empty(nodes + 1, dtype=np.int32)
    path_depth = np.empty(nodes + 1, dtype=np.int32)
    stack_node = np.empty(nodes + 1, dtype=np.int32)
    stack_ptr = np.empty(nodes + 1, dtype=np.int64)
    sp = 0
    stack_node[0] = 0
    stack_ptr[0] = csr_start[0]
    path_node[0] = 0
    path_depth[0] = depth[0]
    plen = 1
    for q in range(qptr[0], qptr[1]):
        ans[qslot[q]] = 0  # only d == 0 reaches the root
    while sp >= 0:
        v = stack_node[sp]
        ptr = stack_ptr[sp]
        if ptr < csr_start[v + 1]:
            stack_ptr[sp] += 1
            c = csr_child[ptr]
            sp += 1
            stack_node[sp] = c
            stack_ptr[sp] = csr_start[c]
            path_node[plen] = c
            path_depth[plen] = depth[c]
            plen += 1
            for q in range(qptr[c], qptr[c + 1]):
                d = qdepth[q]
                lo = 0
                hi = plen - 1
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if path_depth[mid] >= d:
                        hi = mid
                    else:
                        lo = mid + 1
                ans[qslot[q]] = path_node[lo]
        else:
            sp -= 1
            plen -= 1
    return ans


def group_queries(qnode, nodes):
    """Bucket query indices by node for wa_batch: (qptr, order)."""
    order = np.argsort(qnode, kind="stable").astype(np.int64)
    counts = np.bincount(qnode, minlength=nodes)
    qptr = np.zeros(nodes + 1, dtype=np.int64)
    np.cumsum(counts, out=qptr[1:])
    return qptr, order


@njit(cache=True)
def preorder_numbers(csr_start, csr_child, root, nodes):
    """Preorder numbering (0-based) plus subtree sizes and the inverse map."""
    number = np.full(nodes, -1, dtype=np.int32)
    size = np.ones(nodes, dtype=np.int32)
    node_at = np.full(nodes, -1, dtype=np.int32)
    stack = np.empty(nodes + 1, dtype=np.int32)
    ptr = np.empty(nodes + 1, dtype=np.int64)
    sp = 0
    stack[0] = root
    ptr[0] = csr_start[root]
    number[root] = 0
    node_at[0] = root
    cnt = 1
    while sp >= 0:
        v = stack[sp]
        if ptr[sp] < csr_start[v + 1]:
            c = csr_child[ptr[sp]]
            ptr[sp] += 1
            number[c] = cnt
            node_at[cnt] = c
            cnt += 1
            sp += 1
            stack[sp] = c
            ptr[sp] = csr_start[c]
        else:
            sp -= 1
            if sp >= 0:
                size[stack[sp]] += size[v]
    return number, size, node_at


@njit(cache=True)
def accumulate_to_parents(order_desc, parent, vals):
    """Turn per-node values into subtree sums; order must be depth-descending."""
    for t in range(order_desc.shape[0]):
        v = order_desc[t]
        p = parent[v]
        if p >= 0:
            vals[p] += vals[v]


@njit(cache=True)
def walk_pattern(sym, csr_start, csr_child, child_first, pos, depth, pattern):
    """Walk a symbol pattern from the root.

    Returns (node, matched): node is the nearest explicit node at or
    below the end of the match (-1 if the pattern does not occur) and
    matched the number of symbols consumed.
    """
    m = pattern.shape[0]
    cur = 0
    matched = 0
    while matched < m:
        lo = csr_start[cur]
        hi = csr_start[cur + 1]
        want = pattern[matched]
        found = -1
        while lo < hi:
            mid = (lo + hi) >> 1
            c = child_first[mid]
            if c < want:
                lo = mid + 1
            elif c > want:
                hi = mid
            else:
                found = csr_child[mid]
                break
        if found == -1:
            return -1, matched
        edge_from = pos[found] + depth[cur]
        edge_len = depth[found] - depth[cur]
        take = edge_len if edge_len < m - matched else m - matched
        for t in range(take):
            if sym[edge_from + t] != pattern[matched + t]:
                return -1, matched + t
        matched += take
        cur = found
    return cur, matched


# --------------------------------------------------------------------------
# runs (maximal repetitions)
# --------------------------------------------------------------------------

@njit(cache=True)
def lce_forward(sym, n, rank_f, pad_f, bmin_f, barg_f, sp_f, logt_f, i, j):
    """LCE of suffixes i != j; short extensions resolve by direct scan."""
    k = 0
    while k < _LCE_SCAN:
        if sym[i + k] != sym[j + k]:
            return k
        k += 1
    return lce_query(rank_f, pad_f, bmin_f, barg_f, sp_f, logt_f, n, i, j)


@njit(cache=True)
def lce_backward(sym, n, rank_r, pad_r, bmin_r, barg_r, sp_r, logt_r, i, j):
    """Longest common suffix of the prefixes ending at i != j (0 allowed)."""
    if i <= 0 or j <= 0:
        return 0
    k = 0
    while k < _LCE_SCAN:
        if sym[i - k] != sym[j - k]:  # sym[0] is 0 and never matches a symbol
            return k
        k += 1
    return lce_query(rank_r, pad_r, bmin_r, barg_r, sp_r, logt_r, n, n + 1 - i, n + 1 - j)


@njit(cache=True)
def run_candidates(
    sym,
    n,
    rank_f, pad_f, bmin_f, barg_f, sp_f, logt_f,
    rank_r, pad_r, bmin_r, barg_r, sp_r, logt_r,
    out_a, out_b, out_p,
):
    """Periodicity candidates from anchored LCE extensions.

    For each period p, anchors q = p, 2p, ... are extended left and right;
    candidates are maximal p-periodic intervals of length >= 2p. Anchors
    that would re-detect the interval just found are skipped, so the same
    interval is reported once per period (possibly with a non-minimal
    period). Returns the count, or -1 if the output arrays are too small.
    """
    cap = out_a.shape[0]
    cnt = 0
    for p in range(1, n // 2 + 1):
        q = p
        while q + p <= n + 1:
            if sym[q] == sym[q + p] or sym[q - 1] == sym[q + p - 1]:
                r = lce_forward(sym, n, rank_f, pad_f, bmin_f, barg_f, sp_f, logt_f, q, q + p)
                l = lce_backward(sym, n, rank_r, pad_r, bmin_r, barg_r, sp_r, logt_r, q - 1, q + p - 1)
                if l + r >= p:
                    a = q - l
                    b = q + p + r - 1
                    if cnt >= cap:
                        return -1
                    out_a[cnt] = a
                    out_b[cnt] = b
                    out_p[cnt] = p
                    cnt += 1
                    # anchors up to b+1-p would re-detect this interval
                    q = ((b + 1 - p) // p + 1) * p
                    continue
            q += p
    return cnt


# --------------------------------------------------------------------------
# distinct squares from runs
# --------------------------------------------------------------------------

@njit(cache=True)
def square_candidate_count(run_a, run_b, run_p):
    total = 0
    for t in range(run_a.shape[0]):
        a = run_a[t]
        b = run_b[t]
        p = run_p[t]
        length = b - a + 1
        k = 1
        while 2 * k * p <= length:
            hi = a + p - 1
            lim = b + 1 - 2 * k * p
            if lim < hi:
                hi = lim
            total += hi - a + 1
            k += 1
    return total


@njit(cache=True)
def square_candidate_fill(run_a, run_b, run_p, out_i, out_d):
    idx = 0
    for t in range(run_a.shape[0]):
        a = run_a[t]
        b = run_b[t]
        p = run_p[t]
        length = b - a + 1
        k = 1
        while 2 * k * p <= length:
            hi = a + p - 1
            lim = b + 1 - 2 * k * p
            if lim < hi:
                hi = lim
            for i in range(a, hi + 1):
                out_i[idx] = i
                out_d[idx] = k * p
                idx += 1
            k += 1
    return idx


@njit(cache=True)
def _dsu_find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


@njit(cache=True)
def square_dedup(cand_i, cand_d, rank0, lcp, lcp_desc, n, out_i, out_d):
    """Collapse square candidates to one canonical occurrence per string.

    Two candidates with equal half length d spell the same square iff
    their suffixes share a prefix of 2d, i.e. they lie in the same
    maximal suffix-array interval whose internal LCP values are all
    >= 2d. Candidates are processed by decreasing d while a union-find
    over suffix-array slots merges neighbours in decreasing-LCP order
    (lcp_desc), so the threshold only ever relaxes. The canonical
    occurrence of each group is the smallest start. Returns the count.
    """
    m = cand_i.shape[0]
    # counting sort of candidate indices by half length, largest first
    maxd = n // 2 + 1
    bucket = np.zeros(maxd + 2, dtype=np.int64)
    for c in range(m):
        bucket[cand_d[c]] += 1
    start = np.zeros(maxd + 2, dtype=np.int64)
    acc = 0
    for d in range(maxd, 0, -1):
        start[d] = acc
        acc += bucket[d]
    fill = start.copy()
    ordered = np.empty(m, dtype=np.int64)
    for c in range(m):
        ordered[fill[cand_d[c]]] = c
        fill[cand_d[c]] += 1

    parent = np.arange(n + 1, dtype=np.int64)   # one slot per suffix-array entry
    stamp_d = np.full(n + 1, -1, dtype=np.int64)
    slot = np.zeros(n + 1, dtype=np.int64)
    ptr = 0
    nmerge = lcp_desc.shape[0]
    cnt = 0
    for t in range(m):
        c = ordered[t]
        d = cand_d[c]
        thr = 2 * d
        while ptr < nmerge and lcp[lcp_desc[ptr]] >= thr:
            k = lcp_desc[ptr]
            parent[_dsu_find(parent, k)] = _dsu_find(parent, k - 1)
            ptr += 1
        i = cand_i[c]
        g = _dsu_find(parent, rank0[i])
        if stamp_d[g] == d:
            s = slot[g]
            if i < out_i[s]:
                out_i[s] = i
        else:
            stamp_d[g] = d
            slot[g] = cnt
            out_i[cnt] = i
            out_d[cnt] = d
            cnt += 1
    return cnt


@njit(cache=True)
def verify_square_loci(
    loci, sq_i, sq_d, depth, parent,
    pos, rank_f, pad_f, bmin_f, barg_f, sp_f, logt_f, n,
):
    """0 if every claimed square locus spells its fragment, else 1-based index."""
    for j in range(loci.shape[0]):
        w = loci[j]
        d = sq_d[j]
        if depth[w] < d or depth[parent[w]] >= d:
            return j + 1
        if lce_query(rank_f, pad_f, bmin_f, barg_f, sp_f, logt_f, n, pos[w], sq_i[j]) < d:
            return j + 1
    return 0


# --------------------------------------------------------------------------
# cover-tree structure: making square halves explicit
# --------------------------------------------------------------------------

@njit(cache=True)
def insert_square_nodes(parent, depth, pos, is_square, base_nodes, grp_w, grp_d, grp_sq, sq_node):
    """Split edges to make implicit square-half loci explicit.

    Rows (grp_w, grp_d, grp_sq) must be sorted by (node, depth
    descending): per target node w the new chain hangs between w and its
    old parent. Arrays are preallocated for base_nodes + len(rows).
    Returns the new node count.
    """
    new_id = base_nodes
    t = 0
    m = grp_w.shape[0]
    while t < m:
        w = grp_w[t]
        old_parent = parent[w]
        below = w
        while t < m and grp_w[t] == w:
            u = new_id
            new_id += 1
            depth[u] = grp_d[t]
            pos[u] = pos[w]
            is_square[u] = True
            parent[below] = u
            sq_node[grp_sq[t]] = u
            below = u
            t += 1
        parent[below] = old_parent
    return new_id


# --------------------------------------------------------------------------
# rotation graph and the Upper/Lower counters
# --------------------------------------------------------------------------

@njit(cache=True)
def rotation_components(next_arr, vertices):
    """Split the functional rotation graph into simple paths and cycles.

    Returns (kind, comp_id, idx, comp_ptr, comp_nodes, comp_cyclic):
    kind[v] is 0 for path members, 1 for cycle members, -1 for
    non-vertices; idx[v] is the 1-based position inside its component's
    node sequence; component c owns comp_nodes[comp_ptr[c]:comp_ptr[c+1]].
    """
    nodes = next_arr.shape[0]
    kind = np.full(nodes, -1, dtype=np.int8)
    comp_id = np.full(nodes, -1, dtype=np.int32)
    idx = np.zeros(nodes, dtype=np.int32)
    indeg = np.zeros(nodes, dtype=np.int32)
    for t in range(vertices.shape[0]):
        v = vertices[t]
        w = next_arr[v]
        if w >= 0:
            indeg[w] += 1
            if indeg[w] > 1:
                raise ValueError("rotation graph in-degree exceeds 1")
    comp_nodes = np.empty(vertices.shape[0], dtype=np.int32)
    comp_ptr = np.zeros(vertices.shape[0] + 1, dtype=np.int64)
    comps = 0
    filled = 0
    # paths first: walk from every in-degree-0 vertex
    for t in range(vertices.shape[0]):
        v = vertices[t]
        if indeg[v] == 0:
            comp_ptr[comps] = filled
            u = v
            step = 1
            while u >= 0 and comp_id[u] < 0:
                kind[u] = 0
                comp_id[u] = comps
                idx[u] = step
                comp_nodes[filled] = u
                filled += 1
                step += 1
                u = next_arr[u]
            comps += 1
    # everything still unlabeled lies on a cycle
    for t in range(vertices.shape[0]):
        v = vertices[t]
        if comp_id[v] < 0:
            comp_ptr[comps] = filled
            u = v
            step = 1
            while comp_id[u] < 0:
                kind[u] = 1
                comp_id[u] = comps
                idx[u] = step
                comp_nodes[filled] = u
                filled += 1
                step += 1
                u = next_arr[u]
            comps += 1
    comp_ptr[comps] = filled
    return kind, comp_id, idx, comp_ptr[: comps + 1].copy(), comp_nodes


@njit(cache=True)
def upper_counters(
    next_arr, kind, comp_id, idx, comp_ptr, comp_nodes,
    v1s, v2s, lengths, periods,
    c_unit, c_per,
):
    """Distribute walk visits of Upper(R) over the rotation graph.

    lengths[t] is |Upper(R)| for the t-th run with a nonempty Upper set,
    v1s/v2s its endpoint loci. Counters are written into c_unit (weight
    1) and c_per (weight per(R)). Raises on any endpoint inconsistency;
    the wrap count keeps the per-run visit total exactly |Upper(R)|.
    """
    ncomp = comp_ptr.shape[0] - 1
    cyc_unit = np.zeros(ncomp, dtype=np.int64)
    cyc_per = np.zeros(ncomp, dtype=np.int64)
    for t in range(v1s.shape[0]):
        v1 = v1s[t]
        v2 = v2s[t]
        ln = lengths[t]
        w = periods[t]
        if comp_id[v1] != comp_id[v2]:
            raise ValueError("Upper walk endpoints in different components")
        if kind[v1] == 0:
            if idx[v2] - idx[v1] != ln - 1:
                raise ValueError("Upper walk length mismatch on a path")
            c_unit[v1] += 1
            c_per[v1] += w
            nxt = next_arr[v2]
            if nxt >= 0:
                c_unit[nxt] -= 1
                c_per[nxt] -= w
        else:
            comp = comp_id[v1]
            clen = comp_ptr[comp + 1] - comp_ptr[comp]
            seg = (idx[v2] - idx[v1]) % clen + 1
            if (ln - seg) % clen != 0 or ln < seg:
                raise ValueError("Upper walk length mismatch on a cycle")
            wraps = (ln - seg) // clen
            cyc_unit[comp] += wraps
            cyc_per[comp] += wraps * w
            c_unit[v1] += 1
            c_per[v1] += w
            if idx[v1] <= idx[v2]:
                if idx[v2] < clen:
                    after = comp_nodes[comp_ptr[comp] + idx[v2]]
                    c_unit[after] -= 1
                    c_per[after] -= w
            else:
                head = comp_nodes[comp_ptr[comp]]
                c_unit[head] += 1
                c_per[head] += w
                after = comp_nodes[comp_ptr[comp] + idx[v2]]
                c_unit[after] -= 1
                c_per[after] -= w
    # prefix sums along each component (cycles are cut before their head)
    for comp in range(ncomp):
        lo = comp_ptr[comp]
        hi = comp_ptr[comp + 1]
        for t in range(lo, hi - 1):
            c_unit[comp_nodes[t + 1]] += c_unit[comp_nodes[t]]
            c_per[comp_nodes[t + 1]] += c_per[comp_nodes[t]]
        if hi > lo and kind[comp_nodes[lo]] == 1:
            cu = cyc_unit[comp]
            cp = cyc_per[comp]
            if cu != 0 or cp != 0:
                for t in range(lo, hi):
                    c_unit[comp_nodes[t]] += cu
                    c_per[comp_nodes[t]] += cp


@njit(cache=True)
def suffix_link_prefix_sums(order_desc, suflink, vals):
    """Subtree sums over the suffix-link tree; order must be depth-descending."""
    for t in range(order_desc.shape[0]):
        v = order_desc[t]
        s = suflink[v]
        if s >= 0:
            vals[s] += vals[v]


# --------------------------------------------------------------------------
# bounded-gap overlapping occurrence queries
# --------------------------------------------------------------------------

@njit(cache=True)
def ovocc_query(
    u, beta,
    num_st, size_st, node_at_st,
    num_sl, size_sl,
    ml_pad, ml_bmin, ml_barg, ml_sp, ml_logt,
    mb_pad, mb_bmin, mb_barg, mb_sp, mb_logt,
    node_at_sl, depth,
    bot_ptr, bot_per, bot_a,
    stack, out_i, out_j,
):
    """Report all consecutive occurrences with gap <= beta under node u.

    Two nested RMQ enumerations: nodes v below u (suffix-tree order) with
    MinLower(v) <= beta, then nodes w below v (suffix-link-tree order)
    with MinBottom(w) <= beta, then the per-node run lists sorted by
    period. Returns (pair count, RMQ call count).
    """
    calls = 0
    out = 0
    top = 0
    stack[0] = num_st[u]
    stack[1] = num_st[u] + size_st[u] - 1
    top = 1
    while top > 0:
        top -= 1
        lo = stack[2 * top]
        hi = stack[2 * top + 1]
        if lo > hi:
            continue
        mval, k = block_rmq_query(ml_pad, ml_bmin, ml_barg, ml_sp, ml_logt, lo, hi)
        calls += 1
        if mval > beta:
            continue
        v = node_at_st[k]
        stack[2 * top] = lo
        stack[2 * top + 1] = k - 1
        top += 1
        stack[2 * top] = k + 1
        stack[2 * top + 1] = hi
        top += 1
        # second level over the suffix-link tree
        base = top
        stack[2 * top] = num_sl[v]
        stack[2 * top + 1] = num_sl[v] + size_sl[v] - 1
        top += 1
        while top > base:
            top -= 1
            lo2 = stack[2 * top]
            hi2 = stack[2 * top + 1]
            if lo2 > hi2:
                continue
            mval2, k2 = block_rmq_query(mb_pad, mb_bmin, mb_barg, mb_sp, mb_logt, lo2, hi2)
            calls += 1
            if mval2 > beta:
                continue
            w = node_at_sl[k2]
            stack[2 * top] = lo2
            stack[2 * top + 1] = k2 - 1
            top += 1
            stack[2 * top] = k2 + 1
            stack[2 * top + 1] = hi2
            top += 1
            shift = depth[w] - depth[v]
            for t in range(bot_ptr[w], bot_ptr[w + 1]):
                p = bot_per[t]
                if p > beta:
                    break
                i = bot_a[t] + shift
                out_i[out] = i
                out_j[out] = i + p
                out += 1
    return out, calls
