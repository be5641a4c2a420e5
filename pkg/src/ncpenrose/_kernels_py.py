"""Pure-Python reference versions of the hot kernels.

These define the semantics; ``_kernels.pyx`` must agree with them bit for bit.
"""


def avoiding_masks(length, r):
    """Bitmasks of all length-``length`` 0/1 strings with no run of ``r+1`` ones.

    Bit ``length-1-i`` holds digit ``i``, so increasing integer order is the
    lexicographic order of the strings.
    """
    out = []
    for m in range(1 << length):
        run = m
        for s in range(1, r + 1):
            run &= m >> s
        if not run:
            out.append(m)
    return out


def unit_hom_check(src_rows, src_cols, img_ptr, img_codes, src_dim, tgt_dim):
    """Check that a map given on matrix units is multiplicative on all pairs.

    Unit ``u`` is the matrix unit ``e[src_rows[u], src_cols[u]]``; its image is
    the sum of the target units encoded in ``img_codes[img_ptr[u]:img_ptr[u+1]]``
    (code = row * tgt_dim + col, sorted).  Returns ``(-1, -1)`` when
    ``img(u) img(v) == img(u v)`` for every ordered pair, else the first failing
    pair.  A product unit outside the given unit set counts as a failure.
    """
    n = len(src_rows)
    lookup = {}
    for u in range(n):
        lookup[src_rows[u] * src_dim + src_cols[u]] = u
    images = [img_codes[img_ptr[u]:img_ptr[u + 1]] for u in range(n)]
    by_col = []   # target column -> rows, per unit
    rows_of = []  # set of target rows, per unit
    cols_of = []
    for img in images:
        d = {}
        for c in img:
            d.setdefault(c % tgt_dim, []).append(c // tgt_dim)
        by_col.append(d)
        cols_of.append(frozenset(d))
        rows_of.append(frozenset(c // tgt_dim for c in img))
    for u in range(n):
        cu = src_cols[u]
        du = by_col[u]
        colset = cols_of[u]
        for v in range(n):
            if src_rows[v] != cu:
                if not colset.isdisjoint(rows_of[v]):
                    return u, v
                continue
            w = lookup.get(src_rows[u] * src_dim + src_cols[v])
            if w is None:
                return u, v
            prod = []
            for c in images[v]:
                s, t = divmod(c, tgt_dim)
                for p in du.get(s, ()):
                    prod.append(p * tgt_dim + t)
            prod.sort()
            if prod != list(images[w]):
                return u, v
    return -1, -1
