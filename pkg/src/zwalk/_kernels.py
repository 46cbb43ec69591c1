"""Hot kernels: radii scans, Z-shape detection, and the online Z-reducer.

All functions here follow the same conventions:

* strings are contiguous ``int32`` arrays of symbol ids (user ids are >= 2,
  ids 0 and 1 are the left/right sentinel symbols),
* working buffers ``w`` and ``pals`` are 1-based: index 0 is a dead slot so
  that positions match the usual 1-based string-position convention,
* ``regs`` is a small ``int64`` register file carrying lengths and the
  operation counters across helper boundaries.

Each kernel is wrapped in :class:`zwalk._backend.dual`, so the identical
source runs numba-compiled or as plain Python depending on the backend.
"""

import math

import numpy as np

from ._backend import dual

SENT_L = 0  # left sentinel symbol id
SENT_R = 1  # right sentinel symbol id
FIRST_USER_ID = 2

# register indices
R_WLEN = 0
R_READS = 1
R_COMPS = 2
R_PUSHES = 3
R_STABS = 4
R_NCONTR = 5
R_SLEN = 6
R_TRN = 7
NREGS = 8

# stabilize continuation states
_ST_SLOW = 0
_ST_FOR = 1
_ST_RET = 2


# ---------------------------------------------------------------------------
# brute-force radii and Z-pair scans (the oracle primitives)


def _naive_radii_impl(s, out):
    # out[c0] = radius of the maximal even palindrome whose left half ends at
    # index c0 (1-based center c0+1).  Returns the number of letter
    # comparisons performed.
    n = s.shape[0]
    comps = 0
    for c0 in range(n):
        r = 0
        while c0 - r >= 0 and c0 + r + 1 <= n - 1:
            comps += 1
            if s[c0 - r] != s[c0 + r + 1]:
                break
            r += 1
        out[c0] = r
    return comps


naive_radii_kernel = dual(_naive_radii_impl)


def _z_pair_count_impl(radii):
    n = radii.shape[0]
    cnt = 0
    for p1 in range(1, n + 1):
        m = radii[p1 - 1]
        for s in range(1, m + 1):
            p2 = p1 + s
            if p2 > n:
                break
            if radii[p2 - 1] >= s:
                cnt += 1
    return cnt


def _z_pair_fill_impl(radii, out):
    n = radii.shape[0]
    idx = 0
    for p1 in range(1, n + 1):
        m = radii[p1 - 1]
        for s in range(1, m + 1):
            p2 = p1 + s
            if p2 > n:
                break
            if radii[p2 - 1] >= s:
                out[idx, 0] = p1
                out[idx, 1] = p2
                idx += 1
    return idx


def _first_z_impl(radii):
    # lexicographically first Z-occurrence (p1, p2), or (0, 0)
    n = radii.shape[0]
    for p1 in range(1, n + 1):
        m = radii[p1 - 1]
        for s in range(1, m + 1):
            p2 = p1 + s
            if p2 > n:
                break
            if radii[p2 - 1] >= s:
                return p1, p2
    return 0, 0


def _shortest_z_impl(radii):
    # shortest Z-occurrence, ties broken by smaller p1; (0, 0) if none
    n = radii.shape[0]
    for s in range(1, n // 2 + 1):
        for p1 in range(1, n - s + 1):
            if radii[p1 - 1] >= s and radii[p1 + s - 1] >= s:
                return p1, p1 + s
    return 0, 0


z_pair_count_kernel = dual(_z_pair_count_impl)
z_pair_fill_kernel = dual(_z_pair_fill_impl)
first_z_kernel = dual(_first_z_impl)
shortest_z_kernel = dual(_shortest_z_impl)


def z_pairs(radii):
    """All Z-occurrences for a radii array, as an (k, 2) int64 array in
    lexicographic (p1, p2) order."""
    radii = np.ascontiguousarray(radii, dtype=np.int32)
    cnt = int(z_pair_count_kernel(radii))
    out = np.zeros((cnt, 2), dtype=np.int64)
    if cnt:
        z_pair_fill_kernel(radii, out)
    return out


# ---------------------------------------------------------------------------
# Z-detector: Manacher-style scan that halts at the first Z-shape


def _zdetect_impl(t, w, pals, regs):
    # Returns (p1, p2) in sentinel-inclusive coordinates, or (0, 0) when the
    # input has no Z-shape (pals then holds exact radii for every position).
    n = t.shape[0]
    w[1] = SENT_L
    regs[R_WLEN] = 1
    regs[R_READS] = 1
    while regs[R_READS] < n + 2:
        k = regs[R_READS]
        wl = regs[R_WLEN] + 1
        w[wl] = t[k - 1] if k <= n else SENT_R
        regs[R_READS] = k + 1
        regs[R_WLEN] = wl
        c = wl - 1
        while True:
            # extend the suffix palindrome at c
            r = regs[R_WLEN] - c - 1
            while True:
                regs[R_COMPS] += 1
                if w[c + r + 1] != w[c - r]:
                    break
                r += 1
                if pals[c - r] >= r:
                    return c - r, c
                k = regs[R_READS]
                wl = regs[R_WLEN] + 1
                w[wl] = t[k - 1] if k <= n else SENT_R
                regs[R_READS] = k + 1
                regs[R_WLEN] = wl
            pals[c] = r
            # copy mirrored radii; recurse into the first ambiguous position
            nxt = 0
            for rr in range(1, pals[c] + 1):
                if rr + pals[c - rr] < pals[c]:
                    pals[c + rr] = pals[c - rr]
                else:
                    nxt = c + rr
                    break
            if nxt == 0:
                break
            c = nxt
    return 0, 0


zdetect_kernel = dual(_zdetect_impl)


def zdetect(ids):
    """Run the Z-detector over an id array.

    Returns ``(p1, p2, radii, reads, comparisons)`` with sentinel-free
    1-based pivots, or ``p1 == p2 == 0`` plus the exact radii array when the
    input is irreducible.
    """
    ids = np.ascontiguousarray(ids, dtype=np.int32)
    n = ids.shape[0]
    w = np.zeros(n + 4, dtype=np.int32)
    pals = np.zeros(n + 4, dtype=np.int32)
    regs = np.zeros(NREGS, dtype=np.int64)
    p1, p2 = zdetect_kernel(ids, w, pals, regs)
    reads = int(regs[R_READS])
    comps = int(regs[R_COMPS])
    if p1 == 0:
        return 0, 0, pals[2 : n + 2].copy(), reads, comps
    return int(p1) - 1, int(p2) - 1, None, reads, comps


# ---------------------------------------------------------------------------
# the online Z-reducer


def _zreduce_impl(t, w, pals, stack, frc, frb, frd, frst, regs, tpiv, tlen, tcon, collect):
    # Returns 0 on success, 1/2 when the frame/chain stack capacity was
    # exhausted (the wrapper retries with full-size buffers).
    n = t.shape[0]
    fcap = frc.shape[0]
    scap = stack.shape[0]
    w[1] = SENT_L
    regs[R_WLEN] = 1
    regs[R_READS] = 1
    while regs[R_READS] < n + 2:
        k = regs[R_READS]
        wl = regs[R_WLEN] + 1
        w[wl] = t[k - 1] if k <= n else SENT_R
        regs[R_READS] = k + 1
        regs[R_WLEN] = wl
        regs[R_SLEN] = 0
        # stabilize the new suffix palindrome candidate at |w|-1
        frc[0] = wl - 1
        frb[0] = wl
        frd[0] = 0
        frst[0] = _ST_SLOW
        flen = 1
        regs[R_STABS] += 1
        pending = 0  # 0: run top frame, 1: child returned false, 2: child returned true
        while flen > 0:
            i = flen - 1
            if pending == 2:
                # a nested stabilization contracted the working string
                if frc[i] == regs[R_WLEN]:
                    flen -= 1
                    continue
                if frd[i] == regs[R_WLEN]:
                    # restore the adaptive mirrored value at d
                    pals[frd[i]] = pals[2 * frc[i] - frd[i]]
                k = regs[R_READS]
                wl = regs[R_WLEN] + 1
                w[wl] = t[k - 1] if k <= n else SENT_R
                regs[R_READS] = k + 1
                regs[R_WLEN] = wl
                frst[i] = _ST_SLOW
                pending = 0
            elif pending == 1:
                if regs[R_SLEN] >= scap:
                    return 2
                stack[regs[R_SLEN]] = frd[i]
                regs[R_SLEN] += 1
                regs[R_PUSHES] += 1
                frd[i] -= 1
                frst[i] = _ST_FOR
                pending = 0
            if frst[i] == _ST_SLOW:
                # slow extension of the palindrome at c, letter by letter
                c = frc[i]
                r = regs[R_WLEN] - c - 1
                contracted = False
                while True:
                    regs[R_COMPS] += 1
                    if w[c + r + 1] != w[c - r]:
                        break
                    r += 1
                    if pals[c - r] >= r:
                        # suffix Z-shape with pivots (c-r, c): drop its tail
                        if collect:
                            kk = regs[R_TRN]
                            tpiv[kk] = c - 1
                            tlen[kk] = 2 * r
                            tcon[kk] = regs[R_READS] - 1
                            regs[R_TRN] = kk + 1
                        regs[R_NCONTR] += 1
                        regs[R_WLEN] = c - r
                        contracted = True
                        break
                    pals[c + r] = pals[c - r]  # transfer the mirrored value
                    k = regs[R_READS]
                    wl = regs[R_WLEN] + 1
                    w[wl] = t[k - 1] if k <= n else SENT_R
                    regs[R_READS] = k + 1
                    regs[R_WLEN] = wl
                if contracted:
                    flen -= 1
                    pending = 2
                    continue
                pals[c] = r
                frd[i] = c + r
                frst[i] = _ST_FOR
            # fix radii on the right arm of c, rightmost first
            c = frc[i]
            d = frd[i]
            if d < frb[i]:
                flen -= 1
                pending = 1
                continue
            if d + pals[d] >= c + pals[c]:
                # fast extension: decide via the mirrored palindrome chain
                fast_true = True
                while regs[R_SLEN] > 0:
                    rr = stack[regs[R_SLEN] - 1] - d
                    if pals[d - rr] >= pals[d + rr]:
                        regs[R_SLEN] -= 1
                    else:
                        pals[d] = rr + pals[d - rr]
                        fast_true = False
                        break
                if fast_true:
                    frst[i] = _ST_RET
                    if flen >= fcap:
                        return 1
                    frc[flen] = d
                    frb[flen] = regs[R_WLEN]
                    frd[flen] = 0
                    frst[flen] = _ST_SLOW
                    flen += 1
                    regs[R_STABS] += 1
                else:
                    if regs[R_SLEN] >= scap:
                        return 2
                    stack[regs[R_SLEN]] = d
                    regs[R_SLEN] += 1
                    regs[R_PUSHES] += 1
                    frd[i] -= 1
            else:
                frd[i] -= 1
    return 0


zreduce_kernel = dual(_zreduce_impl)


def zreduce(ids, collect_trace=True):
    """Compute the Z-normal form of an id array.

    Returns ``(out_ids, regs, trace)`` where ``regs`` is the raw register
    file (lengths and counters) and ``trace`` a list of
    ``(pivot_right, tail_length, consumed)`` contraction rows in
    sentinel-free coordinates.
    """
    ids = np.ascontiguousarray(ids, dtype=np.int32)
    n = ids.shape[0]
    regs = np.zeros(NREGS, dtype=np.int64)
    tr = n // 2 + 2 if collect_trace else 1
    tpiv = np.zeros(tr, dtype=np.int64)
    tlen = np.zeros(tr, dtype=np.int64)
    tcon = np.zeros(tr, dtype=np.int64)
    # stack depths are bounded by the palindrome-chain length, which cannot
    # exceed ~sqrt(2n); retry with the trivial bound if that ever fails
    cap = 2 * math.isqrt(n + 16) + 64
    while True:
        w = np.zeros(n + 4, dtype=np.int32)
        pals = np.zeros(n + 4, dtype=np.int32)
        stack = np.zeros(cap, dtype=np.int32)
        frc = np.zeros(cap, dtype=np.int32)
        frb = np.zeros(cap, dtype=np.int32)
        frd = np.zeros(cap, dtype=np.int32)
        frst = np.zeros(cap, dtype=np.int32)
        regs[:] = 0
        status = zreduce_kernel(
            ids, w, pals, stack, frc, frb, frd, frst, regs, tpiv, tlen, tcon, collect_trace
        )
        if status == 0:
            break
        if cap >= n + 4:  # pragma: no cover - structurally unreachable
            raise RuntimeError("reducer stack overflow")
        cap = n + 4
    if regs[R_READS] > n + 2:  # pragma: no cover - structurally unreachable
        raise RuntimeError("reducer consumed more letters than the input holds")
    out = w[2 : regs[R_WLEN]].copy()
    k = int(regs[R_TRN])
    trace = list(zip(tpiv[:k].tolist(), tlen[:k].tolist(), tcon[:k].tolist()))
    return out, regs.copy(), trace


# ---------------------------------------------------------------------------
# contrast baseline: re-run the detector from scratch after every contraction


def _detect_contract_impl(t, w, pals, regs):
    # t is modified in place; returns the final logical length.
    L = t.shape[0]
    while True:
        # one full detector pass over t[0:L]
        w[1] = SENT_L
        wlen = 1
        reads = 1
        fp1 = 0
        fp2 = 0
        while reads < L + 2 and fp1 == 0:
            w[wlen + 1] = t[reads - 1] if reads <= L else SENT_R
            reads += 1
            wlen += 1
            c = wlen - 1
            while True:
                r = wlen - c - 1
                stop = False
                while True:
                    regs[R_COMPS] += 1
                    if w[c + r + 1] != w[c - r]:
                        break
                    r += 1
                    if pals[c - r] >= r:
                        fp1 = c - r
                        fp2 = c
                        stop = True
                        break
                    w[wlen + 1] = t[reads - 1] if reads <= L else SENT_R
                    reads += 1
                    wlen += 1
                if stop:
                    break
                pals[c] = r
                nxt = 0
                for rr in range(1, pals[c] + 1):
                    if rr + pals[c - rr] < pals[c]:
                        pals[c + rr] = pals[c - rr]
                    else:
                        nxt = c + rr
                        break
                if nxt == 0:
                    break
                c = nxt
        regs[R_READS] += reads
        if fp1 == 0:
            break
        # contract: drop the tail of the Z-shape (user 0-based coordinates)
        s = fp2 - fp1
        dst = fp1 - 1
        src = fp2 - 1 + s
        m = L - src
        for j in range(m):
            t[dst + j] = t[src + j]
        L -= 2 * s
        regs[R_NCONTR] += 1
    return L


detect_contract_kernel = dual(_detect_contract_impl)


def detect_and_contract(ids):
    """Reduce by repeatedly re-running the detector from scratch.

    Superlinear on adversarial inputs; exists as the benchmark contrast to
    the incremental reducer.  Returns ``(out_ids, regs)``.
    """
    ids = np.ascontiguousarray(ids, dtype=np.int32)
    buf = ids.copy()
    n = buf.shape[0]
    w = np.zeros(n + 4, dtype=np.int32)
    pals = np.zeros(n + 4, dtype=np.int32)
    regs = np.zeros(NREGS, dtype=np.int64)
    L = int(detect_contract_kernel(buf, w, pals, regs))
    return buf[:L].copy(), regs.copy()


# ---------------------------------------------------------------------------
# seeded corpus generation (splitmix64)


def _fill_random_impl(out, seed, sigma):
    s = np.uint64(seed)
    inc = np.uint64(0x9E3779B97F4A7C15)
    m1 = np.uint64(0xBF58476D1CE4E5B9)
    m2 = np.uint64(0x94D049BB133111EB)
    sig = np.uint64(sigma)
    two = np.uint64(2)
    for i in range(out.shape[0]):
        s = s + inc
        z = s
        z = (z ^ (z >> np.uint64(30))) * m1
        z = (z ^ (z >> np.uint64(27))) * m2
        z = z ^ (z >> np.uint64(31))
        out[i] = np.int32(two + z % sig)


fill_random_kernel = dual(_fill_random_impl)
