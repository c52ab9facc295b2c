"""Compiled handle-reduction kernel.

Same stack machine as :func:`braidtwist.dehornoy._reduce_letters_py`, over
growable int64 arrays so numba can compile it.  Returns ``(out, steps)``;
``steps == -1`` means the step budget ran out.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


def _grow1(a, need):
    cap = a.shape[0]
    while cap < need:
        cap *= 2
    b = np.empty(cap, dtype=np.int64)
    b[: a.shape[0]] = a
    return b


def _grow2(a, need):
    cap = a.shape[0]
    while cap < need:
        cap *= 2
    b = np.empty((cap, a.shape[1]), dtype=np.int64)
    b[: a.shape[0]] = a
    return b


def _reduce(word, top, max_steps):
    size = word.shape[0]
    pending = np.empty(max(16, 2 * size), dtype=np.int64)
    for j in range(size):
        pending[j] = word[size - 1 - j]
    npend = size
    out = np.empty(max(16, size), dtype=np.int64)
    snaps = np.empty((max(16, size), top), dtype=np.int64)
    last = np.full(top, -1, dtype=np.int64)
    nout = 0
    steps = 0
    scratch = np.empty(16, dtype=np.int64)
    while npend > 0:
        npend -= 1
        x = pending[npend]
        i = x if x > 0 else -x
        p = last[i]
        if p >= 0 and out[p] == -x:
            steps += 1
            if steps > max_steps:
                return out[:nout].copy(), -1
            e = 1 if x < 0 else -1
            up = i + 1
            need = 3 * (nout - p)
            if scratch.shape[0] < need:
                scratch = _grow1(scratch, need)
            m = 0
            for t in range(p + 1, nout):
                y = out[t]
                if y == up or y == -up:
                    scratch[m] = -e * up
                    scratch[m + 1] = i if y > 0 else -i
                    scratch[m + 2] = e * up
                    m += 3
                else:
                    scratch[m] = y
                    m += 1
            nout = p
            if nout > 0:
                for j in range(top):
                    last[j] = snaps[nout - 1, j]
            else:
                for j in range(top):
                    last[j] = -1
            if pending.shape[0] < npend + m:
                pending = _grow1(pending, npend + m)
            for t in range(m):
                pending[npend + t] = scratch[m - 1 - t]
            npend += m
            continue
        if out.shape[0] <= nout:
            out = _grow1(out, nout + 1)
            snaps = _grow2(snaps, nout + 1)
        out[nout] = x
        for j in range(i, top):
            last[j] = nout
        for j in range(top):
            snaps[nout, j] = last[j]
        nout += 1
    return out[:nout].copy(), steps


if njit is not None:
    _grow1 = njit(cache=True)(_grow1)
    _grow2 = njit(cache=True)(_grow2)
    reduce_kernel = njit(cache=True)(_reduce)
else:  # pragma: no cover
    reduce_kernel = None
