"""Desk-scale searches: extension sweeps, exhaustive enumeration, equivalence.

Two execution paths coexist on purpose.  The reference path builds real
child codes row by row and asks them for their own parameters; the fast
path computes the same numbers with vectorized bit tricks.  The fast
path is validated against the reference path in the test suite and the
two are never merged, so a bug in one cannot hide in the other.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .buildup import ConstructionKind, construct
from .code import LinearCode
from .errors import DimensionError, ResourceLimitError, UsageError
from .gf2 import BitMatrix, BitVector, dot, gram

__all__ = [
    "SweepRecord",
    "OptimalityClaim",
    "EquivalenceVerdict",
    "sweep_extensions",
    "best_by_sweep",
    "exhaustive_codes",
    "iter_exhaustive",
    "hull_census",
    "are_equivalent",
    "format_sweep_record",
    "format_claim",
    "SWEEP_CAP",
    "EXHAUSTIVE_CAP",
    "EQUIV_CAP",
]

SWEEP_CAP = 20
EXHAUSTIVE_CAP = 22
EQUIV_CAP = 16
NODE_CAP = 10_000_000

_KIND_ORDER = {k: i for i, k in enumerate(ConstructionKind)}
_CLAIM_STATUSES = ("optimal", "h_optimal", "lower_bound", "nonexistence")
_CLAIM_METHODS = ("sweep", "exhaustive", "corpus")


@dataclass(frozen=True)
class SweepRecord:
    """One kept child of an extension sweep."""

    seed_id: str
    x: BitVector
    kind: ConstructionKind
    child_params: tuple[int, int, int, int]
    canonical_gen: BitMatrix


@dataclass(frozen=True)
class OptimalityClaim:
    """What a finished search run is entitled to assert about a cell."""

    n: int
    k: int
    h: int
    d_best: int
    status: str
    witness: BitMatrix | None
    method: str

    def __post_init__(self):
        if self.status not in _CLAIM_STATUSES:
            raise UsageError(f"unknown claim status {self.status!r}")
        if self.method not in _CLAIM_METHODS:
            raise UsageError(f"unknown claim method {self.method!r}")
        if self.status in ("optimal", "h_optimal") and self.witness is None:
            raise UsageError(f"status {self.status} requires a witness")
        if self.status == "nonexistence" and self.method != "exhaustive":
            raise UsageError("nonexistence requires completed exhaustive enumeration")


@dataclass(frozen=True)
class EquivalenceVerdict:
    """equivalent is None when the search hit its node cap undecided."""

    equivalent: bool | None
    permutation: tuple[int, ...] | None = None


def _seed_id(seed: LinearCode) -> str:
    digest = hashlib.sha256(
        ("/".join(seed.canonical_gen().to_strings())).encode()
    ).hexdigest()[:8]
    return f"code-{seed.n}-{seed.k}-{digest}"


# --------------------------------------------------------------------- sweep


def _applicable(kind: ConstructionKind, odd: bool, y_zero: bool) -> bool:
    if kind is ConstructionKind.I:
        return odd
    if kind is ConstructionKind.II:
        return not odd and y_zero
    if kind is ConstructionKind.III:
        return not odd and not y_zero
    return not odd  # IV


def _coset_scan(seed: LinearCode):
    """Per-x child data for all 2^n extension vectors, vectorized.

    Child distances come from the row assembly: a child codeword is a
    seed codeword m with two prefix coordinates determined by the top
    row, so the minimum splits into a no-top branch and a with-top
    branch.  Returns (d_topless2, d_topless1, d_top, coset_min, ypack,
    odd) as numpy arrays indexed by x.
    """
    n, k = seed.n, seed.k
    lanes = 1 << n
    xs = np.arange(lanes, dtype=np.uint64)
    rows = [r.bits for r in seed.canonical_gen().rows]

    big = np.uint8(255)
    d2 = np.full(lanes, big)  # min over m != 0 of 2*(x.m) + wt(m)
    d1 = np.full(lanes, big)  # min over m != 0 of (x.m) + wt(m)
    dt = np.full(lanes, big)  # min over all m of (1 xor x.m) + 1 + wt(x xor m)
    dc = np.full(lanes, big)  # min over all m of wt(x xor m)

    m = 0
    for t in range(1 << k):
        if t:
            m ^= rows[(t & -t).bit_length() - 1]
        mm = np.uint64(m)
        par = (np.bitwise_count(xs & mm) & 1).astype(np.uint8)
        wx = np.bitwise_count(xs ^ mm).astype(np.uint8)
        if t:
            wm = np.uint8(m.bit_count())
            np.minimum(d2, 2 * par + wm, out=d2)
            np.minimum(d1, par + wm, out=d1)
        np.minimum(dt, (1 ^ par) + 1 + wx, out=dt)
        np.minimum(dc, wx, out=dc)

    ypack = np.zeros(lanes, dtype=np.uint32)
    for i, r in enumerate(rows):
        yi = (np.bitwise_count(xs & np.uint64(r)) & 1).astype(np.uint32)
        ypack |= yi << np.uint32(i)
    odd = (np.bitwise_count(xs) & 1).astype(bool)
    return d2, d1, dt, dc, ypack, odd


def _child_distance_arrays(seed: LinearCode):
    """d of the child for every x, per construction family."""
    d2, d1, dt, dc, ypack, odd = _coset_scan(seed)
    d_I_IV = np.minimum(d2, 1 + dc)  # top rows (1 0 | x), body (y y | r)
    d_II_III = np.minimum(d1, dt)  # top rows (1 1 | x), body (y 0 | r)
    return d_I_IV, d_II_III, dc, ypack, odd


@lru_cache(maxsize=64)
def _rank3_table(gram_rows: tuple[int, ...]) -> tuple[int, ...]:
    """rank(Gc + y y^T) for every y, for a fixed seed Gram matrix."""
    k = len(gram_rows)
    out = []
    for y in range(1 << k):
        rows = [gram_rows[i] ^ ((y >> i & 1) and y) for i in range(k)]
        out.append(_tiny_rank(rows))
    return tuple(out)


def _tiny_rank(rows: Sequence[int]) -> int:
    rank = 0
    rows = list(rows)
    for i in range(len(rows)):
        v = rows[i]
        if not v:
            continue
        rank += 1
        low = v & -v
        for j in range(i + 1, len(rows)):
            if rows[j] & low:
                rows[j] ^= v
    return rank


def _child_hull_arrays(seed: LinearCode, ypack):
    """h of the child for every x, per construction kind."""
    k = seed.k
    ell = seed.hull_dim()
    lanes = ypack.shape[0]
    gram_rows = gram(seed.canonical_gen()).row_bits
    rank3 = np.asarray(_rank3_table(gram_rows), dtype=np.uint8)
    h = {}
    h[ConstructionKind.I] = np.full(lanes, ell + 1, dtype=np.int16)
    h[ConstructionKind.II] = np.full(lanes, ell + 1, dtype=np.int16)
    h[ConstructionKind.III] = (k + 1) - rank3[ypack].astype(np.int16)
    h[ConstructionKind.IV] = np.full(lanes, ell, dtype=np.int16)
    return h


def sweep_children(seed: LinearCode):
    """Fast path: (h, d, coset weight, oddness) arrays for every x and kind.

    Keys of the h/d dicts are ConstructionKind; entries are valid only
    where the kind applies (odd x for I; even for II/III/IV, split by
    whether x is orthogonal to the seed).
    """
    if seed.n > SWEEP_CAP:
        raise ResourceLimitError(
            f"sweep over 2^{seed.n} extension vectors exceeds cap n <= {SWEEP_CAP}",
            limit=SWEEP_CAP,
        )
    d_I_IV, d_II_III, dc, ypack, odd = _child_distance_arrays(seed)
    h = _child_hull_arrays(seed, ypack)
    d = {
        ConstructionKind.I: d_I_IV,
        ConstructionKind.II: d_II_III,
        ConstructionKind.III: d_II_III,
        ConstructionKind.IV: d_I_IV,
    }
    return h, d, dc, ypack, odd


def sweep_extensions(
    seed: LinearCode,
    target_h: int,
    min_d: int = 1,
    kinds: Sequence[ConstructionKind] | None = None,
    seed_id: str | None = None,
    engine: str = "auto",
) -> list[SweepRecord]:
    """Try every length-n extension vector and keep the wanted children.

    For each of the 2^n vectors x, every requested construction whose
    precondition x satisfies is applied; a record is kept when the
    child has hull dimension target_h and distance at least min_d.
    Order is deterministic: x ascending as an integer, then kind.
    """
    if seed.n > SWEEP_CAP:
        raise ResourceLimitError(
            f"sweep over 2^{seed.n} extension vectors exceeds cap n <= {SWEEP_CAP}",
            limit=SWEEP_CAP,
        )
    if engine not in ("auto", "reference"):
        raise UsageError(f"unknown engine {engine!r}")
    kinds = tuple(ConstructionKind) if kinds is None else tuple(kinds)
    kinds = tuple(sorted(set(kinds), key=_KIND_ORDER.get))
    sid = seed_id if seed_id is not None else _seed_id(seed)
    n, k = seed.n, seed.k

    records = []
    if engine == "auto":
        h_arr, d_arr, _dc, ypack, odd = sweep_children(seed)
        for xbits in range(1 << n):
            is_odd = bool(odd[xbits])
            y_zero = ypack[xbits] == 0
            for kind in kinds:
                if not _applicable(kind, is_odd, y_zero):
                    continue
                if int(h_arr[kind][xbits]) != target_h:
                    continue
                if int(d_arr[kind][xbits]) < min_d:
                    continue
                x = BitVector(n, xbits)
                child = construct(seed, x, kind).child
                records.append(
                    SweepRecord(
                        seed_id=sid,
                        x=x,
                        kind=kind,
                        child_params=(
                            n + 2,
                            k + 1,
                            int(d_arr[kind][xbits]),
                            target_h,
                        ),
                        canonical_gen=child.canonical_gen(),
                    )
                )
        return records

    for xbits in range(1 << n):
        x = BitVector(n, xbits)
        is_odd = dot(x, x) == 1
        y_zero = all(dot(x, r) == 0 for r in seed.canonical_gen().rows)
        for kind in kinds:
            if not _applicable(kind, is_odd, y_zero):
                continue
            child = construct(seed, x, kind).child
            if child.hull_dim() != target_h:
                continue
            d = child.min_distance()
            if d < min_d:
                continue
            records.append(
                SweepRecord(
                    seed_id=sid,
                    x=x,
                    kind=kind,
                    child_params=(n + 2, k + 1, d, target_h),
                    canonical_gen=child.canonical_gen(),
                )
            )
    return records


def _gen_key(gen: BitMatrix) -> tuple[int, ...]:
    return tuple(r for r in gen.row_bits)


def best_by_sweep(
    seeds: Sequence[LinearCode],
    target_h: int,
    kinds: Sequence[ConstructionKind] | None = None,
) -> OptimalityClaim:
    """Best child distance over all seeds, extension vectors, and constructions.

    Sweeps never prove optimality on their own, so the claim status is
    always lower_bound.  Ties on distance are broken toward the
    row-wise lexicographically smallest reduced generator.
    """
    seeds = list(seeds)
    if not seeds:
        raise UsageError("need at least one seed")
    dims = {(s.n, s.k) for s in seeds}
    if len(dims) != 1:
        raise UsageError(f"seeds must share (n, k); got {sorted(dims)}")
    n, k = dims.pop()

    best_d = 0
    best_gen: BitMatrix | None = None
    for seed in seeds:
        for rec in sweep_extensions(seed, target_h, min_d=max(best_d, 1), kinds=kinds):
            d = rec.child_params[2]
            if d > best_d or (
                d == best_d
                and best_gen is not None
                and _gen_key(rec.canonical_gen) < _gen_key(best_gen)
            ):
                best_d = d
                best_gen = rec.canonical_gen
    return OptimalityClaim(
        n=n + 2,
        k=k + 1,
        h=target_h,
        d_best=best_d,
        status="lower_bound",
        witness=best_gen,
        method="sweep",
    )


# ---------------------------------------------------------------- exhaustive


def _check_exhaustive_cap(n: int, k: int, cap: int | None) -> int:
    if not 1 <= k <= n:
        raise UsageError(f"bad dimensions [{n},{k}]")
    cap = EXHAUSTIVE_CAP if cap is None else cap
    if k * (n - k) > cap:
        raise ResourceLimitError(
            f"k(n-k) = {k * (n - k)} exceeds enumeration cap {cap}", limit=cap
        )
    return cap


def _candidate_rows(candidate: int, k: int, m: int) -> tuple[int, ...]:
    """Generator rows (identity low bits, free block high bits)."""
    mask = (1 << m) - 1
    return tuple(
        (1 << i) | (((candidate >> (i * m)) & mask) << k) for i in range(k)
    )


def iter_exhaustive(n: int, k: int, h: int, cap: int | None = None) -> Iterator[LinearCode]:
    """Reference path: every systematic generator with hull dimension h.

    One code per free block, not deduplicated by equivalence.  Every
    code has an information set, so up to coordinate permutation this
    ranges over all [n, k] codes, and hull dimension and distance are
    permutation-invariant.
    """
    _check_exhaustive_cap(n, k, cap)
    m = n - k
    for candidate in range(1 << (k * m)):
        code = LinearCode(BitMatrix(n, _candidate_rows(candidate, k, m)))
        if code.hull_dim() == h:
            yield code


@lru_cache(maxsize=8)
def _sym_rank_lut(t: int) -> np.ndarray:
    """rank of every t x t symmetric matrix, indexed by packed upper bits."""
    if t == 0:
        return np.zeros(1, dtype=np.uint8)
    pos = {}
    p = 0
    for i in range(t):
        for j in range(i, t):
            pos[(i, j)] = p
            p += 1
    lut = np.zeros(1 << p, dtype=np.uint8)
    for idx in range(1 << p):
        rows = [0] * t
        for (i, j), b in pos.items():
            if idx >> b & 1:
                rows[i] |= 1 << j
                if i != j:
                    rows[j] |= 1 << i
        lut[idx] = _tiny_rank(rows)
    return lut


def _free_block_rows(ids: np.ndarray, k: int, m: int) -> list[np.ndarray]:
    dtype = np.uint8 if m <= 8 else (np.uint16 if m <= 16 else np.uint32)
    mask = np.uint64((1 << m) - 1)
    return [((ids >> np.uint64(i * m)) & mask).astype(dtype) for i in range(k)]


def _hull_dims(rows: list[np.ndarray], k: int, m: int) -> np.ndarray:
    """Hull dimension per lane via the smaller Gram product.

    With G = [I | A], the hull dimension equals k - rank(I + A A^T)
    and also m - rank(I + A^T A): the kernels correspond under w -> Aw.
    Work on whichever side is smaller.
    """
    t = min(k, m)
    if t == 0:
        return np.zeros(rows[0].shape if rows else (1,), dtype=np.uint8)
    if k <= m:
        vecs = rows
    else:
        dtype = np.uint8 if k <= 8 else (np.uint16 if k <= 16 else np.uint32)
        lanes = rows[0].shape[0]
        vecs = [np.zeros(lanes, dtype=dtype) for _ in range(m)]
        for i in range(k):
            wide = rows[i].astype(dtype)
            for p in range(m):
                vecs[p] |= ((wide >> np.uint8(p)) & 1) << np.uint8(i)
    idx = np.zeros(vecs[0].shape, dtype=np.uint32)
    p = 0
    for i in range(t):
        for j in range(i, t):
            if i == j:
                bit = (np.bitwise_count(vecs[i]) & 1) ^ 1  # 1 + v.v
            else:
                bit = np.bitwise_count(vecs[i] & vecs[j]) & 1
            idx |= bit.astype(np.uint32) << np.uint32(p)
            p += 1
    return (t - _sym_rank_lut(t)[idx]).astype(np.uint8)


def _lex_keys(ids: np.ndarray, k: int, m: int) -> np.ndarray:
    """Row-wise lexicographic order key: first free-block row is most
    significant, so smaller key = lexicographically smaller generator."""
    mask = np.uint64((1 << m) - 1)
    keys = np.zeros(ids.shape, dtype=np.uint64)
    for i in range(k):
        keys |= ((ids >> np.uint64(i * m)) & mask) << np.uint64((k - 1 - i) * m)
    return keys


def _min_distances(rows: list[np.ndarray], k: int, prune_below: int) -> np.ndarray:
    """Per-lane minimum codeword weight over all 2^k - 1 messages.

    Lanes whose running minimum can no longer exceed prune_below are
    periodically dropped; dropped lanes report weight 0.  Pass
    prune_below=0 to keep every lane exact.
    """
    lanes = rows[0].shape[0]
    out = np.zeros(lanes, dtype=np.uint8)
    alive = np.arange(lanes)
    cur = np.zeros(lanes, dtype=rows[0].dtype)
    curmin = np.full(lanes, 255, dtype=np.uint8)
    rows = list(rows)
    for t in range(1, 1 << k):
        cur ^= rows[(t & -t).bit_length() - 1]
        gray = t ^ (t >> 1)
        w = np.bitwise_count(cur).astype(np.uint8) + np.uint8(gray.bit_count())
        np.minimum(curmin, w, out=curmin)
        if prune_below and (t & 63) == 0 and t + 1 < (1 << k):
            keep = curmin >= prune_below
            if not keep.all():
                alive = alive[keep]
                cur = cur[keep]
                curmin = curmin[keep]
                rows = [r[keep] for r in rows]
                if alive.size == 0:
                    return out
    out[alive] = curmin
    return out


CHUNK_BITS = 18


def hull_census(n: int, k: int, cap: int | None = None) -> dict[int, int]:
    """Count systematic generators by hull dimension; sums to 2^{k(n-k)}."""
    _check_exhaustive_cap(n, k, cap)
    m = n - k
    total_bits = k * m
    counts = np.zeros(min(k, m) + 1, dtype=np.int64)
    for start in range(0, 1 << total_bits, 1 << CHUNK_BITS):
        stop = min(start + (1 << CHUNK_BITS), 1 << total_bits)
        ids = np.arange(start, stop, dtype=np.uint64)
        rows = _free_block_rows(ids, k, m)
        hs = _hull_dims(rows, k, m)
        counts += np.bincount(hs, minlength=counts.size)
    return {h: int(c) for h, c in enumerate(counts) if c}


def exhaustive_codes(
    n: int, k: int, h: int, d_floor: int | None = None, cap: int | None = None
) -> OptimalityClaim:
    """Enumerate every systematic generator and settle the (n, k, h) cell.

    Returns the h-restricted optimum: status h_optimal with a max-d
    witness when codes with hull dimension h exist (and meet d_floor if
    given), status nonexistence otherwise.  The witness is the max-d
    code whose generator is row-wise lexicographically smallest.
    """
    _check_exhaustive_cap(n, k, cap)
    m = n - k
    if m == 0:
        # only the full space [n, n]: hull dimension 0, distance 1
        if h == 0 and (d_floor is None or d_floor <= 1):
            return OptimalityClaim(
                n, k, h, 1, "h_optimal", BitMatrix(n, _candidate_rows(0, k, 0)), "exhaustive"
            )
        return OptimalityClaim(n, k, h, 0, "nonexistence", None, "exhaustive")

    best_d = 0
    best_key = None
    best_id = None
    total_bits = k * m
    for start in range(0, 1 << total_bits, 1 << CHUNK_BITS):
        stop = min(start + (1 << CHUNK_BITS), 1 << total_bits)
        ids = np.arange(start, stop, dtype=np.uint64)
        rows = _free_block_rows(ids, k, m)
        keep = _hull_dims(rows, k, m) == h
        if not keep.any():
            continue
        ids = ids[keep]
        rows = [r[keep] for r in rows]
        dists = _min_distances(rows, k, prune_below=best_d)
        top = int(dists.max(initial=0))
        if top < best_d or top == 0:
            continue
        cand = dists == top
        keys = _lex_keys(ids[cand], k, m)
        at = int(np.argmin(keys))
        key, cid = int(keys[at]), int(ids[cand][at])
        if top > best_d or best_key is None or key < best_key:
            best_d, best_key, best_id = top, key, cid

    if best_id is None or (d_floor is not None and best_d < d_floor):
        # either no code has this hull dimension, or none reaches the floor
        return OptimalityClaim(n, k, h, best_d, "nonexistence", None, "exhaustive")
    witness = BitMatrix(n, _candidate_rows(best_id, k, m))
    return OptimalityClaim(n, k, h, best_d, "h_optimal", witness, "exhaustive")


# --------------------------------------------------------------- equivalence


def _column_profiles(code: LinearCode):
    n = code.n
    unary = [dict() for _ in range(n)]
    pair = [[dict() for _ in range(n)] for _ in range(n)]
    for bits in code.iter_codewords():
        w = bits.bit_count()
        if not w:
            continue
        supp = []
        b = bits
        while b:
            low = b & -b
            supp.append(low.bit_length() - 1)
            b ^= low
        for i in supp:
            unary[i][w] = unary[i].get(w, 0) + 1
        for a in range(len(supp)):
            for bpos in range(a + 1, len(supp)):
                i, j = supp[a], supp[bpos]
                pair[i][j][w] = pair[i][j].get(w, 0) + 1
                pair[j][i][w] = pair[j][i].get(w, 0) + 1
    sig = [tuple(sorted(u.items())) for u in unary]
    return sig, pair


def _permuted_rows(gen: BitMatrix, perm: Sequence[int]) -> BitMatrix:
    rows = []
    for r in gen.rows:
        bits = 0
        v = r.bits
        while v:
            low = v & -v
            bits |= 1 << perm[low.bit_length() - 1]
            v ^= low
        rows.append(bits)
    return BitMatrix(gen.ncols, tuple(rows))


def are_equivalent(
    a: LinearCode, b: LinearCode, node_cap: int = NODE_CAP
) -> EquivalenceVerdict:
    """Decide whether a column permutation carries a onto b.

    Fast-rejects on weight distribution or hull dimension, then
    backtracks over column assignments constrained by per-column and
    per-column-pair codeword incidence counts.  A capped search returns
    equivalent=None (undecided) instead of guessing.
    """
    if a.n != b.n or a.k != b.k:
        raise DimensionError(
            f"cannot compare [{a.n},{a.k}] against [{b.n},{b.k}]"
        )
    if a.n > EQUIV_CAP:
        raise ResourceLimitError(
            f"equivalence search capped at n <= {EQUIV_CAP}", limit=EQUIV_CAP
        )
    if a.same_row_space(b):
        return EquivalenceVerdict(True, tuple(range(a.n)))
    if a.weight_distribution() != b.weight_distribution():
        return EquivalenceVerdict(False)
    if a.hull_dim() != b.hull_dim():
        return EquivalenceVerdict(False)

    n = a.n
    sig_a, pair_a = _column_profiles(a)
    sig_b, pair_b = _column_profiles(b)
    candidates = [
        [j for j in range(n) if sig_b[j] == sig_a[i]] for i in range(n)
    ]
    if any(not c for c in candidates):
        return EquivalenceVerdict(False)

    order = sorted(range(n), key=lambda i: len(candidates[i]))
    basis_b = b.canonical_gen()
    assigned: list[tuple[int, int]] = []
    perm = [-1] * n
    used = [False] * n
    nodes = 0

    def extend(depth: int) -> EquivalenceVerdict | None:
        nonlocal nodes
        if depth == n:
            permuted = _permuted_rows(a.canonical_gen(), perm)
            if LinearCode(permuted).canonical_gen() == basis_b:
                return EquivalenceVerdict(True, tuple(perm))
            return None
        i = order[depth]
        for j in candidates[i]:
            if used[j]:
                continue
            nodes += 1
            if nodes > node_cap:
                return EquivalenceVerdict(None)
            if any(pair_a[i][i0] != pair_b[j][j0] for i0, j0 in assigned):
                continue
            perm[i] = j
            used[j] = True
            assigned.append((i, j))
            found = extend(depth + 1)
            assigned.pop()
            used[j] = False
            perm[i] = -1
            if found is not None:
                return found
        return None

    verdict = extend(0)
    if verdict is None:
        return EquivalenceVerdict(False)
    return verdict


# ------------------------------------------------------------------- records


def format_sweep_record(rec: SweepRecord) -> str:
    n, k, d, h = rec.child_params
    gen = ",".join(rec.canonical_gen.to_strings())
    return f"SWEEP {rec.seed_id} {rec.x.to01()} {rec.kind} {n} {k} {d} {h} {gen}"


def format_claim(claim: OptimalityClaim) -> str:
    gen = "-" if claim.witness is None else ",".join(claim.witness.to_strings())
    return (
        f"CLAIM {claim.n} {claim.k} {claim.h} {claim.d_best}"
        f" {claim.status} {claim.method} {gen}"
    )
