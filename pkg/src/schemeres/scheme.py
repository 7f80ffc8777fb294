"""Association-scheme data model.

``verify_scheme`` is the only constructor: it checks every defining axiom in
exact integer arithmetic and computes the intersection numbers on the way.
Matrix products are taken in float64 (BLAS) for speed; all entries are small
integers, far below 2**53, so those products are still exact and the axiom
checks remain bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    DegenerateSplit,
    IdentityMissing,
    NotClosed,
    NotCommutative,
    NotPartition,
    NotSymmetric,
)
from .spectra import simultaneous_eigenbasis


@dataclass(frozen=True, eq=False)
class AssociationScheme:
    """A verified symmetric association scheme on n vertices with d classes.

    Attributes
    ----------
    relations : tuple of (n, n) 0/1 integer arrays, relations[0] == I
    valencies : row sums kappa_0..kappa_d
    p : (d+1, d+1, d+1) array, ``p[i, j, k]`` = coefficient of A_k in A_i A_j
    classmap : (n, n) array mapping a vertex pair to its class index
    """

    n: int
    d: int
    relations: tuple
    valencies: tuple
    p: np.ndarray
    classmap: np.ndarray
    class_names: tuple

    def intersection_matrix(self, i: int) -> np.ndarray:
        """B_i with (B_i)[k, j] = p^k_{ij}; columns track A_i A_j."""
        return self.p[i, :, :].T.copy()

    def relation_connected(self, classes: Sequence[int]) -> bool:
        """True if the union of the listed relations is a connected graph."""
        adj = np.zeros((self.n, self.n), dtype=bool)
        for k in classes:
            adj |= self.relations[k].astype(bool)
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        while frontier.size:
            nxt = adj[frontier].any(axis=0) & ~seen
            seen |= nxt
            frontier = np.flatnonzero(nxt)
        return bool(seen.all())


def verify_scheme(relations: Sequence, class_names: Optional[Sequence[str]] = None
                  ) -> AssociationScheme:
    """Validate relation matrices and build the scheme.

    Checks, in exact integer arithmetic: 0/1 entries, A_0 = I, the relations
    partition the vertex pairs, every relation is symmetric, the family is
    closed under multiplication with nonnegative integer coefficients, and
    the intersection numbers are commutative.

    Raises
    ------
    IdentityMissing, NotPartition, NotSymmetric, NotClosed, NotCommutative
        Naming the violated axiom.
    """
    rels = [np.asarray(r) for r in relations]
    if not rels:
        raise NotPartition("no relations given")
    n = rels[0].shape[0]
    d = len(rels) - 1
    for k, r in enumerate(rels):
        if r.ndim != 2 or r.shape != (n, n):
            raise NotPartition(f"relation {k} is not {n}x{n}")
        if r.dtype == object or not np.issubdtype(r.dtype, np.integer):
            cast = r.astype(np.int64)
            if (cast != r).any():
                raise NotPartition(f"relation {k} has non-integer entries")
            rels[k] = r = cast
        if ((r != 0) & (r != 1)).any():
            raise NotPartition(f"relation {k} has entries outside {{0, 1}}")

    if (rels[0] != np.eye(n, dtype=rels[0].dtype)).any():
        raise IdentityMissing("relation 0 is not the identity matrix")

    total = np.zeros((n, n), dtype=np.int64)
    for r in rels:
        total += r
    if (total != 1).any():
        raise NotPartition("relations do not partition the vertex pairs")

    for k, r in enumerate(rels):
        if (r != r.T).any():
            raise NotSymmetric(f"relation {k} is not symmetric")

    classmap = np.zeros((n, n), dtype=np.int16)
    for k, r in enumerate(rels):
        classmap[r.astype(bool)] = k

    reps = []
    for k, r in enumerate(rels):
        hits = np.argwhere(r == 1)
        if hits.size == 0:
            raise NotPartition(f"relation {k} is empty")
        reps.append((int(hits[0, 0]), int(hits[0, 1])))

    floats = [r.astype(np.float64) for r in rels]
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        for j in range(i, d + 1):
            prod = floats[i] @ floats[j]
            coef = np.array([prod[reps[k]] for k in range(d + 1)])
            if (coef != np.round(coef)).any() or (coef < 0).any():
                raise NotClosed(f"A_{i} A_{j} has non-integer class coefficients")
            coef = coef.astype(np.int64)
            if (prod != coef[classmap]).any():
                raise NotClosed(f"A_{i} A_{j} is outside the span of the relations")
            p[i, j, :] = coef
            p[j, i, :] = coef  # product of symmetric matrices, transposed

    if (p != p.transpose(1, 0, 2)).any():
        raise NotCommutative("p^k_{ij} != p^k_{ji} for some i, j, k")

    valencies = tuple(int(p[k, k, 0]) for k in range(d + 1))
    for k, r in enumerate(rels):
        sums = r.sum(axis=1)
        if (sums != valencies[k]).any():
            raise NotClosed(f"relation {k} is not regular")
    if sum(valencies) != n:
        raise NotPartition("valencies do not sum to the vertex count")

    names = tuple(class_names) if class_names is not None else tuple(
        f"A{k}" for k in range(d + 1))
    if len(names) != d + 1:
        raise ValueError("class_names length must be d+1")

    return AssociationScheme(
        n=n, d=d,
        relations=tuple(r.astype(np.int8) for r in rels),
        valencies=valencies, p=p, classmap=classmap, class_names=names,
    )


def intersection_numbers(scheme: AssociationScheme) -> np.ndarray:
    """The tensor ``p[i, j, k]`` = p^k_{ij} (exact nonnegative integers)."""
    return scheme.p


# --------------------------------------------------------------------------
# spectral data
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralData:
    """Eigenmatrices and primitive idempotents of the Bose-Mesner algebra.

    ``p_matrix`` rows index common eigenspaces (row 0 is the all-ones
    eigenspace, so ``P[0, j] = kappa_j`` and ``P[k, 0] = 1``); columns index
    classes.  ``multiplicities[k]`` is the rank of ``idempotents[k]``.
    """

    p_matrix: np.ndarray
    q_matrix: np.ndarray
    multiplicities: tuple
    idempotents: tuple

    @property
    def d(self) -> int:
        return self.p_matrix.shape[0] - 1


def spectral_data(scheme: AssociationScheme, *, validate: bool = True) -> SpectralData:
    """Compute P, Q, multiplicities and idempotents by joint diagonalization.

    Eigenspace 0 is the span of the all-ones vector; the remaining
    eigenspaces are ordered by decreasing eigenvalue on A_1 (ties broken by
    the later columns), which reproduces the conventional ordering on
    distance-regular schemes.

    Raises
    ------
    DegenerateSplit
        If the family does not split into exactly d+1 common eigenspaces or
        a projector trace is not close to an integer.
    """
    n, d = scheme.n, scheme.d
    projectors = simultaneous_eigenbasis([r.astype(float) for r in scheme.relations])
    if len(projectors) != d + 1:
        worst = max(
            float(np.abs(a.astype(float) @ b.astype(float)
                         - b.astype(float) @ a.astype(float)).max())
            for a in scheme.relations for b in scheme.relations)
        raise DegenerateSplit(
            f"found {len(projectors)} common eigenspaces, expected {d + 1} "
            f"(max commutator norm {worst:.3e})")

    mults = []
    for e in projectors:
        t = float(np.trace(e))
        m = round(t)
        if abs(t - m) >= 1e-6 or m < 1:
            raise DegenerateSplit(f"projector trace {t!r} is not a positive integer")
        mults.append(m)

    ones = np.ones(n)
    scores = [float(np.abs(e @ ones - ones).max()) for e in projectors]
    k0 = int(np.argmin(scores))
    if scores[k0] > 1e-8 * n:
        raise DegenerateSplit("no eigenspace carries the all-ones vector")

    raw_p = np.empty((d + 1, d + 1))
    for k, e in enumerate(projectors):
        for j in range(d + 1):
            raw_p[k, j] = np.tensordot(scheme.relations[j].astype(float), e) / mults[k]

    rest = [k for k in range(d + 1) if k != k0]
    rest.sort(key=lambda k: tuple(-np.round(raw_p[k, 1:], 9)))
    order = [k0] + rest

    p_matrix = raw_p[order]
    multiplicities = tuple(mults[k] for k in order)
    idempotents = tuple(projectors[k] for k in order)

    kappa = np.array(scheme.valencies, dtype=float)
    q_matrix = (p_matrix.T * multiplicities).T  # temporary: m_k * P[k, l]
    q_matrix = q_matrix.T / kappa[:, None]      # Q[l, j] = m_j P[j, l] / kappa_l

    data = SpectralData(p_matrix, q_matrix, multiplicities, idempotents)
    if validate:
        _validate_spectral(scheme, data)
    return data


def _validate_spectral(scheme: AssociationScheme, data: SpectralData) -> None:
    n, d = scheme.n, scheme.d
    P, Q, E = data.p_matrix, data.q_matrix, data.idempotents
    if data.multiplicities[0] != 1 or sum(data.multiplicities) != n:
        raise DegenerateSplit("multiplicities do not resolve the vertex count")
    if np.abs(P @ Q - n * np.eye(d + 1)).max() > 1e-7 * n:
        raise DegenerateSplit("P Q != N I at tolerance")
    if np.abs(E[0] - 1.0 / n).max() > 1e-8:
        raise DegenerateSplit("eigenspace 0 is not J/N")
    if np.abs(P[0] - np.array(scheme.valencies)).max() > 1e-7:
        raise DegenerateSplit("row 0 of P does not list the valencies")
    if np.abs(P[:, 0] - 1.0).max() > 1e-7:
        raise DegenerateSplit("column 0 of P is not all ones")
    scale = max(float(v) for v in scheme.valencies)
    for j in range(d + 1):
        a = scheme.relations[j].astype(float)
        for k in range(d + 1):
            if np.abs(a @ E[k] - P[k, j] * E[k]).max() > 1e-7 * max(1.0, scale):
                raise DegenerateSplit(f"A_{j} E_{k} != P[{k},{j}] E_{k} at tolerance")


# --------------------------------------------------------------------------
# stratification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Stratification:
    """Partition of vertices by their relation to a reference vertex."""

    reference: int
    strata: tuple           # index arrays, strata[i] lists Gamma_i(reference)
    unit_vectors: np.ndarray  # (d+1, n); row i is the i-th stratum unit vector


def stratify(scheme: AssociationScheme, reference: int = 0) -> Stratification:
    """Strata and stratum unit vectors for one reference vertex.

    Also certifies, in exact integer arithmetic, the matrix-element identity
    <phi_l| A_i |phi_j> = sqrt(kappa_l / kappa_j) * p^l_{ij} for all l, i, j.
    """
    n, d = scheme.n, scheme.d
    if not 0 <= reference < n:
        raise ValueError("reference vertex out of range")
    row = scheme.classmap[reference]
    strata = tuple(np.flatnonzero(row == i) for i in range(d + 1))
    for i, s in enumerate(strata):
        if len(s) != scheme.valencies[i]:
            raise NotPartition(f"stratum {i} has size {len(s)}, not kappa_{i}")

    indicators = np.zeros((d + 1, n))
    for i, s in enumerate(strata):
        indicators[i, s] = 1.0
    kappa = np.array(scheme.valencies, dtype=float)
    unit_vectors = indicators / np.sqrt(kappa)[:, None]

    # integer form of the matrix-element identity: counts == kappa_l * p^l_{ij}
    for i in range(d + 1):
        counts = indicators @ scheme.relations[i].astype(float) @ indicators.T
        expected = kappa[:, None] * scheme.p[i, :, :].T  # [l, j] = kappa_l p^l_{ij}
        if (counts != expected).any():
            raise NotClosed(f"stratification matrix elements of A_{i} are off")

    return Stratification(reference, strata, unit_vectors)


# --------------------------------------------------------------------------
# distance regularity
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IntersectionArray:
    """{b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular graph."""

    b: tuple
    c: tuple

    @property
    def d(self) -> int:
        return len(self.c)

    @property
    def kappa(self) -> int:
        return self.b[0]

    def a(self, i: int) -> int:
        """a_i = kappa - b_i - c_i, with b_d = 0 and c_0 = 0."""
        bi = self.b[i] if i < self.d else 0
        ci = self.c[i - 1] if i >= 1 else 0
        return self.kappa - bi - ci

    def valencies(self):
        """kappa_0..kappa_d from kappa_{i-1} b_{i-1} = kappa_i c_i."""
        out = [1]
        for i in range(1, self.d + 1):
            num = out[-1] * self.b[i - 1]
            if num % self.c[i - 1] != 0:
                raise ValueError("intersection array is not feasible")
            out.append(num // self.c[i - 1])
        return tuple(out)


def check_distance_regular(scheme: AssociationScheme) -> Optional[IntersectionArray]:
    """Intersection array of the scheme, or None when it is not one.

    Requires p^i_{j1} = 0 whenever |i - j| > 1 and a connected class-1
    graph; on success the standard identities a_i + b_i + c_i = kappa and
    kappa_{i-1} b_{i-1} = kappa_i c_i are certified, along with
    tridiagonality of A_1 in the stratification basis.
    """
    d = scheme.d
    if d < 1:
        return None
    for j in range(d + 1):
        for i in range(d + 1):
            if abs(i - j) > 1 and scheme.p[j, 1, i] != 0:
                return None
    if not scheme.relation_connected([1]):
        return None

    kappa = scheme.valencies[1]
    b = tuple(int(scheme.p[1, i + 1, i]) for i in range(d))
    c = tuple(int(scheme.p[1, i - 1, i]) for i in range(1, d + 1))
    a = tuple(int(scheme.p[1, i, i]) for i in range(1, d + 1))

    if b[0] != kappa or c[0] != 1:
        return None
    for i in range(1, d + 1):
        bi = b[i] if i < d else 0
        if a[i - 1] + bi + c[i - 1] != kappa:
            return None
        if scheme.valencies[i - 1] * b[i - 1] != scheme.valencies[i] * c[i - 1]:
            return None

    # A_1 must act tridiagonally on the stratum unit vectors
    strat = stratify(scheme, 0)
    indicators = (strat.unit_vectors > 0).astype(float)
    counts = indicators @ scheme.relations[1].astype(float) @ indicators.T
    off = np.triu(counts, 2)
    if off.any() or np.tril(counts, -2).any():
        return None

    return IntersectionArray(b=b, c=c)


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def scheme_to_dict(scheme: AssociationScheme) -> dict:
    """JSON-ready document; relations are row-major 0/1 integer lists."""
    return {
        "n": scheme.n,
        "d": scheme.d,
        "class_names": list(scheme.class_names),
        "relations": [r.astype(int).reshape(-1).tolist() for r in scheme.relations],
    }


def scheme_from_dict(doc: dict) -> AssociationScheme:
    """Parse and re-verify a scheme document produced by ``scheme_to_dict``."""
    n = int(doc["n"])
    rels = [np.array(flat, dtype=np.int64).reshape(n, n) for flat in doc["relations"]]
    names = doc.get("class_names")
    scheme = verify_scheme(rels, class_names=names)
    if scheme.d != int(doc["d"]):
        raise NotPartition("declared class count does not match the relations")
    return scheme
