"""Fixed-point covers, flabby resolutions, and the invertibility decision.

The cover construction follows the classical recipe: for each subgroup H
(one per conjugacy class) and each Hermite-basis generator f of the fixed
sublattice M^H, adjoin a coset summand Z[G/H] whose identity coset maps to
f.  Two refinements keep covers small and make the class fingerprint
strictly additive over permutation summands:

* seeding: basis vectors that G permutes outright are covered first by one
  summand per orbit, mapping isomorphically onto the orbit block;
* frugality: a generator already contained in the image of the partial
  cover's H-fixed part is skipped.

Neither changes the contract (surjectivity of P^H -> M^H for every subgroup
H, which is machine-verified on every call, hence coflabbiness of the
kernel); they only pick a smaller P among the valid covers.

The invertibility decision searches for an integral equivariant section of
the cover projection.  Sections M -> Z[G/H] correspond to H-fixed
functionals on M (the coset-gH coordinate of the image of v is that
functional evaluated at g^-1 v), so candidates live in the small lattice
direct sum of (M*)^H over the summands, and the section condition becomes
one integer linear system there.  Soundness: a solution exhibits M as a
direct summand of a permutation lattice.  Completeness: if M is invertible,
the cover sequence splits because its kernel is coflabby, so the system is
solvable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cohomology import is_flabby, tate_minus1, tate_zero, h1
from .errors import InternalCheckError, ResourceBoundError
from .groups import Subgroup
from .lattices import (
    GLattice,
    LatticeMap,
    PermutationSummand,
    _assemble_permutation_lattice,
    dual,
    fixed_basis,
)
from .zlinalg import (
    AbelianInvariants,
    LatticeAccumulator,
    LinearSolver,
    Mat,
    kernel_basis,
    lattice_rank,
    solve_integer,
)

COVER_RANK_BOUND = 512


@dataclass
class FixedPointCover:
    """0 -> C -> P -> M -> 0 with P permutation and P^H ->> M^H for every H."""

    M: GLattice
    P: GLattice
    projection: LatticeMap
    C: GLattice
    inclusion: LatticeMap


@dataclass
class FlabbyResolution:
    """0 -> M -> P -> F -> 0 with P permutation and F flabby."""

    M: GLattice
    P: GLattice
    F: GLattice
    injection: LatticeMap
    surjection: LatticeMap


@dataclass
class InvertibilityDecision:
    answer: bool
    witness: Optional[LatticeMap]
    cover: FixedPointCover


def _permutation_orbit_seeds(M: GLattice) -> list[tuple[Subgroup, int]]:
    """(stabilizer, basis index) for each orbit of basis vectors that the whole
    group permutes by +1 entries."""
    G = M.group
    mats = M.expand()
    images: dict[int, dict[int, int]] = {}  # g -> column index map
    candidates = set(range(M.rank))
    for g, A in mats.items():
        colmap = {}
        for j in range(M.rank):
            hit = None
            ok = True
            for i in range(M.rank):
                x = A.a[i][j]
                if x == 0:
                    continue
                if x != 1 or hit is not None:
                    ok = False
                    break
                hit = i
            if ok and hit is not None:
                colmap[j] = hit
        images[g] = colmap
        candidates &= colmap.keys()
    # greatest set closed under all image maps
    changed = True
    while changed:
        changed = False
        for g, colmap in images.items():
            for j in list(candidates):
                if colmap[j] not in candidates:
                    candidates.discard(j)
                    changed = True
    seeds = []
    seen: set[int] = set()
    for j in sorted(candidates):
        if j in seen:
            continue
        orbit = {images[g][j] for g in range(G.order)}
        seen |= orbit
        stab_members = [g for g in range(G.order) if images[g][j] == j]
        seeds.append((G.subgroup(stab_members), j))
    return seeds


class _CoverBuilder:
    def __init__(self, M: GLattice):
        self.M = M
        self.G = M.group
        self.summands: list[PermutationSummand] = []
        self.columns: list[list[int]] = []  # projection columns, basis order
        self.col_reps: list[int] = []  # group element per column
        self.summand_spans: list[tuple[int, int]] = []

    def adjoin(self, H: Subgroup, f: list[int]):
        from .lattices import coset_representatives

        reps = coset_representatives(self.G, H)
        start = len(self.columns)
        for rep in reps:
            self.columns.append(self.M.act(rep).mulvec(f))
            self.col_reps.append(rep)
        self.summands.append(PermutationSummand(H, reps))
        self.summand_spans.append((start, len(self.columns)))
        if len(self.columns) > COVER_RANK_BOUND:
            raise ResourceBoundError(
                f"cover rank exceeds bound {COVER_RANK_BOUND}")

    def summand_fixed_image_columns(self, S: Subgroup, index: int) -> list[list[int]]:
        """Images in M of a basis of (one summand)^S: a column per S-orbit."""
        G = self.G
        summand = self.summands[index]
        H, reps = summand.stabilizer, summand.coset_reps
        start, _ = self.summand_spans[index]
        mem = H.members
        pos = {rep: i for i, rep in enumerate(reps)}
        out = []
        unvisited = set(range(len(reps)))
        while unvisited:
            j = min(unvisited)
            orbit = set()
            stack = [j]
            while stack:
                cur = stack.pop()
                if cur in orbit:
                    continue
                orbit.add(cur)
                for s in S.generators:
                    moved = min(G.mul(G.mul(s, reps[cur]), h) for h in mem)
                    stack.append(pos[moved])
            unvisited -= orbit
            col = [0] * self.M.rank
            for idx in orbit:
                c = self.columns[start + idx]
                col = [x + y for x, y in zip(col, c)]
            out.append(col)
        return out

    def fixed_image_lattice(self, S: Subgroup) -> LatticeAccumulator:
        """Image of P^S -> M^S for the current summand list."""
        acc = LatticeAccumulator(self.M.rank)
        for i in range(len(self.summands)):
            for col in self.summand_fixed_image_columns(S, i):
                acc.add(col)
        return acc


def fixed_point_cover(M: GLattice, frugal: bool = True) -> FixedPointCover:
    """Permutation cover with per-subgroup surjectivity, kernel included.

    With frugal=True (the default) basis orbits that G permutes are seeded
    with one summand each and generators already covered are skipped; with
    frugal=False every fixed-basis generator of every conjugacy-class
    representative gets its own summand (the plain textbook cover, useful as
    a cross-check because anything downstream must not depend on the choice).
    The per-subgroup surjectivity P^H ->> M^H is verified for EVERY subgroup
    before returning; failure raises InternalCheckError.
    """
    G = M.group
    builder = _CoverBuilder(M)
    if frugal:
        for stab, j in _permutation_orbit_seeds(M):
            f = [1 if i == j else 0 for i in range(M.rank)]
            builder.adjoin(stab, f)
    reps = G.subgroup_conjugacy_representatives()
    for H in sorted(reps, key=lambda s: (-s.order, s.members)):
        FB = fixed_basis(M, H)
        if FB.cols == 0:
            continue
        image = builder.fixed_image_lattice(H) if frugal else None
        for j in range(FB.cols):
            f = FB.col(j)
            if not frugal or not image.contains(f):
                builder.adjoin(H, f)
                if frugal:
                    for col in builder.summand_fixed_image_columns(
                            H, len(builder.summands) - 1):
                        image.add(col)

    P = _assemble_permutation_lattice(G, builder.summands)
    proj_mat = Mat.from_cols(builder.columns, rows=M.rank)
    projection = LatticeMap(P, M, proj_mat)

    # hard postcondition: P^H ->> M^H for every subgroup (not only class reps)
    for S in G.subgroups():
        FB = fixed_basis(M, S)
        if FB.cols:
            image = builder.fixed_image_lattice(S)
            for j in range(FB.cols):
                if not image.contains(FB.col(j)):
                    raise InternalCheckError(
                        f"cover misses the {S.members}-fixed part of the base lattice")

    K = kernel_basis(proj_mat)
    c_rank = K.cols
    if c_rank:
        solver = LinearSolver(K)
        c_action = {}
        for s in G.generators:
            B = P.act(s).mul(K)
            X = solver.solve_matrix(B)
            if X is None:
                raise InternalCheckError("cover kernel is not action-stable")
            c_action[s] = X
        C = GLattice(G, c_rank, c_action, check=False)
        C.expand()
    else:
        C = GLattice(G, 0, {s: Mat.zero(0, 0) for s in G.generators}, check=False)
    inclusion = LatticeMap(C, P, K)
    return FixedPointCover(M, P, projection, C, inclusion)


def flabby_resolution(M: GLattice, frugal: bool = True) -> FlabbyResolution:
    """0 -> M -> P -> F -> 0 by dualizing a fixed-point cover of the dual.

    All exactness conditions are machine-checked, and F is verified flabby;
    a failure of either is an internal error, never a user error.
    """
    cov = fixed_point_cover(dual(M), frugal=frugal)
    P = dual(cov.P)  # permutation matrices are orthogonal: same matrices
    F = dual(cov.C)
    inj = LatticeMap(M, P, cov.projection.matrix.transpose())
    surj = LatticeMap(P, F, cov.inclusion.matrix.transpose())

    # exactness checks
    if lattice_rank(inj.matrix) != M.rank:
        raise InternalCheckError("resolution injection is not injective")
    if not surj.matrix.mul(inj.matrix).is_zero():
        raise InternalCheckError("resolution composite is nonzero")
    if M.rank + F.rank != P.rank:
        raise InternalCheckError("resolution ranks do not add up")
    ker = kernel_basis(surj.matrix)
    img_solver = LinearSolver(inj.matrix)
    for j in range(ker.cols):
        if img_solver.solve(ker.col(j)) is None:
            raise InternalCheckError("image of injection is not saturated")
    if not P.is_permutation_lattice():
        raise InternalCheckError("middle term is not a permutation lattice")
    if not is_flabby(F):
        raise InternalCheckError("resolution tail failed the flabby check")
    return FlabbyResolution(M, P, F, inj, surj)


def _section_candidates(M: GLattice, P: GLattice) -> list[Mat]:
    """Z-basis of the equivariant maps M -> P, one matrix per basis element.

    For the coset summand Z[G/H], equivariant maps M -> Z[G/H] are in
    bijection with H-fixed dual vectors u: the row of the gH coordinate is
    u^T A(g^-1)."""
    G = M.group
    Mdual = dual(M)
    out: list[Mat] = []
    base = 0
    for summand in P.summands or []:
        H, reps = summand.stabilizer, summand.coset_reps
        FB = fixed_basis(Mdual, H)
        for j in range(FB.cols):
            u = FB.col(j)
            S = Mat.zero(P.rank, M.rank)
            for r, rep in enumerate(reps):
                A = M.act(G.inv(rep))
                S.a[base + r] = [sum(u[i] * A.a[i][t] for i in range(M.rank))
                                 for t in range(M.rank)]
            out.append(S)
        base += len(reps)
    return out


def is_invertible(M: GLattice, frugal: bool = True) -> InvertibilityDecision:
    """Decide whether M is a direct summand of a permutation lattice.

    Yes answers carry an explicit equivariant section of the cover
    projection, re-verified exactly before returning.
    """
    cov = fixed_point_cover(M, frugal=frugal)
    if M.rank == 0:
        ident = LatticeMap(M, cov.P, Mat.zero(cov.P.rank, 0))
        return InvertibilityDecision(True, ident, cov)
    basis = _section_candidates(M, cov.P)
    proj = cov.projection.matrix
    composites = [proj.mul(S) for S in basis]
    m = M.rank
    # one equation per matrix entry of (sum x_j proj*S_j) = identity, with
    # zero and duplicate equations pruned (contradictory duplicates decide No)
    seen: dict[tuple, int] = {}
    rows = []
    rhs = []
    for i in range(m):
        for j in range(m):
            row = tuple(D.a[i][j] for D in composites)
            target = 1 if i == j else 0
            if not any(row):
                if target:
                    return InvertibilityDecision(False, None, cov)
                continue
            prior = seen.get(row)
            if prior is None:
                seen[row] = target
                rows.append(list(row))
                rhs.append(target)
            elif prior != target:
                return InvertibilityDecision(False, None, cov)
    x = solve_integer(Mat.from_rows(rows, len(basis)), rhs)
    if x is None:
        return InvertibilityDecision(False, None, cov)
    S = Mat.zero(cov.P.rank, m)
    for coeff, cand in zip(x, basis):
        if coeff:
            for i in range(cov.P.rank):
                srow = S.a[i]
                crow = cand.a[i]
                for j in range(m):
                    srow[j] += coeff * crow[j]
    # re-verify the witness: section identity and equivariance, exactly
    if not proj.mul(S).is_identity():
        raise InternalCheckError("section candidate failed the identity check")
    witness = LatticeMap(M, cov.P, S)  # constructor re-checks equivariance
    return InvertibilityDecision(True, witness, cov)


Fingerprint = dict[tuple[int, ...], tuple[AbelianInvariants, AbelianInvariants, AbelianInvariants]]


def class_fingerprint(M: GLattice) -> Fingerprint:
    """Necessary-condition invariant of the flabby class of M.

    Table over all nontrivial subgroups H of the cohomology of the resolution
    tail F in degrees -1, 0, 1.  Invariant under M -> M + (permutation
    lattice); it does NOT decide equality of flabby classes.
    """
    F = flabby_resolution(M).F
    table: Fingerprint = {}
    for H in M.group.subgroups():
        if H.order == 1:
            continue
        table[H.members] = (tate_minus1(H, F), tate_zero(H, F), h1(H, F))
    return table
