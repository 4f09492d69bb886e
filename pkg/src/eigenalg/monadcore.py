"""Monads on finite index windows and their ideal/eigenmonad machinery.

A MonadGrid stores, for every ordered pair of window labels, a based space
T(Y,X), sparse composition tensors T(Z,Y) x T(Y,X) -> T(Z,X), and unit
elements.  On top of that this module computes left-ideal closures,
idealizers, eigenmonads E = I(J)/J with the canonical (T,E)-bimodule T/J,
vanishing modules, inner Hom, the balanced tensor over E, and the unit/counit
checks of the eigenmonad adjunction.

All ideal-type computations are window-relative: composition waypoints range
over window labels only (all of which sit below the window's intermediate
cap), and results carry that cap so callers can certify cap-stability.
"""

import json

from .exactla import (Field, Mat, Subspace, intersect_many, kernel, rref,
                      DimensionMismatch)


class NotALeftIdeal(ValueError):
    """The given SubGrid is not closed under left composition."""


# ---------------------------------------------------------------------------
# basic containers
# ---------------------------------------------------------------------------

class IndexWindow:
    """A finite ordered list of labels plus the largest allowed waypoint."""

    def __init__(self, indices, intermediate_cap=None):
        self.indices = tuple(indices)
        self.intermediate_cap = (max(self.indices) if intermediate_cap is None
                                 else intermediate_cap)
        if any(i > self.intermediate_cap for i in self.indices):
            raise ValueError("window label above the intermediate cap")

    def __repr__(self):
        return f"IndexWindow({list(self.indices)}, cap={self.intermediate_cap})"

    def __eq__(self, other):
        return isinstance(other, IndexWindow) and \
            self.indices == other.indices and \
            self.intermediate_cap == other.intermediate_cap


def _sp_add(F, acc, vec, scale=1):
    for k, v in vec.items():
        acc[k] = F.add(acc.get(k, F.zero), F.mul(F.of(scale), v))
    return acc


def _sp_clean(acc):
    return {k: v for k, v in acc.items() if v != 0}


def _dense(vec, dim, F):
    out = [F.zero] * dim
    for k, v in vec.items():
        out[k] = v
    return out


def _sparse(vec_list, F):
    return {i: F.of(v) for i, v in enumerate(vec_list) if v != 0}


class GridSpaces:
    """Based spaces per ordered pair of window labels."""

    def __init__(self, field, window, cells):
        self.field = field
        self.window = window
        self.cells = dict(cells)  # (y, x) -> list of basis labels

    def dim(self, y, x):
        return len(self.cells.get((y, x), []))


class MonadGrid:
    """A monad on a finite index window, with materialized sparse tensors.

    cells: (y, x) -> list of basis labels
    comp:  (z, y, x) -> {(i, j): {col: scalar}}  (sparse; missing = zero)
    units: x -> {i: scalar} in cell (x, x)
    """

    def __init__(self, field, window, cells, comp, units):
        self.field = field
        self.window = window
        self.cells = {k: list(v) for k, v in cells.items()}
        self.comp = comp
        self.units = units

    @classmethod
    def from_compose(cls, field, window, cells, compose_fn, unit_fn):
        """Materialize composition tensors from a basis-level compose function.

        compose_fn(z, y, x, bi, bj) takes basis labels bi in (z,y), bj in
        (y,x) and returns a sparse {basis label of (z,x): coeff} dict;
        unit_fn(x) returns the same for the unit.
        """
        comp = {}
        index = {cell: {b: i for i, b in enumerate(bs)}
                 for cell, bs in cells.items()}
        for z in window.indices:
            for y in window.indices:
                for x in window.indices:
                    a = cells.get((z, y), [])
                    b = cells.get((y, x), [])
                    tgt = index.get((z, x), {})
                    if not a or not b:
                        continue
                    tensor = {}
                    for i, bi in enumerate(a):
                        for j, bj in enumerate(b):
                            res = compose_fn(z, y, x, bi, bj)
                            if res:
                                tensor[(i, j)] = {tgt[lbl]: field.of(c)
                                                  for lbl, c in res.items()
                                                  if c != 0}
                    comp[(z, y, x)] = tensor
        units = {}
        for x in window.indices:
            tgt = index.get((x, x), {})
            u = unit_fn(x)
            units[x] = {tgt[lbl]: field.of(c) for lbl, c in u.items() if c != 0}
        return cls(field, window, cells, comp, units)

    def dim(self, y, x):
        return len(self.cells.get((y, x), []))

    def compose_basis(self, z, y, x, i, j):
        return self.comp.get((z, y, x), {}).get((i, j), {})

    def compose_vec(self, z, y, x, a, b):
        """Compose sparse coefficient vectors a in T(z,y), b in T(y,x)."""
        F = self.field
        tensor = self.comp.get((z, y, x), {})
        acc = {}
        for i, ca in a.items():
            if ca == 0:
                continue
            for j, cb in b.items():
                if cb == 0:
                    continue
                res = tensor.get((i, j))
                if res:
                    s = F.mul(ca, cb)
                    for k, v in res.items():
                        acc[k] = F.add(acc.get(k, F.zero), F.mul(s, v))
        return _sp_clean(acc)

    def opposite(self):
        """The opposite monad: cells transposed, composition flipped."""
        cells = {(x, y): v for (y, x), v in self.cells.items()}
        comp = {}
        for (z, y, x), tensor in self.comp.items():
            comp[(x, y, z)] = {(j, i): dict(res)
                               for (i, j), res in tensor.items()}
        return MonadGrid(self.field, self.window, cells, comp,
                         {x: dict(u) for x, u in self.units.items()})


def check_monad_laws(T, max_checks=None):
    """Return a list of violation records; empty iff the monad laws hold.

    Associativity is checked on every basis triple within the window; unit
    laws on every basis element.
    """
    F = T.field
    violations = []
    labels = T.window.indices
    # unit laws
    for y in labels:
        for x in labels:
            d = T.dim(y, x)
            if d == 0:
                continue
            uy = T.units.get(y, {})
            ux = T.units.get(x, {})
            for j in range(d):
                left = T.compose_vec(y, y, x, uy, {j: F.one})
                if left != {j: F.one}:
                    violations.append(("left-unit", y, x, j))
                right = T.compose_vec(y, x, x, {j: F.one}, ux)
                if right != {j: F.one}:
                    violations.append(("right-unit", y, x, j))
    # associativity
    count = 0
    for z in labels:
        for y in labels:
            if T.dim(z, y) == 0:
                continue
            for x in labels:
                if T.dim(y, x) == 0:
                    continue
                for w in labels:
                    if T.dim(x, w) == 0:
                        continue
                    for i in range(T.dim(z, y)):
                        for j in range(T.dim(y, x)):
                            ij = T.compose_basis(z, y, x, i, j)
                            for k in range(T.dim(x, w)):
                                if max_checks and count >= max_checks:
                                    return violations
                                count += 1
                                lhs = T.compose_vec(z, x, w, ij, {k: F.one})
                                jk = T.compose_basis(y, x, w, j, k)
                                rhs = T.compose_vec(z, y, w, {i: F.one}, jk)
                                if lhs != rhs:
                                    violations.append(
                                        ("assoc", (z, y, x, w), (i, j, k)))
    return violations


class ModuleGrid:
    """A left T-module on the window: spaces M(x) and action tensors.

    act: (y, x) -> {(i, j): {col: scalar}} with i a T(y,x) basis index and
    j an M(x) basis index, giving the coefficients of the image in M(y).
    """

    def __init__(self, T, spaces, act):
        self.T = T
        self.field = T.field
        self.spaces = {k: list(v) for k, v in spaces.items()}
        self.act = act

    def dim(self, x):
        return len(self.spaces.get(x, []))

    def act_vec(self, y, x, t, v):
        F = self.field
        tensor = self.act.get((y, x), {})
        acc = {}
        for i, ct in t.items():
            if ct == 0:
                continue
            for j, cv in v.items():
                if cv == 0:
                    continue
                res = tensor.get((i, j))
                if res:
                    s = F.mul(ct, cv)
                    for k, c in res.items():
                        acc[k] = F.add(acc.get(k, F.zero), F.mul(s, c))
        return _sp_clean(acc)

    def action_matrix(self, y, x, t):
        """The matrix of (t acting): M(x) -> M(y) for a sparse t in T(y,x)."""
        F = self.field
        cols = []
        for j in range(self.dim(x)):
            img = self.act_vec(y, x, t, {j: F.one})
            cols.append(_dense(img, self.dim(y), F))
        return Mat.from_rows(F, cols, cols=self.dim(y)).transpose() \
            if cols else Mat.zero(F, self.dim(y), 0)


def check_module_laws(M, samples=None):
    """Associativity/unitality of a module action on basis triples."""
    T = M.T
    F = T.field
    violations = []
    labels = T.window.indices
    for x in labels:
        ux = T.units.get(x, {})
        for j in range(M.dim(x)):
            if M.act_vec(x, x, ux, {j: F.one}) != {j: F.one}:
                violations.append(("unit", x, j))
    for z in labels:
        for y in labels:
            if T.dim(z, y) == 0:
                continue
            for x in labels:
                if T.dim(y, x) == 0 or M.dim(x) == 0:
                    continue
                for i in range(T.dim(z, y)):
                    for j in range(T.dim(y, x)):
                        ij = T.compose_basis(z, y, x, i, j)
                        for k in range(M.dim(x)):
                            lhs = M.act_vec(z, x, ij, {k: F.one})
                            jk = M.act_vec(y, x, {j: F.one}, {k: F.one})
                            rhs = M.act_vec(z, y, {i: F.one}, jk)
                            if lhs != rhs:
                                violations.append(
                                    ("assoc", (z, y, x), (i, j, k)))
    return violations


class SubGrid:
    """One Subspace per cell key (pair for grids, label for modules)."""

    def __init__(self, spaces, window_relative=False, cap=None):
        self.spaces = dict(spaces)
        self.window_relative = window_relative
        self.cap = cap

    def space(self, key):
        return self.spaces.get(key)

    def dims(self):
        return {k: s.dim for k, s in sorted(self.spaces.items())}

    def __eq__(self, other):
        return isinstance(other, SubGrid) and self.spaces == other.spaces


def algebra_data(field, dim, table, unit_vec, label="*"):
    """One-object MonadGrid from structure constants.

    table[i][j] is the product of basis i and basis j as a dense list.
    """
    window = IndexWindow([0])
    cells = {(0, 0): [f"{label}{i}" for i in range(dim)]}
    comp = {(0, 0, 0): {(i, j): _sparse(table[i][j], field)
                        for i in range(dim) for j in range(dim)
                        if any(c != 0 for c in table[i][j])}}
    units = {0: _sparse(unit_vec, field)}
    return MonadGrid(field, window, cells, comp, units)


def regular_module(T):
    """T acting on itself with all cells stacked per source label x.

    Returns a dict x -> ModuleGrid whose spaces are M_x(y) = T(y, x).
    """
    out = {}
    for x in T.window.indices:
        spaces = {y: T.cells.get((y, x), []) for y in T.window.indices}
        act = {(z, y): T.comp.get((z, y, x), {})
               for z in T.window.indices for y in T.window.indices}
        out[x] = ModuleGrid(T, spaces, act)
    return out


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

def left_ideal_closure(T, generators):
    """Smallest per-cell family containing the generators, closed under left
    composition by T within the window.

    ``generators``: dict cell (y,x) -> list of sparse vectors.  The result is
    flagged window_relative (a larger window can only enlarge it).
    """
    F = T.field
    labels = T.window.indices
    spans = {}
    for (y, x) in T.cells:
        dim = T.dim(y, x)
        vecs = [_dense(v, dim, F) for v in generators.get((y, x), [])]
        spans[(y, x)] = Subspace.from_vectors(F, dim, vecs)
    changed = True
    while changed:
        changed = False
        for (y, x), sp in list(spans.items()):
            if sp.dim == 0:
                continue
            for z in labels:
                if T.dim(z, y) == 0:
                    continue
                tgt = spans[(z, x)]
                new_vecs = []
                for i in range(T.dim(z, y)):
                    for bv in sp.basis_vectors():
                        img = T.compose_vec(z, y, x, {i: F.one},
                                            _sparse(bv, F))
                        dense = _dense(img, T.dim(z, x), F)
                        if not tgt.member(dense):
                            new_vecs.append(dense)
                if new_vecs:
                    spans[(z, x)] = tgt.sum(Subspace.from_vectors(
                        F, T.dim(z, x), new_vecs))
                    changed = True
    return SubGrid(spans, window_relative=True,
                   cap=T.window.intermediate_cap)


def is_left_ideal(T, J):
    """Check closure of J under left composition by T basis elements."""
    F = T.field
    labels = T.window.indices
    for (y, x), sp in J.spaces.items():
        for z in labels:
            if T.dim(z, y) == 0 or sp.dim == 0:
                continue
            tgt = J.spaces.get((z, x))
            for i in range(T.dim(z, y)):
                for bv in sp.basis_vectors():
                    img = T.compose_vec(z, y, x, {i: F.one}, _sparse(bv, F))
                    if tgt is None or not tgt.member(
                            _dense(img, T.dim(z, x), F)):
                        return False
    return True


def idealizer(T, J):
    """The largest sub-monad of T containing J as a two-sided ideal.

    For a left ideal J the defining condition per cell (y,x) reduces to
    J(z,y) o f  being inside  J(z,x)  for every waypoint z in the window.
    """
    if not is_left_ideal(T, J):
        raise NotALeftIdeal("idealizer requires a left ideal")
    F = T.field
    labels = T.window.indices
    out = {}
    for (y, x) in T.cells:
        dim = T.dim(y, x)
        if dim == 0:
            out[(y, x)] = Subspace.zero_space(F, dim)
            continue
        rows = []
        for z in labels:
            jzy = J.spaces.get((z, y))
            if jzy is None or jzy.dim == 0:
                continue
            jzx = J.spaces.get((z, x))
            tdim = T.dim(z, x)
            for u in jzy.basis_vectors():
                su = _sparse(u, F)
                # row block: f |-> residue of u o f modulo J(z,x)
                cols = []
                for i in range(dim):
                    img = T.compose_vec(z, y, x, su, {i: F.one})
                    res = jzx.reduce(_dense(img, tdim, F))
                    cols.append(res)
                # each coordinate of the residue is one linear condition
                for coord in range(tdim):
                    row = [cols[i][coord] for i in range(dim)]
                    if any(c != 0 for c in row):
                        rows.append(row)
        if rows:
            out[(y, x)] = kernel(Mat.from_rows(F, rows, cols=dim))
        else:
            out[(y, x)] = Subspace.full(F, dim)
    return SubGrid(out, window_relative=True, cap=T.window.intermediate_cap)


# ---------------------------------------------------------------------------
# eigenmonads and the canonical bimodule
# ---------------------------------------------------------------------------

class QuotientCell:
    """A quotient of a based cell by a Subspace, with deterministic basis.

    The quotient basis is the set of non-pivot coordinates of the subspace's
    RREF; project() maps an ambient dense vector to quotient coordinates and
    lift() chooses the coordinate representative.
    """

    def __init__(self, sub):
        self.sub = sub
        self.field = sub.field
        self.ambient_dim = sub.ambient_dim
        self.free = [j for j in range(sub.ambient_dim)
                     if j not in sub.pivots]

    @property
    def dim(self):
        return len(self.free)

    def project(self, dense_vec):
        red = self.sub.reduce(dense_vec)
        return [red[j] for j in self.free]

    def lift(self, qcoords):
        F = self.field
        v = [F.zero] * self.ambient_dim
        for j, c in zip(self.free, qcoords):
            v[j] = c
        return v


class Eigenmonad:
    """The eigenmonad E = I_T(J)/J together with the canonical bimodule data.

    Attributes:
      grid      - the MonadGrid of E (cells indexed like T)
      lifts     - per cell, the list of ambient lift vectors of the E basis
      quotient  - per cell, a QuotientCell for T(y,x)/J(y,x) (the bimodule)
    """

    def __init__(self, T, J, I, grid, lifts, quotient):
        self.T = T
        self.J = J
        self.I = I
        self.grid = grid
        self.lifts = lifts
        self.quotient = quotient

    def project_to_E(self, cell, dense_vec):
        """Express a vector of I(cell), mod J, in the E basis."""
        F = self.T.field
        red = self.J.spaces[cell].reduce(dense_vec)
        lifts = self.lifts[cell]
        if not lifts:
            if any(x != 0 for x in red):
                raise ValueError("vector not in I mod J")
            return {}
        # solve red = sum c_i * reduced-lift_i ; the reduced lifts are
        # linearly independent by construction
        mat_rows = [self.J.spaces[cell].reduce(l) for l in lifts]
        aug = [row + [red[i]] for i, row in
               enumerate(list(map(list, zip(*mat_rows))))]
        R, piv = rref(Mat.from_rows(F, aug, cols=len(lifts) + 1))
        coeffs = {}
        ncols = len(lifts)
        for r, p in zip(R.entries, piv):
            if p == ncols:
                raise ValueError("vector not in I mod J")
            coeffs[p] = r[ncols]
        return {i: c for i, c in coeffs.items() if c != 0}


def eigenmonad(T, J):
    """Compute E_T(J) = I_T(J)/J as a MonadGrid plus bimodule data."""
    F = T.field
    I = idealizer(T, J)
    lifts = {}
    cells = {}
    for cell in T.cells:
        sub = J.spaces[cell]
        chosen = []
        seen = Subspace.zero_space(F, T.dim(*cell))
        for v in I.spaces[cell].basis_vectors():
            red = sub.reduce(v)
            if any(x != 0 for x in red) and not seen.member(red):
                chosen.append(red)
                seen = seen.sum(Subspace.from_vectors(F, len(red), [red]))
        lifts[cell] = chosen
        cells[cell] = [f"q{i}" for i in range(len(chosen))]
    quotient = {cell: QuotientCell(J.spaces[cell]) for cell in T.cells}
    em = Eigenmonad(T, J, I, None, lifts, quotient)

    def compose_fn(z, y, x, bi, bj):
        i = int(bi[1:])
        j = int(bj[1:])
        a = _sparse(lifts[(z, y)][i], F)
        b = _sparse(lifts[(y, x)][j], F)
        img = T.compose_vec(z, y, x, a, b)
        coeffs = em.project_to_E((z, x), _dense(img, T.dim(z, x), F))
        return {f"q{k}": c for k, c in coeffs.items()}

    def unit_fn(x):
        u = T.units.get(x, {})
        coeffs = em.project_to_E((x, x), _dense(u, T.dim(x, x), F))
        return {f"q{k}": c for k, c in coeffs.items()}

    em.grid = MonadGrid.from_compose(F, T.window, cells, compose_fn, unit_fn)
    return em


def quotient_bimodule_modules(em):
    """The left T-modules (T/J)(-, x) for each window label x."""
    T = em.T
    F = T.field
    out = {}
    for x in T.window.indices:
        spaces = {}
        act = {}
        for y in T.window.indices:
            q = em.quotient[(y, x)]
            spaces[y] = [f"c{i}" for i in range(q.dim)]
        for z in T.window.indices:
            for y in T.window.indices:
                qy = em.quotient[(y, x)]
                qz = em.quotient[(z, x)]
                tensor = {}
                for i in range(T.dim(z, y)):
                    for j in range(qy.dim):
                        lift = qy.lift([F.one if jj == j else F.zero
                                        for jj in range(qy.dim)])
                        img = T.compose_vec(z, y, x, {i: F.one},
                                            _sparse(lift, F))
                        proj = qz.project(_dense(img, T.dim(z, x), F))
                        sp = _sparse(proj, F)
                        if sp:
                            tensor[(i, j)] = sp
                act[(z, y)] = tensor
        out[x] = ModuleGrid(T, spaces, act)
    return out


# ---------------------------------------------------------------------------
# vanishing modules, Hom, annihilators
# ---------------------------------------------------------------------------

def vanishing_module(T, J, M):
    """V_J(M)(x) = {v in M(x) : J(y,x) acts by zero for all y}."""
    F = T.field
    out = {}
    for x in T.window.indices:
        dim = M.dim(x)
        kers = []
        for y in T.window.indices:
            sp = J.spaces.get((y, x))
            if sp is None or sp.dim == 0:
                continue
            for u in sp.basis_vectors():
                mat = M.action_matrix(y, x, _sparse(u, F))
                kers.append(kernel(mat))
        out[x] = intersect_many(kers, F, dim)
    return SubGrid(out, window_relative=True, cap=T.window.intermediate_cap)


def hom_modules(M, N):
    """The space of T-module homomorphisms M -> N as one flat Subspace.

    Unknowns are the stacked matrices phi_x; constraints phi_y(t |> v) =
    t |> phi_x(v) over all window cells and basis pairs.
    """
    T = M.T
    F = T.field
    labels = T.window.indices
    offs = {}
    total = 0
    for x in labels:
        offs[x] = total
        total += N.dim(x) * M.dim(x)
    rows = []
    for y in labels:
        for x in labels:
            if T.dim(y, x) == 0:
                continue
            for ti in range(T.dim(y, x)):
                t = {ti: F.one}
                for mj in range(M.dim(x)):
                    tv = M.act_vec(y, x, t, {mj: F.one})
                    for out_coord in range(N.dim(y)):
                        row = [F.zero] * total
                        # phi_y applied to t|>v, coordinate out_coord:
                        for k, c in tv.items():
                            row[offs[y] + out_coord * M.dim(y) + k] = \
                                F.add(row[offs[y] + out_coord * M.dim(y) + k], c)
                        # minus t |> phi_x(v):
                        for nk in range(N.dim(x)):
                            img = N.act_vec(y, x, t, {nk: F.one})
                            c = img.get(out_coord, F.zero)
                            if c != 0:
                                idx = offs[x] + nk * M.dim(x) + mj
                                row[idx] = F.sub(row[idx], c)
                        if any(c != 0 for c in row):
                            rows.append(row)
    if not rows:
        return Subspace.full(F, total)
    return kernel(Mat.from_rows(F, rows, cols=total))


def annihilator(T, M):
    """Per cell (y,x): the kernel of the action map T(y,x) -> Hom(M(x), M(y))."""
    F = T.field
    out = {}
    for (y, x) in T.cells:
        dim = T.dim(y, x)
        rows = []
        for j in range(M.dim(x)):
            for coord in range(M.dim(y)):
                row = []
                for i in range(dim):
                    img = M.act_vec(y, x, {i: F.one}, {j: F.one})
                    row.append(img.get(coord, F.zero))
                if any(c != 0 for c in row):
                    rows.append(row)
        out[(y, x)] = kernel(Mat.from_rows(F, rows, cols=dim)) if rows \
            else Subspace.full(F, dim)
    return SubGrid(out, window_relative=True, cap=T.window.intermediate_cap)


# ---------------------------------------------------------------------------
# balanced tensor over E and adjunction checks
# ---------------------------------------------------------------------------

class BalancedTensor:
    """(T/J tensor_E N) as a left T-module, with slot bookkeeping."""

    def __init__(self, em, N):
        self.em = em
        self.N = N
        T = em.T
        F = T.field
        E = em.grid
        self.slots = {}     # y -> list of (x, qi, nj)
        self.quot = {}      # y -> QuotientCell of the balancing subspace
        labels = T.window.indices
        for y in labels:
            slots = []
            for x in labels:
                q = em.quotient[(y, x)]
                for qi in range(q.dim):
                    for nj in range(N.dim(x)):
                        slots.append((x, qi, nj))
            self.slots[y] = slots
            index = {s: i for i, s in enumerate(slots)}
            bal = []
            for x in labels:
                for w in labels:
                    if E.dim(x, w) == 0:
                        continue
                    qx = em.quotient[(y, x)]
                    qw = em.quotient[(y, w)]
                    for ei in range(E.dim(x, w)):
                        elift = _sparse(em.lifts[(x, w)][ei], F)
                        for qi in range(qx.dim):
                            # right action: (q o e) in (T/J)(y, w)
                            qlift = qx.lift([F.one if jj == qi else F.zero
                                             for jj in range(qx.dim)])
                            img = T.compose_vec(y, x, w, _sparse(qlift, F),
                                                elift)
                            qe = qw.project(_dense(img, T.dim(y, w), F))
                            for nj in range(N.dim(w)):
                                vec = [F.zero] * len(slots)
                                for k, c in enumerate(qe):
                                    if c != 0:
                                        vec[index[(w, k, nj)]] = c
                                # minus q tensor (e |> n)
                                en = N.act_vec(x, w, {ei: F.one},
                                               {nj: F.one})
                                for k, c in en.items():
                                    idx = index[(x, qi, k)]
                                    vec[idx] = F.sub(vec[idx], c)
                                if any(c != 0 for c in vec):
                                    bal.append(vec)
            sub = Subspace.from_vectors(F, len(slots), bal)
            self.quot[y] = QuotientCell(sub)

    def module(self):
        """The induced left T-module structure on the quotients."""
        em = self.em
        T = em.T
        F = T.field
        labels = T.window.indices
        spaces = {y: [f"t{i}" for i in range(self.quot[y].dim)]
                  for y in labels}
        act = {}
        for z in labels:
            for y in labels:
                tensor = {}
                qz = self.quot[z]
                qy = self.quot[y]
                indexz = {s: i for i, s in enumerate(self.slots[z])}
                for ti in range(T.dim(z, y)):
                    for j in range(qy.dim):
                        big = qy.lift([F.one if jj == j else F.zero
                                       for jj in range(qy.dim)])
                        # act slotwise: t |> (q tensor n) = (t o q) tensor n
                        acc = [F.zero] * len(self.slots[z])
                        for si, c in enumerate(big):
                            if c == 0:
                                continue
                            (x, qi, nj) = self.slots[y][si]
                            qcy = em.quotient[(y, x)]
                            qcz = em.quotient[(z, x)]
                            qlift = qcy.lift([F.one if jj == qi else F.zero
                                              for jj in range(qcy.dim)])
                            img = T.compose_vec(z, y, x, {ti: F.one},
                                                _sparse(qlift, F))
                            proj = qcz.project(_dense(img, T.dim(z, x), F))
                            for k, cc in enumerate(proj):
                                if cc != 0:
                                    idx = indexz[(x, k, nj)]
                                    acc[idx] = F.add(acc[idx], F.mul(c, cc))
                        out = qz.project(acc)
                        sp = _sparse(out, F)
                        if sp:
                            tensor[(ti, j)] = sp
                act[(z, y)] = tensor
        return ModuleGrid(T, spaces, act)


def tensor_over_E(em, N):
    """The balanced tensor (T/J) tensor_E N as a left T-module."""
    return BalancedTensor(em, N).module()


def vanishing_as_E_module(em, M, V=None):
    """The vanishing module V_J(M) as a left module over the eigenmonad.

    Returns (ModuleGrid over em.grid, per-label basis vectors inside M).
    """
    T = em.T
    F = T.field
    if V is None:
        V = vanishing_module(T, em.J, M)
    E = em.grid
    spaces = {x: [f"v{i}" for i in range(V.spaces[x].dim)]
              for x in T.window.indices}
    act = {}
    for y in T.window.indices:
        for x in T.window.indices:
            tensor = {}
            vy = V.spaces[y]
            vx = V.spaces[x]
            for ei in range(E.dim(y, x)):
                lift = _sparse(em.lifts[(y, x)][ei], F)
                for j, bv in enumerate(vx.basis_vectors()):
                    img = M.act_vec(y, x, lift, _sparse(bv, F))
                    dense = _dense(img, M.dim(y), F)
                    coords = vy.coords(dense)
                    sp = _sparse(coords, F)
                    if sp:
                        tensor[(ei, j)] = sp
            act[(y, x)] = tensor
    return ModuleGrid(E, spaces, act), V


def adjunction_checks(em, M, N):
    """Unit/counit checks of the eigenmonad adjunction.

    counit_epi: is the evaluation  T/J tensor_E V_J(M) -> M  surjective per
    cell?  unit_mono: is  N -> V_J(T/J tensor_E N),  n |-> [1] tensor n,
    injective per cell?
    """
    T = em.T
    F = T.field
    labels = T.window.indices
    # counit: image of { lift(q) |> v : q in (T/J)(y,x), v in V(x) }
    V = vanishing_module(T, em.J, M)
    counit_epi = True
    for y in labels:
        vecs = []
        for x in labels:
            q = em.quotient[(y, x)]
            for qi in range(q.dim):
                lift = q.lift([F.one if jj == qi else F.zero
                               for jj in range(q.dim)])
                for v in V.spaces[x].basis_vectors():
                    img = M.act_vec(y, x, _sparse(lift, F), _sparse(v, F))
                    vecs.append(_dense(img, M.dim(y), F))
        sp = Subspace.from_vectors(F, M.dim(y), vecs)
        if sp.dim != M.dim(y):
            counit_epi = False
    # unit: N(x) -> (T/J tensor_E N)(x), n |-> class(unit) tensor n
    bt = BalancedTensor(em, N)
    unit_mono = True
    for x in labels:
        if N.dim(x) == 0:
            continue
        rows = []
        qxx = em.quotient[(x, x)]
        ucls = qxx.project(_dense(T.units.get(x, {}), T.dim(x, x), F))
        index = {s: i for i, s in enumerate(bt.slots[x])}
        for nj in range(N.dim(x)):
            vec = [F.zero] * len(bt.slots[x])
            for k, c in enumerate(ucls):
                if c != 0:
                    vec[index[(x, k, nj)]] = c
            rows.append(bt.quot[x].project(vec))
        mat = Mat.from_rows(F, rows, cols=bt.quot[x].dim) if rows else None
        if mat is not None:
            # injective iff rank = N.dim(x)
            _, piv = rref(mat)
            if len(piv) != N.dim(x):
                unit_mono = False
    return {"counit_epi": counit_epi, "unit_mono": unit_mono}


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _scalar_str(c):
    return str(c)


def _scalar_parse(field, s):
    if field.p == 0:
        from fractions import Fraction
        return Fraction(s)
    return int(s) % field.p


def grid_to_json(T):
    """Serialize a MonadGrid to the documented JSON schema (a dict)."""
    doc = {
        "field": T.field.p,
        "window": {"indices": list(T.window.indices),
                   "intermediate_cap": T.window.intermediate_cap},
        "cells": [{"from": x, "to": y, "dim": len(bs),
                   "basis_labels": [str(b) for b in bs]}
                  for (y, x), bs in sorted(T.cells.items())],
        "comp": [{"z": z, "y": y, "x": x,
                  "tensor": [[i, j, col, _scalar_str(c)]
                             for (i, j), res in sorted(tensor.items())
                             for col, c in sorted(res.items())]}
                 for (z, y, x), tensor in sorted(T.comp.items())],
        "units": {str(x): [[i, _scalar_str(c)] for i, c in sorted(u.items())]
                  for x, u in T.units.items()},
    }
    return doc


def grid_to_json_str(T):
    return json.dumps(grid_to_json(T), sort_keys=True)


def grid_from_json(doc):
    field = Field(doc["field"])
    window = IndexWindow(doc["window"]["indices"],
                         doc["window"]["intermediate_cap"])
    cells = {(c["to"], c["from"]): list(c["basis_labels"])
             for c in doc["cells"]}
    comp = {}
    for entry in doc["comp"]:
        tensor = {}
        for i, j, col, c in entry["tensor"]:
            tensor.setdefault((i, j), {})[col] = _scalar_parse(field, c)
        comp[(entry["z"], entry["y"], entry["x"])] = tensor
    units = {int(x): {i: _scalar_parse(field, c) for i, c in u}
             for x, u in doc["units"].items()}
    return MonadGrid(field, window, cells, comp, units)


def grid_from_json_str(s):
    return grid_from_json(json.loads(s))
