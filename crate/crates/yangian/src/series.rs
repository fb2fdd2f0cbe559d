//! Truncated generating series with coefficients in the Yangian.
//!
//! A [`Series`] is a polynomial in inverse powers of up to three formal
//! variables u, v, w, truncated at a fixed order R per variable: the slot
//! (r, s, …) stores the coefficient of u^{-r} v^{-s} ….  Slots carry an
//! exactness flag: operations that would need data beyond the truncation
//! box (chiefly multiplying by u − v, which shifts exponents down) mark the
//! affected slots inexact instead of silently producing wrong values, and
//! [`clear_denominator_compare`] only judges slots exact on both sides.
//!
//! [`MatrixSeries`] is a dense matrix of series sharing variables and
//! order, with Neumann-series inversion for matrices of the form I + N
//! (N of positive total degree) and bordered Schur complements — the
//! matrix form of quasideterminants — driving the Gauss decomposition.

use std::collections::{BTreeMap, BTreeSet};

use crate::context::AlgebraContext;
use crate::error::YangianError;
use crate::field::FieldElement;
use crate::pbw::Element;

/// A formal variable of a generating series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    U,
    V,
    W,
}

impl Var {
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Var::U => 0,
            Var::V => 1,
            Var::W => 2,
        }
    }

    pub fn label(self) -> char {
        match self {
            Var::U => 'u',
            Var::V => 'v',
            Var::W => 'w',
        }
    }
}

/// A set of series variables (bitmask over u, v, w).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VarSet(u8);

impl VarSet {
    pub fn empty() -> VarSet {
        VarSet(0)
    }

    pub fn single(v: Var) -> VarSet {
        VarSet(1 << v.index())
    }

    pub fn pair(a: Var, b: Var) -> VarSet {
        VarSet::single(a).union(VarSet::single(b))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn count(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        [Var::U, Var::V, Var::W]
            .into_iter()
            .filter(move |v| self.contains(*v))
    }
}

/// Exponent tuple: position k holds the power of the k-th variable's
/// inverse (u^{-e[0]} v^{-e[1]} w^{-e[2]}).
pub type Exps = [usize; 3];

/// A truncated series.  Zero coefficients are not stored; `inexact` lists
/// slots whose value is unknown (always stored as zero in `coeffs`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    vars: VarSet,
    order: usize,
    coeffs: BTreeMap<Exps, Element>,
    inexact: BTreeSet<Exps>,
}

impl Series {
    pub fn zero(vars: VarSet, order: usize) -> Series {
        Series {
            vars,
            order,
            coeffs: BTreeMap::new(),
            inexact: BTreeSet::new(),
        }
    }

    /// The constant series with value `e`.
    pub fn constant(e: Element, vars: VarSet, order: usize) -> Series {
        let mut s = Series::zero(vars, order);
        s.set([0, 0, 0], e);
        s
    }

    /// The generating series of the (i, j) matrix entry:
    /// δ_{i,j} + Σ_{r=1}^{R} t_{i,j}^{(r)} x^{-r} in the given variable.
    pub fn matrix_entry(ctx: &AlgebraContext, i: usize, j: usize, var: Var, order: usize) -> Series {
        let mut s = Series::zero(VarSet::single(var), order);
        if i == j {
            s.set([0, 0, 0], Element::scalar(ctx, 1));
        }
        for r in 1..=order {
            let mut e = [0, 0, 0];
            e[var.index()] = r;
            s.set(e, Element::generator(ctx, i, j, r));
        }
        s
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// True when the exponent tuple lies inside the truncation box.
    fn in_box(&self, e: Exps) -> bool {
        for v in [Var::U, Var::V, Var::W] {
            let k = e[v.index()];
            if k > 0 && !self.vars.contains(v) {
                return false;
            }
            if k > self.order {
                return false;
            }
        }
        true
    }

    /// Coefficient at a slot (zero if unset).  Inexact slots also read as
    /// zero; consult [`Series::is_exact`] before trusting the value.
    pub fn get(&self, e: Exps) -> Element {
        self.coeffs.get(&e).cloned().unwrap_or_else(Element::zero)
    }

    pub fn is_exact(&self, e: Exps) -> bool {
        !self.inexact.contains(&e)
    }

    pub fn has_inexact(&self) -> bool {
        !self.inexact.is_empty()
    }

    /// Set a slot (internal building block; drops zeros).
    pub fn set(&mut self, e: Exps, value: Element) {
        debug_assert!(self.in_box(e), "slot {e:?} outside the truncation box");
        if value.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, value);
        }
    }

    pub fn mark_inexact(&mut self, e: Exps) {
        debug_assert!(self.in_box(e));
        self.coeffs.remove(&e);
        self.inexact.insert(e);
    }

    /// Nonzero or inexact slots — everything that can influence a product.
    fn active_slots(&self) -> BTreeSet<Exps> {
        let mut s: BTreeSet<Exps> = self.coeffs.keys().copied().collect();
        s.extend(self.inexact.iter().copied());
        s
    }

    /// View this series inside a larger variable set (constant in the new
    /// variables; all slots stay exact).
    pub fn extend_vars(&self, vars: VarSet) -> Series {
        assert!(self.vars.is_subset(vars), "extend_vars cannot drop variables");
        let mut out = self.clone();
        out.vars = vars;
        out
    }

    /// Common parity of all nonzero coefficients, if they agree.
    pub fn parity(&self, ctx: &AlgebraContext) -> Option<u8> {
        let mut result: Option<u8> = None;
        for e in self.coeffs.values() {
            let p = e.parity(ctx)?;
            match result {
                None => result = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(result.unwrap_or(0))
    }

    pub fn add(&self, ctx: &AlgebraContext, other: &Series) -> Series {
        let vars = self.vars.union(other.vars);
        assert_eq!(self.order, other.order, "series orders differ");
        let mut out = Series::zero(vars, self.order);
        let slots: BTreeSet<Exps> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        for e in slots {
            out.set(e, self.get(e).add(ctx, &other.get(e)));
        }
        for &e in self.inexact.iter().chain(other.inexact.iter()) {
            out.mark_inexact(e);
        }
        out
    }

    pub fn sub(&self, ctx: &AlgebraContext, other: &Series) -> Series {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn neg(&self, ctx: &AlgebraContext) -> Series {
        self.scale(ctx, ctx.field().neg(1))
    }

    pub fn scale(&self, ctx: &AlgebraContext, c: FieldElement) -> Series {
        let mut out = Series::zero(self.vars, self.order);
        for (&e, elem) in &self.coeffs {
            out.set(e, elem.scale(ctx, c));
        }
        // Unknown · nonzero scalar is still unknown; unknown · 0 is 0.
        if ctx.field().from_u64(c) != 0 {
            out.inexact = self.inexact.clone();
        }
        out
    }

    /// Multiply every coefficient by an element on the left.
    pub fn elem_mul_left(&self, ctx: &AlgebraContext, a: &Element) -> Series {
        let mut out = Series::zero(self.vars, self.order);
        for (&e, elem) in &self.coeffs {
            out.set(e, a.mul(ctx, elem));
        }
        if !a.is_zero() {
            out.inexact = self.inexact.clone();
        }
        out
    }

    /// Multiply every coefficient by an element on the right.
    pub fn elem_mul_right(&self, ctx: &AlgebraContext, a: &Element) -> Series {
        let mut out = Series::zero(self.vars, self.order);
        for (&e, elem) in &self.coeffs {
            out.set(e, elem.mul(ctx, a));
        }
        if !a.is_zero() {
            out.inexact = self.inexact.clone();
        }
        out
    }

    /// Product.  Contributions falling outside the box are dropped (they
    /// do not affect represented slots); inexact slots poison every slot
    /// they could contribute to.
    pub fn mul(&self, ctx: &AlgebraContext, other: &Series) -> Series {
        assert_eq!(self.order, other.order, "series orders differ");
        let vars = self.vars.union(other.vars);
        let mut out = Series::zero(vars, self.order);
        let mut acc: BTreeMap<Exps, Element> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                let Some(e) = add_exps(ea, eb, self.order) else {
                    continue;
                };
                let prod = ca.mul(ctx, cb);
                let entry = acc.remove(&e).unwrap_or_else(Element::zero).add(ctx, &prod);
                acc.insert(e, entry);
            }
        }
        for (e, elem) in acc {
            out.set(e, elem);
        }
        for &ea in &self.inexact {
            for eb in other.active_slots() {
                if let Some(e) = add_exps(ea, eb, self.order) {
                    out.mark_inexact(e);
                }
            }
        }
        for &eb in &other.inexact {
            for ea in self.active_slots() {
                if let Some(e) = add_exps(ea, eb, self.order) {
                    out.mark_inexact(e);
                }
            }
        }
        out
    }

    /// Substitute x ↦ −x for one variable: slot e picks up (−1)^{e_var}.
    pub fn negate_var(&self, ctx: &AlgebraContext, var: Var) -> Series {
        let mut out = Series::zero(self.vars, self.order);
        for (&e, elem) in &self.coeffs {
            out.set(e, elem.scale(ctx, ctx.field().sign((e[var.index()] % 2) as u8)));
        }
        out.inexact = self.inexact.clone();
        out
    }

    /// Rename a variable (substitution u ↦ v on a series not involving v).
    pub fn rename_var(&self, from: Var, to: Var) -> Series {
        if from == to {
            return self.clone();
        }
        assert!(self.vars.contains(from) && !self.vars.contains(to), "rename_var needs a fresh target variable");
        let mut vars = VarSet::empty();
        for v in self.vars.iter() {
            if v != from {
                vars = vars.union(VarSet::single(v));
            }
        }
        vars = vars.union(VarSet::single(to));
        let mut out = Series::zero(vars, self.order);
        let move_slot = |mut e: Exps| {
            e[to.index()] = e[from.index()];
            e[from.index()] = 0;
            e
        };
        for (&e, elem) in &self.coeffs {
            out.set(move_slot(e), elem.clone());
        }
        for &e in &self.inexact {
            out.mark_inexact(move_slot(e));
        }
        out
    }

    /// Multiply by (a − b) for two distinct variables.  Exponents shift
    /// down by one in a (resp. b); slots that would need data beyond the
    /// truncation box become inexact.  Any genuinely positive powers of a
    /// or b (from slots with zero exponent) fall outside the represented
    /// box and are dropped on both sides of any comparison.
    pub fn mul_diff(&self, ctx: &AlgebraContext, a: Var, b: Var) -> Series {
        assert_ne!(a, b);
        let vars = self.vars.union(VarSet::pair(a, b));
        let this = self.extend_vars(vars);
        let shifted = |var: Var| -> Series {
            let mut out = Series::zero(vars, this.order);
            for (&e, elem) in &this.coeffs {
                if e[var.index()] == 0 {
                    continue;
                }
                let mut d = e;
                d[var.index()] -= 1;
                out.set(d, elem.clone());
            }
            for &e in &this.inexact {
                if e[var.index()] == 0 {
                    continue;
                }
                let mut d = e;
                d[var.index()] -= 1;
                out.mark_inexact(d);
            }
            // The slot at the truncation edge would need the coefficient
            // just beyond the box: unknown.
            for e in enumerate_box(vars, this.order) {
                if e[var.index()] == this.order {
                    out.mark_inexact(e);
                }
            }
            out
        };
        shifted(a).sub(ctx, &shifted(b))
    }

    /// Inverse of a series with constant coefficient 1, by the Neumann sum
    /// Σ (1 − S)^k.
    pub fn invert(&self, ctx: &AlgebraContext) -> Result<Series, YangianError> {
        if self.get([0, 0, 0]) != Element::scalar(ctx, 1) || !self.is_exact([0, 0, 0]) {
            return Err(YangianError::SeriesNotUnital);
        }
        let one = Series::constant(Element::scalar(ctx, 1), self.vars, self.order);
        let n = one.sub(ctx, self); // positive total degree
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.order * self.vars.count().max(1) {
            power = power.mul(ctx, &n);
            acc = acc.add(ctx, &power);
        }
        Ok(acc)
    }

    /// Extract the coefficient of x^{-r} in one variable as a series in
    /// the remaining variables.
    pub fn coefficient(&self, var: Var, r: usize) -> Series {
        let mut vars = VarSet::empty();
        for v in self.vars.iter() {
            if v != var {
                vars = vars.union(VarSet::single(v));
            }
        }
        let mut out = Series::zero(vars, self.order);
        for (&e, elem) in &self.coeffs {
            if e[var.index()] == r {
                let mut d = e;
                d[var.index()] = 0;
                out.set(d, elem.clone());
            }
        }
        for &e in &self.inexact {
            if e[var.index()] == r {
                let mut d = e;
                d[var.index()] = 0;
                out.mark_inexact(d);
            }
        }
        out
    }

    /// Supercommutator of parity-homogeneous series:
    /// AB − (−1)^{parity(A)parity(B)} BA.
    pub fn supercommutator(&self, ctx: &AlgebraContext, other: &Series) -> Series {
        let pa = self.parity(ctx).expect("left series has mixed parity");
        let pb = other.parity(ctx).expect("right series has mixed parity");
        let sign = ctx.field().sign(pa & pb);
        self.mul(ctx, other)
            .sub(ctx, &other.mul(ctx, self).scale(ctx, sign))
    }
}

/// Componentwise exponent sum, `None` when outside the truncation box.
fn add_exps(a: Exps, b: Exps, order: usize) -> Option<Exps> {
    let mut e = [0usize; 3];
    for k in 0..3 {
        e[k] = a[k] + b[k];
        if e[k] > order {
            return None;
        }
    }
    Some(e)
}

/// All exponent tuples of the truncation box for a variable set.
pub fn enumerate_box(vars: VarSet, order: usize) -> Vec<Exps> {
    let ranges: Vec<usize> = [Var::U, Var::V, Var::W]
        .into_iter()
        .map(|v| if vars.contains(v) { order } else { 0 })
        .collect();
    let mut out = Vec::new();
    for eu in 0..=ranges[0] {
        for ev in 0..=ranges[1] {
            for ew in 0..=ranges[2] {
                out.push([eu, ev, ew]);
            }
        }
    }
    out
}

/// The divided difference (g(b) − g(a)) / (a − b) of a single-variable
/// series with zero constant term: slot (r, s) with r, s ≥ 1 holds
/// g^{(r+s−1)}; slots needing coefficients beyond the truncation order are
/// inexact.  (Expanding (x^{-m} in b) − (x^{-m} in a) over a − b gives
/// exactly Σ_{r+s=m+1} a^{-r} b^{-s}.)
pub fn divided_difference(g: &Series, a: Var, b: Var) -> Series {
    assert_eq!(g.vars.count(), 1, "divided_difference takes a one-variable series");
    let gv = g.vars.iter().next().unwrap();
    debug_assert!(g.get([0, 0, 0]).is_zero(), "divided_difference needs zero constant term");
    let order = g.order;
    let mut out = Series::zero(VarSet::pair(a, b), order);
    for r in 1..=order {
        for s in 1..=order {
            let m = r + s - 1;
            let mut e = [0, 0, 0];
            e[a.index()] = r;
            e[b.index()] = s;
            if m > order {
                out.mark_inexact(e);
                continue;
            }
            let mut src = [0, 0, 0];
            src[gv.index()] = m;
            if !g.is_exact(src) {
                out.mark_inexact(e);
            } else {
                let val = g.get(src);
                out.set(e, val);
            }
        }
    }
    out
}

/// Result of comparing two series slot by slot on the region exact in
/// both: the number of slots actually compared and the differing slots
/// with their differences.
#[derive(Debug, Clone)]
pub struct CompareOutcome {
    pub checked: usize,
    pub mismatches: Vec<(Exps, Element)>,
}

impl CompareOutcome {
    pub fn agreed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare two series wherever both are exact.  The name records the usage
/// pattern: identities with a 1/(a−b) factor are checked by multiplying
/// both sides by (a−b) first and then comparing here.
pub fn clear_denominator_compare(ctx: &AlgebraContext, lhs: &Series, rhs: &Series) -> CompareOutcome {
    let vars = lhs.vars.union(rhs.vars);
    assert_eq!(lhs.order, rhs.order, "series orders differ");
    let l = lhs.extend_vars(vars);
    let r = rhs.extend_vars(vars);
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for e in enumerate_box(vars, l.order) {
        if !l.is_exact(e) || !r.is_exact(e) {
            continue;
        }
        checked += 1;
        let diff = l.get(e).sub(ctx, &r.get(e));
        if !diff.is_zero() {
            mismatches.push((e, diff));
        }
    }
    CompareOutcome { checked, mismatches }
}

/// A dense matrix of series sharing one variable set and order.
/// Row/column indices are 1-based, matching the mathematics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSeries {
    rows: usize,
    cols: usize,
    entries: Vec<Series>,
}

impl MatrixSeries {
    pub fn zero(rows: usize, cols: usize, vars: VarSet, order: usize) -> MatrixSeries {
        MatrixSeries {
            rows,
            cols,
            entries: vec![Series::zero(vars, order); rows * cols],
        }
    }

    pub fn identity(ctx: &AlgebraContext, n: usize, vars: VarSet, order: usize) -> MatrixSeries {
        let mut m = MatrixSeries::zero(n, n, vars, order);
        for i in 1..=n {
            *m.entry_mut(i, i) = Series::constant(Element::scalar(ctx, 1), vars, order);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Series {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Series {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &mut self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn add(&self, ctx: &AlgebraContext, other: &MatrixSeries) -> MatrixSeries {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                *out.entry_mut(i, j) = self.entry(i, j).add(ctx, other.entry(i, j));
            }
        }
        out
    }

    pub fn sub(&self, ctx: &AlgebraContext, other: &MatrixSeries) -> MatrixSeries {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                *out.entry_mut(i, j) = self.entry(i, j).sub(ctx, other.entry(i, j));
            }
        }
        out
    }

    pub fn mul(&self, ctx: &AlgebraContext, other: &MatrixSeries) -> MatrixSeries {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let order = self.entries[0].order();
        let vars = self.entries[0].vars().union(other.entries[0].vars());
        let mut out = MatrixSeries::zero(self.rows, other.cols, vars, order);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = Series::zero(vars, order);
                for k in 1..=self.cols {
                    acc = acc.add(ctx, &self.entry(i, k).mul(ctx, other.entry(k, j)));
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        out
    }

    /// Select rows and columns by 1-based global indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> MatrixSeries {
        let order = self.entries[0].order();
        let vars = self.entries[0].vars();
        let mut out = MatrixSeries::zero(rows.len(), cols.len(), vars, order);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                *out.entry_mut(a + 1, b + 1) = self.entry(i, j).clone();
            }
        }
        out
    }

    /// Inverse of a square matrix of the form I + N with N of positive
    /// total degree, by the Neumann sum Σ (−N)^k.
    pub fn inverse(&self, ctx: &AlgebraContext) -> Result<MatrixSeries, YangianError> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let order = self.entries[0].order();
        let vars = self.entries[0].vars();
        let one = Element::scalar(ctx, 1);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                let c0 = self.entry(i, j).get([0, 0, 0]);
                let want_one = i == j;
                if (want_one && c0 != one) || (!want_one && !c0.is_zero()) {
                    return Err(YangianError::MatrixNotUnital);
                }
            }
        }
        let id = MatrixSeries::identity(ctx, self.rows, vars, order);
        let n = id.sub(ctx, self);
        let mut acc = id.clone();
        let mut power = id;
        for _ in 0..order * vars.count().max(1) {
            power = power.mul(ctx, &n);
            acc = acc.add(ctx, &power);
        }
        Ok(acc)
    }

    /// Apply a series transformation entrywise.
    pub fn map(&self, f: impl Fn(&Series) -> Series) -> MatrixSeries {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = f(e);
        }
        out
    }
}

/// The matrix T(x) = (t_{i,j}(x)) of generating series.
pub fn t_matrix(ctx: &AlgebraContext, var: Var, order: usize) -> MatrixSeries {
    let n = ctx.size();
    let mut m = MatrixSeries::zero(n, n, VarSet::single(var), order);
    for i in 1..=n {
        for j in 1..=n {
            *m.entry_mut(i, j) = Series::matrix_entry(ctx, i, j, var, order);
        }
    }
    m
}

/// The inverse matrix T(x)^{-1} = (t′_{i,j}(x)); its coefficients define
/// the primed generators t′^{(r)}_{i,j}.
pub fn tp_matrix(ctx: &AlgebraContext, var: Var, order: usize) -> MatrixSeries {
    t_matrix(ctx, var, order)
        .inverse(ctx)
        .expect("T(x) is unital by construction")
}

/// Bordered Schur complement — the matrix of quasideterminants
/// S_{r,c} = T_{r,c} − T_{r,≤k} (T_{≤k,≤k})^{-1} T_{≤k,c} over the chosen
/// border rows r and columns c, eliminating the leading k×k corner.
pub fn bordered_schur(
    ctx: &AlgebraContext,
    t: &MatrixSeries,
    k: usize,
    rows: &[usize],
    cols: &[usize],
) -> Result<MatrixSeries, YangianError> {
    let lead: Vec<usize> = (1..=k).collect();
    let corner = t.submatrix(&lead, &lead);
    let border = t.submatrix(rows, cols);
    if k == 0 {
        return Ok(border);
    }
    let inv = corner.inverse(ctx)?;
    let left = t.submatrix(rows, &lead);
    let right = t.submatrix(&lead, cols);
    Ok(border.sub(ctx, &left.mul(ctx, &inv).mul(ctx, &right)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Sequence01;
    use std::sync::Arc;

    fn ctx11(p: u64) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, 1, 1, Sequence01::parse("01").unwrap()).unwrap()
    }

    fn ctx21(p: u64) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, 2, 1, Sequence01::parse("010").unwrap()).unwrap()
    }

    #[test]
    fn scalar_series_inversion_round_trips() {
        let ctx = ctx11(7);
        let s = Series::matrix_entry(&ctx, 1, 1, Var::U, 3);
        let inv = s.invert(&ctx).unwrap();
        let prod = s.mul(&ctx, &inv);
        let one = Series::constant(Element::scalar(&ctx, 1), VarSet::single(Var::U), 3);
        assert!(clear_denominator_compare(&ctx, &prod, &one).agreed());
        let prod = inv.mul(&ctx, &s);
        assert!(clear_denominator_compare(&ctx, &prod, &one).agreed());
    }

    #[test]
    fn matrix_inverse_round_trips() {
        for ctx in [ctx11(5), ctx21(3)] {
            let order = 3;
            let t = t_matrix(&ctx, Var::U, order);
            let tp = t.mul(&ctx, &tp_matrix(&ctx, Var::U, order));
            let id = MatrixSeries::identity(&ctx, ctx.size(), VarSet::single(Var::U), order);
            for i in 1..=ctx.size() {
                for j in 1..=ctx.size() {
                    let cmp = clear_denominator_compare(&ctx, tp.entry(i, j), id.entry(i, j));
                    assert!(cmp.agreed(), "T·T⁻¹ ≠ I at ({i},{j}), p={}", ctx.p());
                    assert!(cmp.checked > 0);
                }
            }
            let pt = tp_matrix(&ctx, Var::U, order).mul(&ctx, &t);
            for i in 1..=ctx.size() {
                for j in 1..=ctx.size() {
                    assert!(clear_denominator_compare(&ctx, pt.entry(i, j), id.entry(i, j)).agreed());
                }
            }
        }
    }

    #[test]
    fn primed_coefficients_match_hand_formulas() {
        // t′^{(1)}_{i,j} = −t^{(1)}_{i,j};
        // t′^{(2)}_{i,j} = −t^{(2)}_{i,j} + Σ_k t^{(1)}_{i,k} t^{(1)}_{k,j}.
        let ctx = ctx21(5);
        let tp = tp_matrix(&ctx, Var::U, 3);
        for i in 1..=3 {
            for j in 1..=3 {
                let lvl1 = tp.entry(i, j).get([1, 0, 0]);
                assert_eq!(lvl1, Element::generator(&ctx, i, j, 1).neg(&ctx));
                let lvl2 = tp.entry(i, j).get([2, 0, 0]);
                let mut expect = Element::generator(&ctx, i, j, 2).neg(&ctx);
                for k in 1..=3 {
                    expect = expect.add(
                        &ctx,
                        &Element::generator(&ctx, i, k, 1).mul(&ctx, &Element::generator(&ctx, k, j, 1)),
                    );
                }
                assert_eq!(lvl2, expect, "t′^(2) mismatch at ({i},{j})");
            }
        }
    }

    #[test]
    fn series_rtt_relation_holds() {
        // (u − v)[t_{i,j}(u), t_{k,l}(v)]
        //   = (−1)^{|i||j|+|i||k|+|j||k|} (t_{k,j}(u)t_{i,l}(v) − t_{k,j}(v)t_{i,l}(u)).
        let ctx = ctx11(5);
        let order = 3;
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    for l in 1..=2 {
                        let tu = |a, b| Series::matrix_entry(&ctx, a, b, Var::U, order);
                        let tv = |a, b| Series::matrix_entry(&ctx, a, b, Var::V, order);
                        let lhs = tu(i, j)
                            .supercommutator(&ctx, &tv(k, l))
                            .mul_diff(&ctx, Var::U, Var::V);
                        let sign = ctx.field().sign(
                            ctx.parity_of_index(i) * ctx.parity_of_index(j)
                                + ctx.parity_of_index(i) * ctx.parity_of_index(k)
                                + ctx.parity_of_index(j) * ctx.parity_of_index(k),
                        );
                        let rhs = tu(k, j)
                            .mul(&ctx, &tv(i, l))
                            .sub(&ctx, &tv(k, j).mul(&ctx, &tu(i, l)))
                            .scale(&ctx, sign);
                        let cmp = clear_denominator_compare(&ctx, &lhs, &rhs);
                        assert!(cmp.agreed(), "series RTT fails at ({i},{j}),({k},{l}): {:?}", cmp.mismatches.len());
                        assert!(cmp.checked > 0);
                    }
                }
            }
        }
    }

    #[test]
    fn divided_difference_self_test() {
        // H = (g(v) − g(u))/(u − v) built slot-wise satisfies
        // (u − v) · H = g(v) − g(u) on the exact region.
        let ctx = ctx11(7);
        let order = 3;
        let mut g = Series::zero(VarSet::single(Var::U), order);
        for r in 1..=order {
            let mut e = [0, 0, 0];
            e[Var::U.index()] = r;
            g.set(e, Element::generator(&ctx, 1, 1, r));
        }
        let h = divided_difference(&g, Var::U, Var::V);
        let lhs = h.mul_diff(&ctx, Var::U, Var::V);
        let rhs = g.rename_var(Var::U, Var::V).extend_vars(VarSet::pair(Var::U, Var::V)).sub(
            &ctx,
            &g.extend_vars(VarSet::pair(Var::U, Var::V)),
        );
        let cmp = clear_denominator_compare(&ctx, &lhs, &rhs);
        assert!(cmp.agreed(), "divided difference mismatch");
        assert!(cmp.checked > 0);
    }

    #[test]
    fn mul_diff_marks_truncation_edge_inexact() {
        let ctx = ctx11(5);
        let s = Series::matrix_entry(&ctx, 1, 2, Var::U, 2);
        let shifted = s.mul_diff(&ctx, Var::U, Var::V);
        // Slots with e_u = R or e_v = R depend on data beyond the box.
        assert!(!shifted.is_exact([2, 0, 0]));
        assert!(!shifted.is_exact([0, 2, 0]));
        assert!(shifted.is_exact([1, 1, 0]));
    }

    #[test]
    fn inexact_slots_poison_products() {
        let ctx = ctx11(5);
        let vars = VarSet::single(Var::U);
        let mut a = Series::constant(Element::scalar(&ctx, 1), vars, 2);
        a.mark_inexact([1, 0, 0]);
        let b = Series::matrix_entry(&ctx, 1, 1, Var::U, 2);
        let prod = a.mul(&ctx, &b);
        assert!(prod.is_exact([0, 0, 0]));
        assert!(!prod.is_exact([1, 0, 0]));
        assert!(!prod.is_exact([2, 0, 0]));
    }

    #[test]
    fn compare_catches_mismatches() {
        let ctx = ctx11(5);
        let a = Series::matrix_entry(&ctx, 1, 2, Var::U, 2);
        let mut b = a.clone();
        b.set([2, 0, 0], Element::generator(&ctx, 2, 1, 1));
        let cmp = clear_denominator_compare(&ctx, &a, &b);
        assert_eq!(cmp.mismatches.len(), 1);
        assert_eq!(cmp.mismatches[0].0, [2, 0, 0]);
    }

    #[test]
    fn negate_and_rename_variables() {
        let ctx = ctx11(7);
        let s = Series::matrix_entry(&ctx, 1, 2, Var::U, 3);
        let n = s.negate_var(&ctx, Var::U);
        assert_eq!(n.get([1, 0, 0]), s.get([1, 0, 0]).neg(&ctx));
        assert_eq!(n.get([2, 0, 0]), s.get([2, 0, 0]));
        let r = s.rename_var(Var::U, Var::W);
        assert_eq!(r.get([0, 0, 2]), s.get([2, 0, 0]));
        assert!(r.vars().contains(Var::W) && !r.vars().contains(Var::U));
    }

    #[test]
    fn schur_complement_matches_direct_elimination() {
        // For T over (2|1), eliminating the leading 1×1 corner:
        // S_{b,c} = T_{b,c} − T_{b,1} T_{1,1}^{-1} T_{1,c}.
        let ctx = ctx21(5);
        let order = 2;
        let t = t_matrix(&ctx, Var::U, order);
        let s = bordered_schur(&ctx, &t, 1, &[2, 3], &[2, 3]).unwrap();
        let inv11 = t.entry(1, 1).invert(&ctx).unwrap();
        for (a, &i) in [2usize, 3].iter().enumerate() {
            for (b, &j) in [2usize, 3].iter().enumerate() {
                let direct = t.entry(i, j).sub(
                    &ctx,
                    &t.entry(i, 1).mul(&ctx, &inv11).mul(&ctx, t.entry(1, j)),
                );
                let cmp = clear_denominator_compare(&ctx, s.entry(a + 1, b + 1), &direct);
                assert!(cmp.agreed());
            }
        }
    }
}
