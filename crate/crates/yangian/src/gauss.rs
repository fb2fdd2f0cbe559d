//! Block Gauss decomposition of the generating matrix.
//!
//! For a composition μ = (μ_1, …, μ_n) of the matrix size, the generating
//! matrix factors as T(x) = F(x) · D(x) · E(x) with
//!
//! - D(x) block diagonal with blocks D_1, …, D_n,
//! - E(x) block upper unitriangular with blocks E_{a,b} (a < b),
//! - F(x) block lower unitriangular with blocks F_{b,a} (a < b).
//!
//! This module computes all blocks (plus the inverse-side chains Ẽ, F̃ that
//! appear in T(x)^{-1} = Ẽ(x) · D′(x) · F̃(x)) by two independent routes:
//!
//! - [`gauss_decompose`]: bordered Schur complements (quasideterminant
//!   formulas), with Ẽ/F̃ as alternating sums over subdivision chains;
//! - [`gauss_eliminate`]: sequential block elimination (block LDU), with
//!   Ẽ/F̃ read off from inverses of the assembled unitriangular matrices.
//!
//! The two routes must agree entry by entry; [`route_agreement`] checks this.
//! Further checks cover the multiplicative round trip back to T and T^{-1},
//! the one-step commutator recursion that generates distant blocks from
//! adjacent ones, the chain expansion of E′/F′ combinations, and the parity
//! pattern of all block coefficients.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::context::{AlgebraContext, Composition};
use crate::error::YangianError;
use crate::pbw::Element;
use crate::series::{
    enumerate_box, t_matrix, tp_matrix, MatrixSeries, Series, Var, VarSet,
};

/// Every block of the Gauss decomposition of T(x) for one composition μ,
/// computed up to a fixed truncation order in one formal variable.
pub struct GaussData {
    ctx: Arc<AlgebraContext>,
    mu: Composition,
    var: Var,
    order: usize,
    /// Diagonal blocks D_a, indexed by a − 1.
    d: Vec<MatrixSeries>,
    /// Inverses D′_a = D_a^{-1}, indexed by a − 1.
    dp: Vec<MatrixSeries>,
    /// Upper blocks E_{a,b}, keyed by (a, b) with a < b.
    e: BTreeMap<(usize, usize), MatrixSeries>,
    /// Lower blocks F_{b,a}, keyed by (b, a) with a < b.
    f: BTreeMap<(usize, usize), MatrixSeries>,
    /// Inverse-side upper chains Ẽ_{a,b}, keyed by (a, b) with a < b.
    et: BTreeMap<(usize, usize), MatrixSeries>,
    /// Inverse-side lower chains F̃_{b,a}, keyed by (b, a) with a < b.
    ft: BTreeMap<(usize, usize), MatrixSeries>,
}

/// 1-based global row/column indices covered by block `a` of `mu`.
fn block_indices(mu: &Composition, a: usize) -> Vec<usize> {
    let off = mu.offset(a);
    (off + 1..=off + mu.part(a)).collect()
}

/// Copy `src` into `dst` at the given global row/column positions.
fn write_block(dst: &mut MatrixSeries, rows: &[usize], cols: &[usize], src: &MatrixSeries) {
    assert_eq!(src.rows(), rows.len());
    assert_eq!(src.cols(), cols.len());
    for (bi, &gi) in rows.iter().enumerate() {
        for (bj, &gj) in cols.iter().enumerate() {
            *dst.entry_mut(gi, gj) = src.entry(bi + 1, bj + 1).clone();
        }
    }
}

/// All strictly increasing chains a = i_0 < i_1 < … < i_s = b.
fn chains(a: usize, b: usize) -> Vec<Vec<usize>> {
    let interior: Vec<usize> = (a + 1..b).collect();
    let mut out = Vec::new();
    for mask in 0..(1u32 << interior.len()) {
        let mut chain = vec![a];
        for (pos, &point) in interior.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                chain.push(point);
            }
        }
        chain.push(b);
        out.push(chain);
    }
    out
}

fn validate(ctx: &AlgebraContext, mu: &Composition) -> Result<(), YangianError> {
    if mu.total() != ctx.size() {
        return Err(YangianError::CompositionSum {
            parts: mu.parts().to_vec(),
            sum: mu.total(),
            expected: ctx.size(),
        });
    }
    Ok(())
}

/// Compute the decomposition via bordered Schur complements: D_a eliminates
/// the leading corner of size μ_1 + … + μ_{a−1}; E and F divide by D on the
/// appropriate side; Ẽ and F̃ are alternating sums of products over chains.
pub fn gauss_decompose(
    ctx: &Arc<AlgebraContext>,
    mu: &Composition,
    var: Var,
    order: usize,
) -> Result<GaussData, YangianError> {
    validate(ctx, mu)?;
    let n = mu.n();
    let t = t_matrix(ctx, var, order);

    let mut d = Vec::with_capacity(n);
    let mut dp = Vec::with_capacity(n);
    for a in 1..=n {
        let rows = block_indices(mu, a);
        let block = crate::series::bordered_schur(ctx, &t, mu.offset(a), &rows, &rows)?;
        dp.push(block.inverse(ctx)?);
        d.push(block);
    }

    let mut e = BTreeMap::new();
    let mut f = BTreeMap::new();
    for a in 1..n {
        let rows_a = block_indices(mu, a);
        for b in a + 1..=n {
            let rows_b = block_indices(mu, b);
            let upper = crate::series::bordered_schur(ctx, &t, mu.offset(a), &rows_a, &rows_b)?;
            e.insert((a, b), dp[a - 1].mul(ctx, &upper));
            let lower = crate::series::bordered_schur(ctx, &t, mu.offset(a), &rows_b, &rows_a)?;
            f.insert((b, a), lower.mul(ctx, &dp[a - 1]));
        }
    }

    let mut et = BTreeMap::new();
    let mut ft = BTreeMap::new();
    let field = *ctx.field();
    for a in 1..n {
        for b in a + 1..=n {
            let mut et_sum = MatrixSeries::zero(mu.part(a), mu.part(b), VarSet::single(var), order);
            let mut ft_sum = MatrixSeries::zero(mu.part(b), mu.part(a), VarSet::single(var), order);
            for chain in chains(a, b) {
                let steps = chain.len() - 1;
                let sign = field.sign((steps % 2) as u8);
                let mut fwd: Option<MatrixSeries> = None;
                for w in chain.windows(2) {
                    let factor = &e[&(w[0], w[1])];
                    fwd = Some(match fwd {
                        None => factor.clone(),
                        Some(acc) => acc.mul(ctx, factor),
                    });
                }
                let mut bwd: Option<MatrixSeries> = None;
                for w in chain.windows(2).rev() {
                    let factor = &f[&(w[1], w[0])];
                    bwd = Some(match bwd {
                        None => factor.clone(),
                        Some(acc) => acc.mul(ctx, factor),
                    });
                }
                et_sum = et_sum.add(ctx, &fwd.expect("chain has at least one step").map(|s| s.scale(ctx, sign)));
                ft_sum = ft_sum.add(ctx, &bwd.expect("chain has at least one step").map(|s| s.scale(ctx, sign)));
            }
            et.insert((a, b), et_sum);
            ft.insert((b, a), ft_sum);
        }
    }

    Ok(GaussData {
        ctx: Arc::clone(ctx),
        mu: mu.clone(),
        var,
        order,
        d,
        dp,
        e,
        f,
        et,
        ft,
    })
}

/// Compute the decomposition by sequential block elimination: peel off one
/// block row/column at a time, each time taking the current corner as D_a
/// and updating the trailing submatrix by the rank-one block correction.
/// Ẽ and F̃ come from inverting the assembled unitriangular factors.
pub fn gauss_eliminate(
    ctx: &Arc<AlgebraContext>,
    mu: &Composition,
    var: Var,
    order: usize,
) -> Result<GaussData, YangianError> {
    validate(ctx, mu)?;
    let n = mu.n();
    let size = ctx.size();
    let mut work = t_matrix(ctx, var, order);

    let mut d = Vec::with_capacity(n);
    let mut dp = Vec::with_capacity(n);
    let mut e = BTreeMap::new();
    let mut f = BTreeMap::new();
    for a in 1..=n {
        let rows_a = block_indices(mu, a);
        let corner = work.submatrix(&rows_a, &rows_a);
        let corner_inv = corner.inverse(ctx)?;
        for c in a + 1..=n {
            let rows_c = block_indices(mu, c);
            e.insert((a, c), corner_inv.mul(ctx, &work.submatrix(&rows_a, &rows_c)));
            f.insert((c, a), work.submatrix(&rows_c, &rows_a).mul(ctx, &corner_inv));
        }
        for b in a + 1..=n {
            let rows_b = block_indices(mu, b);
            for c in a + 1..=n {
                let rows_c = block_indices(mu, c);
                let correction = f[&(b, a)].mul(ctx, &corner).mul(ctx, &e[&(a, c)]);
                let updated = work.submatrix(&rows_b, &rows_c).sub(ctx, &correction);
                write_block(&mut work, &rows_b, &rows_c, &updated);
            }
        }
        d.push(corner);
        dp.push(corner_inv);
    }

    let vars = VarSet::single(var);
    let mut e_full = MatrixSeries::identity(ctx, size, vars, order);
    let mut f_full = MatrixSeries::identity(ctx, size, vars, order);
    for (&(a, b), block) in &e {
        write_block(&mut e_full, &block_indices(mu, a), &block_indices(mu, b), block);
    }
    for (&(b, a), block) in &f {
        write_block(&mut f_full, &block_indices(mu, b), &block_indices(mu, a), block);
    }
    let et_full = e_full.inverse(ctx)?;
    let ft_full = f_full.inverse(ctx)?;
    let mut et = BTreeMap::new();
    let mut ft = BTreeMap::new();
    for a in 1..n {
        for b in a + 1..=n {
            et.insert(
                (a, b),
                et_full.submatrix(&block_indices(mu, a), &block_indices(mu, b)),
            );
            ft.insert(
                (b, a),
                ft_full.submatrix(&block_indices(mu, b), &block_indices(mu, a)),
            );
        }
    }

    Ok(GaussData {
        ctx: Arc::clone(ctx),
        mu: mu.clone(),
        var,
        order,
        d,
        dp,
        e,
        f,
        et,
        ft,
    })
}

impl GaussData {
    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of blocks.
    pub fn n(&self) -> usize {
        self.mu.n()
    }

    pub fn d_block(&self, a: usize) -> &MatrixSeries {
        &self.d[a - 1]
    }

    pub fn dp_block(&self, a: usize) -> &MatrixSeries {
        &self.dp[a - 1]
    }

    pub fn e_block(&self, a: usize, b: usize) -> &MatrixSeries {
        &self.e[&(a, b)]
    }

    pub fn f_block(&self, b: usize, a: usize) -> &MatrixSeries {
        &self.f[&(b, a)]
    }

    pub fn et_block(&self, a: usize, b: usize) -> &MatrixSeries {
        &self.et[&(a, b)]
    }

    pub fn ft_block(&self, b: usize, a: usize) -> &MatrixSeries {
        &self.ft[&(b, a)]
    }

    fn in_var(&self, s: &Series, var: Var) -> Series {
        if var == self.var {
            s.clone()
        } else {
            s.rename_var(self.var, var)
        }
    }

    /// D_{a;i,j}(x) in the requested variable.
    pub fn d(&self, a: usize, i: usize, j: usize, var: Var) -> Series {
        self.in_var(self.d_block(a).entry(i, j), var)
    }

    /// D′_{a;i,j}(x) in the requested variable.
    pub fn dp(&self, a: usize, i: usize, j: usize, var: Var) -> Series {
        self.in_var(self.dp_block(a).entry(i, j), var)
    }

    /// E_{a,b;i,j}(x) in the requested variable.
    pub fn e(&self, a: usize, b: usize, i: usize, j: usize, var: Var) -> Series {
        self.in_var(self.e_block(a, b).entry(i, j), var)
    }

    /// F_{b,a;i,j}(x) in the requested variable.
    pub fn f(&self, b: usize, a: usize, i: usize, j: usize, var: Var) -> Series {
        self.in_var(self.f_block(b, a).entry(i, j), var)
    }

    /// Ẽ_{a,b;i,j}(x) in the requested variable.
    pub fn et(&self, a: usize, b: usize, i: usize, j: usize, var: Var) -> Series {
        self.in_var(self.et_block(a, b).entry(i, j), var)
    }

    /// F̃_{b,a;i,j}(x) in the requested variable.
    pub fn ft(&self, b: usize, a: usize, i: usize, j: usize, var: Var) -> Series {
        self.in_var(self.ft_block(b, a).entry(i, j), var)
    }

    fn coefficient_of(&self, s: &Series, r: usize) -> Element {
        let mut exps = [0usize; 3];
        exps[self.var.index()] = r;
        s.get(exps)
    }

    /// Coefficient D^{(r)}_{a;i,j} as an element of the algebra.
    pub fn d_elem(&self, a: usize, i: usize, j: usize, r: usize) -> Element {
        self.coefficient_of(self.d_block(a).entry(i, j), r)
    }

    /// Coefficient D′^{(r)}_{a;i,j}.
    pub fn dp_elem(&self, a: usize, i: usize, j: usize, r: usize) -> Element {
        self.coefficient_of(self.dp_block(a).entry(i, j), r)
    }

    /// Coefficient E^{(r)}_{a,b;i,j}.
    pub fn e_elem(&self, a: usize, b: usize, i: usize, j: usize, r: usize) -> Element {
        self.coefficient_of(self.e_block(a, b).entry(i, j), r)
    }

    /// Coefficient F^{(r)}_{b,a;i,j}.
    pub fn f_elem(&self, b: usize, a: usize, i: usize, j: usize, r: usize) -> Element {
        self.coefficient_of(self.f_block(b, a).entry(i, j), r)
    }
}

/// Outcome of a batch of exact checks: how many comparisons ran and a
/// human-readable description of each failure.
#[derive(Debug, Default, Clone)]
pub struct CheckLog {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckLog {
    pub fn new() -> CheckLog {
        CheckLog::default()
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckLog) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// Record an entrywise, slotwise comparison of two matrices of series.
fn compare_matrices(
    ctx: &AlgebraContext,
    log: &mut CheckLog,
    label: &str,
    lhs: &MatrixSeries,
    rhs: &MatrixSeries,
) {
    assert_eq!(lhs.rows(), rhs.rows(), "{label}: row mismatch");
    assert_eq!(lhs.cols(), rhs.cols(), "{label}: column mismatch");
    for i in 1..=lhs.rows() {
        for j in 1..=lhs.cols() {
            let a = lhs.entry(i, j);
            let b = rhs.entry(i, j);
            for exps in enumerate_box(a.vars().union(b.vars()), a.order()) {
                if !a.is_exact(exps) || !b.is_exact(exps) {
                    continue;
                }
                let delta = a.get(exps).sub(ctx, &b.get(exps));
                log.record(delta.is_zero(), || {
                    format!("{label} entry ({i},{j}) slot {exps:?}: delta {}", delta.to_text())
                });
            }
        }
    }
}

/// Both construction routes must produce identical blocks.
pub fn route_agreement(g1: &GaussData, g2: &GaussData) -> CheckLog {
    assert!(Arc::ptr_eq(&g1.ctx, &g2.ctx) || g1.ctx.same_algebra(&g2.ctx));
    assert_eq!(g1.mu.parts(), g2.mu.parts());
    let ctx = &g1.ctx;
    let n = g1.n();
    let mut log = CheckLog::new();
    for a in 1..=n {
        compare_matrices(ctx, &mut log, &format!("D_{a}"), g1.d_block(a), g2.d_block(a));
        compare_matrices(ctx, &mut log, &format!("D'_{a}"), g1.dp_block(a), g2.dp_block(a));
    }
    for a in 1..n {
        for b in a + 1..=n {
            compare_matrices(ctx, &mut log, &format!("E_{a},{b}"), g1.e_block(a, b), g2.e_block(a, b));
            compare_matrices(ctx, &mut log, &format!("F_{b},{a}"), g1.f_block(b, a), g2.f_block(b, a));
            compare_matrices(ctx, &mut log, &format!("Et_{a},{b}"), g1.et_block(a, b), g2.et_block(a, b));
            compare_matrices(ctx, &mut log, &format!("Ft_{b},{a}"), g1.ft_block(b, a), g2.ft_block(b, a));
        }
    }
    log
}

/// Assemble the block factors of `g` into full matrices F, D, E (and the
/// inverse-side Ẽ, D′, F̃).
fn assemble(g: &GaussData) -> (MatrixSeries, MatrixSeries, MatrixSeries, MatrixSeries, MatrixSeries, MatrixSeries) {
    let ctx = &g.ctx;
    let size = ctx.size();
    let vars = VarSet::single(g.var);
    let mut d_full = MatrixSeries::identity(ctx, size, vars, g.order);
    let mut dp_full = MatrixSeries::identity(ctx, size, vars, g.order);
    let mut e_full = MatrixSeries::identity(ctx, size, vars, g.order);
    let mut f_full = MatrixSeries::identity(ctx, size, vars, g.order);
    let mut et_full = MatrixSeries::identity(ctx, size, vars, g.order);
    let mut ft_full = MatrixSeries::identity(ctx, size, vars, g.order);
    for a in 1..=g.n() {
        let rows = block_indices(&g.mu, a);
        write_block(&mut d_full, &rows, &rows, g.d_block(a));
        write_block(&mut dp_full, &rows, &rows, g.dp_block(a));
    }
    for a in 1..g.n() {
        let rows_a = block_indices(&g.mu, a);
        for b in a + 1..=g.n() {
            let rows_b = block_indices(&g.mu, b);
            write_block(&mut e_full, &rows_a, &rows_b, g.e_block(a, b));
            write_block(&mut f_full, &rows_b, &rows_a, g.f_block(b, a));
            write_block(&mut et_full, &rows_a, &rows_b, g.et_block(a, b));
            write_block(&mut ft_full, &rows_b, &rows_a, g.ft_block(b, a));
        }
    }
    (f_full, d_full, e_full, et_full, dp_full, ft_full)
}

/// Multiply the factors back together: F·D·E must reproduce T entry by
/// entry, and Ẽ·D′·F̃ must reproduce T^{-1}. Expanding the block products,
/// this is exactly the family of identities
/// T_{a,b} = D_a E_{a,b} + Σ_{c<a} F_{a,c} D_c E_{c,b} (and its transpose
/// flavor, and the primed versions with sums over c > a).
pub fn roundtrip_check(g: &GaussData) -> CheckLog {
    let ctx = &g.ctx;
    let (f_full, d_full, e_full, et_full, dp_full, ft_full) = assemble(g);
    let mut log = CheckLog::new();
    let t = t_matrix(ctx, g.var, g.order);
    let product = f_full.mul(ctx, &d_full).mul(ctx, &e_full);
    compare_matrices(ctx, &mut log, "F.D.E vs T", &product, &t);
    let tp = tp_matrix(ctx, g.var, g.order);
    let product = et_full.mul(ctx, &dp_full).mul(ctx, &ft_full);
    compare_matrices(ctx, &mut log, "Et.D'.Ft vs T'", &product, &tp);
    log
}

/// One-step recursion generating distant blocks from adjacent ones: for
/// every a < b − 1, every pivot column k in block b − 1, and every level r,
///
///   E^{(r)}_{a,b;i,j}  = ±[E^{(r)}_{a,b−1;i,k}, E^{(1)}_{b−1,b;k,j}],
///   F^{(r)}_{b,a;j,i}  = ±[F^{(1)}_{b,b−1;j,k}, F^{(r)}_{b−1,a;k,i}],
///
/// with sign (−1)^{|k| in block b−1}, independently of the chosen k.
pub fn recursion_check(g: &GaussData) -> CheckLog {
    let ctx = &g.ctx;
    let mu = &g.mu;
    let field = *ctx.field();
    let mut log = CheckLog::new();
    for b in 3..=g.n() {
        for a in 1..=b - 2 {
            for k in 1..=mu.part(b - 1) {
                let sign = field.sign(ctx.restricted_parity(mu, b - 1, k));
                for i in 1..=mu.part(a) {
                    for j in 1..=mu.part(b) {
                        for r in 1..=g.order {
                            let lhs = g.e_elem(a, b, i, j, r);
                            let rhs = g
                                .e_elem(a, b - 1, i, k, r)
                                .supercommutator(ctx, &g.e_elem(b - 1, b, k, j, 1))
                                .scale(ctx, sign);
                            let delta = lhs.sub(ctx, &rhs);
                            log.record(delta.is_zero(), || {
                                format!(
                                    "E recursion a={a} b={b} k={k} i={i} j={j} r={r}: delta {}",
                                    delta.to_text()
                                )
                            });

                            let lhs = g.f_elem(b, a, j, i, r);
                            let rhs = g
                                .f_elem(b, b - 1, j, k, 1)
                                .supercommutator(ctx, &g.f_elem(b - 1, a, k, i, r))
                                .scale(ctx, sign);
                            let delta = lhs.sub(ctx, &rhs);
                            log.record(delta.is_zero(), || {
                                format!(
                                    "F recursion a={a} b={b} k={k} i={i} j={j} r={r}: delta {}",
                                    delta.to_text()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    log
}

/// The two-step chains must satisfy Ẽ_{a,a+2} = E_{a,a+1} E_{a+1,a+2} − E_{a,a+2}
/// and F̃_{a+2,a} = F_{a+2,a+1} F_{a+1,a} − F_{a+2,a}.
pub fn primed_combination_check(g: &GaussData) -> CheckLog {
    let ctx = &g.ctx;
    let mut log = CheckLog::new();
    for a in 1..g.n().saturating_sub(1) {
        let expect = g
            .e_block(a, a + 1)
            .mul(ctx, g.e_block(a + 1, a + 2))
            .sub(ctx, g.e_block(a, a + 2));
        compare_matrices(ctx, &mut log, &format!("E'_{a},{}", a + 2), g.et_block(a, a + 2), &expect);
        let expect = g
            .f_block(a + 2, a + 1)
            .mul(ctx, g.f_block(a + 1, a))
            .sub(ctx, g.f_block(a + 2, a));
        compare_matrices(ctx, &mut log, &format!("F'_{},{a}", a + 2), g.ft_block(a + 2, a), &expect);
    }
    log
}

/// For a two-block composition, every entry of T and T^{-1} has a closed
/// form in the blocks: T = [[D_1, D_1 E_1], [F_1 D_1, F_1 D_1 E_1 + D_2]]
/// and T^{-1} = [[D′_1 + E_1 D′_2 F_1, −E_1 D′_2], [−D′_2 F_1, D′_2]].
pub fn two_block_identity_check(g: &GaussData) -> CheckLog {
    assert_eq!(g.n(), 2, "closed forms require exactly two blocks");
    let ctx = &g.ctx;
    let mu = &g.mu;
    let mut log = CheckLog::new();
    let t = t_matrix(ctx, g.var, g.order);
    let tp = tp_matrix(ctx, g.var, g.order);
    let rows1 = block_indices(mu, 1);
    let rows2 = block_indices(mu, 2);
    let (d1, d2) = (g.d_block(1), g.d_block(2));
    let (dp1, dp2) = (g.dp_block(1), g.dp_block(2));
    let (e1, f1) = (g.e_block(1, 2), g.f_block(2, 1));

    let cases: [(&str, MatrixSeries, MatrixSeries); 8] = [
        ("T(1,1) = D_1", t.submatrix(&rows1, &rows1), d1.clone()),
        ("T(1,2) = D_1 E_1", t.submatrix(&rows1, &rows2), d1.mul(ctx, e1)),
        ("T(2,1) = F_1 D_1", t.submatrix(&rows2, &rows1), f1.mul(ctx, d1)),
        (
            "T(2,2) = F_1 D_1 E_1 + D_2",
            t.submatrix(&rows2, &rows2),
            f1.mul(ctx, d1).mul(ctx, e1).add(ctx, d2),
        ),
        (
            "T'(1,1) = D'_1 + E_1 D'_2 F_1",
            tp.submatrix(&rows1, &rows1),
            dp1.add(ctx, &e1.mul(ctx, dp2).mul(ctx, f1)),
        ),
        (
            "T'(1,2) = -E_1 D'_2",
            tp.submatrix(&rows1, &rows2),
            e1.mul(ctx, dp2).map(|s| s.neg(ctx)),
        ),
        (
            "T'(2,1) = -D'_2 F_1",
            tp.submatrix(&rows2, &rows1),
            dp2.mul(ctx, f1).map(|s| s.neg(ctx)),
        ),
        ("T'(2,2) = D'_2", tp.submatrix(&rows2, &rows2), dp2.clone()),
    ];
    for (label, lhs, rhs) in cases {
        compare_matrices(ctx, &mut log, label, &lhs, &rhs);
    }
    log
}

/// For a three-block composition, the closed forms for every entry of T and
/// T^{-1}, with E′_{1,3} = E_1 E_2 − E_{1,3} and F′_{3,1} = F_2 F_1 − F_{3,1}.
pub fn three_block_identity_check(g: &GaussData) -> CheckLog {
    assert_eq!(g.n(), 3, "closed forms require exactly three blocks");
    let ctx = &g.ctx;
    let mu = &g.mu;
    let mut log = CheckLog::new();
    let t = t_matrix(ctx, g.var, g.order);
    let tp = tp_matrix(ctx, g.var, g.order);
    let rows: Vec<Vec<usize>> = (1..=3).map(|a| block_indices(mu, a)).collect();
    let (d1, d2, d3) = (g.d_block(1), g.d_block(2), g.d_block(3));
    let (dp1, dp2, dp3) = (g.dp_block(1), g.dp_block(2), g.dp_block(3));
    let (e1, e2, e13) = (g.e_block(1, 2), g.e_block(2, 3), g.e_block(1, 3));
    let (f1, f2, f31) = (g.f_block(2, 1), g.f_block(3, 2), g.f_block(3, 1));
    // The combinations that show up in the entries of T^{-1}.
    let ep13 = e1.mul(ctx, e2).sub(ctx, e13);
    let fp31 = f2.mul(ctx, f1).sub(ctx, f31);

    let neg = |m: MatrixSeries| m.map(|s| s.neg(ctx));
    let cases: [(&str, MatrixSeries, MatrixSeries); 18] = [
        ("T(1,1) = D_1", t.submatrix(&rows[0], &rows[0]), d1.clone()),
        ("T(1,2) = D_1 E_1", t.submatrix(&rows[0], &rows[1]), d1.mul(ctx, e1)),
        ("T(1,3) = D_1 E_13", t.submatrix(&rows[0], &rows[2]), d1.mul(ctx, e13)),
        ("T(2,1) = F_1 D_1", t.submatrix(&rows[1], &rows[0]), f1.mul(ctx, d1)),
        (
            "T(2,2) = F_1 D_1 E_1 + D_2",
            t.submatrix(&rows[1], &rows[1]),
            f1.mul(ctx, d1).mul(ctx, e1).add(ctx, d2),
        ),
        (
            "T(2,3) = F_1 D_1 E_13 + D_2 E_2",
            t.submatrix(&rows[1], &rows[2]),
            f1.mul(ctx, d1).mul(ctx, e13).add(ctx, &d2.mul(ctx, e2)),
        ),
        ("T(3,1) = F_31 D_1", t.submatrix(&rows[2], &rows[0]), f31.mul(ctx, d1)),
        (
            "T(3,2) = F_31 D_1 E_1 + F_2 D_2",
            t.submatrix(&rows[2], &rows[1]),
            f31.mul(ctx, d1).mul(ctx, e1).add(ctx, &f2.mul(ctx, d2)),
        ),
        (
            "T(3,3) = F_31 D_1 E_13 + F_2 D_2 E_2 + D_3",
            t.submatrix(&rows[2], &rows[2]),
            f31.mul(ctx, d1)
                .mul(ctx, e13)
                .add(ctx, &f2.mul(ctx, d2).mul(ctx, e2))
                .add(ctx, d3),
        ),
        (
            "T'(1,1) = D'_1 + E_1 D'_2 F_1 + E'_13 D'_3 F'_31",
            tp.submatrix(&rows[0], &rows[0]),
            dp1.add(ctx, &e1.mul(ctx, dp2).mul(ctx, f1))
                .add(ctx, &ep13.mul(ctx, dp3).mul(ctx, &fp31)),
        ),
        (
            "T'(1,2) = -E_1 D'_2 - E'_13 D'_3 F_2",
            tp.submatrix(&rows[0], &rows[1]),
            neg(e1.mul(ctx, dp2).add(ctx, &ep13.mul(ctx, dp3).mul(ctx, f2))),
        ),
        (
            "T'(1,3) = E'_13 D'_3",
            tp.submatrix(&rows[0], &rows[2]),
            ep13.mul(ctx, dp3),
        ),
        (
            "T'(2,1) = -D'_2 F_1 - E_2 D'_3 F'_31",
            tp.submatrix(&rows[1], &rows[0]),
            neg(dp2.mul(ctx, f1).add(ctx, &e2.mul(ctx, dp3).mul(ctx, &fp31))),
        ),
        (
            "T'(2,2) = D'_2 + E_2 D'_3 F_2",
            tp.submatrix(&rows[1], &rows[1]),
            dp2.add(ctx, &e2.mul(ctx, dp3).mul(ctx, f2)),
        ),
        (
            "T'(2,3) = -E_2 D'_3",
            tp.submatrix(&rows[1], &rows[2]),
            neg(e2.mul(ctx, dp3)),
        ),
        (
            "T'(3,1) = D'_3 F'_31",
            tp.submatrix(&rows[2], &rows[0]),
            dp3.mul(ctx, &fp31),
        ),
        (
            "T'(3,2) = -D'_3 F_2",
            tp.submatrix(&rows[2], &rows[1]),
            neg(dp3.mul(ctx, f2)),
        ),
        ("T'(3,3) = D'_3", tp.submatrix(&rows[2], &rows[2]), dp3.clone()),
    ];
    for (label, lhs, rhs) in cases {
        compare_matrices(ctx, &mut log, label, &lhs, &rhs);
    }
    log
}

/// Every block coefficient must be parity homogeneous with the parity
/// determined by its row and column position: |i| + |j| read within the
/// blocks the indices live in. Constant terms of D and D′ must be δ_{ij}.
pub fn parity_check(g: &GaussData) -> CheckLog {
    let ctx = &g.ctx;
    let mu = &g.mu;
    let mut log = CheckLog::new();
    let check_entries = |label: &str,
                            block: &MatrixSeries,
                            row_block: usize,
                            col_block: usize,
                            log: &mut CheckLog| {
        for i in 1..=block.rows() {
            for j in 1..=block.cols() {
                let expected =
                    ctx.restricted_parity(mu, row_block, i) ^ ctx.restricted_parity(mu, col_block, j);
                for r in 0..=g.order {
                    let mut exps = [0usize; 3];
                    exps[g.var.index()] = r;
                    let elem = block.entry(i, j).get(exps);
                    let ok = match elem.parity(ctx) {
                        Some(p) => elem.is_zero() || p == expected,
                        None => false,
                    };
                    log.record(ok, || {
                        format!(
                            "{label} entry ({i},{j}) level {r}: parity {:?}, expected {expected}",
                            elem.parity(ctx)
                        )
                    });
                }
            }
        }
    };
    for a in 1..=g.n() {
        check_entries(&format!("D_{a}"), g.d_block(a), a, a, &mut log);
        check_entries(&format!("D'_{a}"), g.dp_block(a), a, a, &mut log);
        // Constant terms: D and D′ start at the identity.
        for i in 1..=mu.part(a) {
            for j in 1..=mu.part(a) {
                let expected = Element::scalar(ctx, if i == j { 1 } else { 0 });
                let delta = g.d_elem(a, i, j, 0).sub(ctx, &expected);
                log.record(delta.is_zero(), || {
                    format!("D_{a} constant term ({i},{j}): {}", delta.to_text())
                });
                let delta = g.dp_elem(a, i, j, 0).sub(ctx, &expected);
                log.record(delta.is_zero(), || {
                    format!("D'_{a} constant term ({i},{j}): {}", delta.to_text())
                });
            }
        }
    }
    for a in 1..g.n() {
        for b in a + 1..=g.n() {
            check_entries(&format!("E_{a},{b}"), g.e_block(a, b), a, b, &mut log);
            check_entries(&format!("F_{b},{a}"), g.f_block(b, a), b, a, &mut log);
            check_entries(&format!("Et_{a},{b}"), g.et_block(a, b), a, b, &mut log);
            check_entries(&format!("Ft_{b},{a}"), g.ft_block(b, a), b, a, &mut log);
        }
    }
    log
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Sequence01;
    use crate::series::clear_denominator_compare;

    fn ctx(p: u64, m: usize, n: usize, sigma: &str) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, m, n, Sequence01::parse(sigma).unwrap()).unwrap()
    }

    fn comp(parts: &[usize], total: usize) -> Composition {
        Composition::new(parts.to_vec(), total).unwrap()
    }

    #[test]
    fn minimal_split_blocks_have_closed_forms() {
        // Size 1|1, μ = (1,1): D_1 = t_{11}, E_1 = D'_1 t_{12}, F_1 = t_{21} D'_1.
        let ctx = ctx(5, 1, 1, "01");
        let mu = comp(&[1, 1], 2);
        let g = gauss_decompose(&ctx, &mu, Var::U, 3).unwrap();
        // E^{(1)}_{1;1,1} = t^{(1)}_{1,2}.
        assert_eq!(g.e_elem(1, 2, 1, 1, 1).to_text(), "1*t(1,2,1)");
        // F^{(1)}_{1;1,1} = t^{(1)}_{2,1}.
        assert_eq!(g.f_elem(2, 1, 1, 1, 1).to_text(), "1*t(2,1,1)");
        // D_1 coefficients coincide with t_{1,1} at every level.
        for r in 0..=3 {
            let delta = g
                .d_elem(1, 1, 1, r)
                .sub(&ctx, &Element::generator(&ctx, 1, 1, r));
            assert!(delta.is_zero());
        }
        // E^{(2)}_{1;1,1} = t^{(2)}_{12} - t^{(1)}_{11} t^{(1)}_{12}.
        let expect = Element::generator(&ctx, 1, 2, 2).sub(
            &ctx,
            &Element::generator(&ctx, 1, 1, 1).mul(&ctx, &Element::generator(&ctx, 1, 2, 1)),
        );
        assert!(g.e_elem(1, 2, 1, 1, 2).sub(&ctx, &expect).is_zero());
    }

    #[test]
    fn leading_block_matches_generating_matrix() {
        // D_1 is always the plain leading block of T, and the level-one
        // coefficients of adjacent E/F blocks are single generators.
        for (c, parts) in [
            (ctx(3, 2, 1, "010"), vec![2, 1]),
            (ctx(3, 2, 1, "010"), vec![1, 2]),
            (ctx(5, 2, 2, "0101"), vec![1, 2, 1]),
        ] {
            let total = c.size();
            let mu = comp(&parts, total);
            let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
            for i in 1..=mu.part(1) {
                for j in 1..=mu.part(1) {
                    for r in 0..=3 {
                        let delta = g
                            .d_elem(1, i, j, r)
                            .sub(&c, &Element::generator(&c, i, j, r));
                        assert!(delta.is_zero(), "D_1 level {r} entry ({i},{j})");
                    }
                }
            }
            for b in 2..=mu.n() {
                let off = mu.offset(b - 1);
                for i in 1..=mu.part(b - 1) {
                    for j in 1..=mu.part(b) {
                        let delta = g.e_elem(b - 1, b, i, j, 1).sub(
                            &c,
                            &Element::generator(&c, off + i, mu.offset(b) + j, 1),
                        );
                        assert!(delta.is_zero(), "E^(1) block {b}");
                        let delta = g.f_elem(b, b - 1, j, i, 1).sub(
                            &c,
                            &Element::generator(&c, mu.offset(b) + j, off + i, 1),
                        );
                        assert!(delta.is_zero(), "F^(1) block {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn elimination_route_matches_quasideterminant_route() {
        for (c, parts) in [
            (ctx(3, 1, 1, "01"), vec![1, 1]),
            (ctx(3, 2, 1, "001"), vec![1, 1, 1]),
            (ctx(5, 2, 1, "100"), vec![1, 2]),
            (ctx(2, 2, 2, "0110"), vec![1, 1, 2]),
        ] {
            let mu = comp(&parts, c.size());
            let g1 = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
            let g2 = gauss_eliminate(&c, &mu, Var::U, 3).unwrap();
            let log = route_agreement(&g1, &g2);
            assert!(log.all_passed(), "failures: {:?}", log.failures);
            assert!(log.checked > 0);
        }
    }

    #[test]
    fn factors_multiply_back_to_t_and_t_inverse() {
        for (c, parts) in [
            (ctx(3, 1, 1, "10"), vec![1, 1]),
            (ctx(5, 2, 1, "010"), vec![2, 1]),
            (ctx(2, 1, 2, "011"), vec![1, 1, 1]),
            (ctx(3, 2, 2, "0101"), vec![1, 1, 1, 1]),
        ] {
            let mu = comp(&parts, c.size());
            let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
            let log = roundtrip_check(&g);
            assert!(log.all_passed(), "failures: {:?}", log.failures);
        }
    }

    #[test]
    fn distant_blocks_satisfy_recursion_for_every_pivot() {
        // μ = (1,2,1) gives a middle block of size two, so the recursion
        // must hold for both pivots k = 1, 2 with matching results.
        for (c, parts) in [
            (ctx(3, 2, 2, "0101"), vec![1, 2, 1]),
            (ctx(5, 2, 1, "010"), vec![1, 1, 1]),
            (ctx(2, 2, 2, "0011"), vec![1, 1, 1, 1]),
        ] {
            let mu = comp(&parts, c.size());
            let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
            let log = recursion_check(&g);
            assert!(log.all_passed(), "failures: {:?}", log.failures);
            assert!(log.checked > 0);
        }
    }

    #[test]
    fn chain_sums_match_primed_combinations() {
        let c = ctx(3, 2, 2, "0110");
        let mu = comp(&[1, 1, 2], c.size());
        let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
        let log = primed_combination_check(&g);
        assert!(log.all_passed(), "failures: {:?}", log.failures);
    }

    #[test]
    fn two_block_entries_have_closed_forms() {
        for (c, parts) in [
            (ctx(3, 2, 1, "010"), vec![2, 1]),
            (ctx(5, 2, 1, "100"), vec![1, 2]),
            (ctx(2, 1, 1, "01"), vec![1, 1]),
        ] {
            let mu = comp(&parts, c.size());
            let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
            let log = two_block_identity_check(&g);
            assert!(log.all_passed(), "failures: {:?}", log.failures);
        }
    }

    #[test]
    fn three_block_entries_have_closed_forms() {
        for (c, parts) in [
            (ctx(3, 2, 1, "010"), vec![1, 1, 1]),
            (ctx(5, 2, 2, "0101"), vec![1, 2, 1]),
        ] {
            let mu = comp(&parts, c.size());
            let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
            let log = three_block_identity_check(&g);
            assert!(log.all_passed(), "failures: {:?}", log.failures);
        }
    }

    #[test]
    fn block_coefficients_are_parity_homogeneous() {
        for (c, parts) in [
            (ctx(3, 2, 1, "010"), vec![1, 2]),
            (ctx(2, 2, 2, "0110"), vec![2, 2]),
        ] {
            let mu = comp(&parts, c.size());
            let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
            let log = parity_check(&g);
            assert!(log.all_passed(), "failures: {:?}", log.failures);
        }
    }

    #[test]
    fn series_accessors_rename_variables() {
        let c = ctx(5, 1, 1, "01");
        let mu = comp(&[1, 1], 2);
        let g = gauss_decompose(&c, &mu, Var::U, 3).unwrap();
        let in_v = g.e(1, 2, 1, 1, Var::V);
        assert!(in_v.vars().contains(Var::V));
        assert!(!in_v.vars().contains(Var::U));
        let back = in_v.rename_var(Var::V, Var::U);
        let outcome = clear_denominator_compare(&c, &back, &g.e(1, 2, 1, 1, Var::U));
        assert!(outcome.agreed());
    }

    #[test]
    fn refining_only_later_parts_keeps_leading_blocks() {
        // D_a depends only on μ_1 + … + μ_{a−1} and μ_a, so decompositions
        // for (1,1,2) and (1,1,1,1) share their first two D blocks and E_1.
        let c = ctx(3, 2, 2, "0101");
        let coarse = gauss_decompose(&c, &comp(&[1, 1, 2], 4), Var::U, 3).unwrap();
        let fine = gauss_decompose(&c, &comp(&[1, 1, 1, 1], 4), Var::U, 3).unwrap();
        let mut log = CheckLog::new();
        for a in 1..=2 {
            compare_matrices(&c, &mut log, "D", coarse.d_block(a), fine.d_block(a));
        }
        compare_matrices(&c, &mut log, "E", coarse.e_block(1, 2), fine.e_block(1, 2));
        compare_matrices(&c, &mut log, "F", coarse.f_block(2, 1), fine.f_block(2, 1));
        assert!(log.all_passed(), "failures: {:?}", log.failures);
    }
}
