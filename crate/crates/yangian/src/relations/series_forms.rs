//! Series-level family checkers.
//!
//! Each function enumerates the admissible index tuples of one identity
//! between truncated generating series, builds both sides on the shared
//! truncation box, and records slot-by-slot differences. Identities with a
//! `1/(u − v)` denominator are multiplied through by `(u − v)` on the
//! bracket side, which marks the outermost slots inexact; only mutually
//! exact slots are compared.

use super::{elem_bracket_series, FamilyData, Recorder, RelationConfig};
use crate::pbw::Element;
use crate::series::{t_matrix, tp_matrix, Series, Var, VarSet};

const U: Var = Var::U;
const V: Var = Var::V;
const W: Var = Var::W;

fn uv() -> VarSet {
    VarSet::pair(U, V)
}

/// The supercommutator of a series with a fixed element on the right.
fn series_bracket_elem(
    ctx: &crate::context::AlgebraContext,
    s: &Series,
    x: &Element,
) -> Series {
    if x.is_zero() {
        return Series::zero(s.vars(), s.order());
    }
    let px = x.parity(ctx).expect("element has mixed parity");
    let ps = match s.parity(ctx) {
        Some(p) => p,
        None => return Series::zero(s.vars(), s.order()),
    };
    let sign = ctx.field().sign(px & ps);
    s.elem_mul_right(ctx, x)
        .sub(ctx, &s.elem_mul_left(ctx, x).scale(ctx, sign))
}

/// Defining relation in series form: the cleared bracket of two generating
/// series equals the signed cross-product difference.
pub(crate) fn tiju_tkl(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let order = cfg.series_order;
    let size = ctx.size();
    let tu = t_matrix(ctx, U, order);
    let tv = t_matrix(ctx, V, order);
    for i in 1..=size {
        for j in 1..=size {
            for k in 1..=size {
                for l in 1..=size {
                    let pi = ctx.parity_of_index(i);
                    let pj = ctx.parity_of_index(j);
                    let pk = ctx.parity_of_index(k);
                    let sgn = d.sign((pi & pj) ^ (pi & pk) ^ (pj & pk));
                    let lhs = tu
                        .entry(i, j)
                        .supercommutator(ctx, tv.entry(k, l))
                        .mul_diff(ctx, U, V);
                    let rhs = tu
                        .entry(k, j)
                        .mul(ctx, tv.entry(i, l))
                        .sub(ctx, &tv.entry(k, j).mul(ctx, tu.entry(i, l)))
                        .scale(ctx, sgn);
                    rec.series(ctx, || format!("i={i} j={j} k={k} l={l}"), &lhs, &rhs);
                }
            }
        }
    }
}

/// Cleared bracket of a generating series with an inverse-matrix series.
pub(crate) fn commurelation(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let order = cfg.series_order;
    let size = ctx.size();
    let tu = t_matrix(ctx, U, order);
    let tpv = tp_matrix(ctx, V, order);
    for i in 1..=size {
        for j in 1..=size {
            for k in 1..=size {
                for l in 1..=size {
                    let pi = ctx.parity_of_index(i);
                    let pj = ctx.parity_of_index(j);
                    let pk = ctx.parity_of_index(k);
                    let sgn = d.sign((pi & pj) ^ (pi & pk) ^ (pj & pk));
                    let lhs = tu
                        .entry(i, j)
                        .supercommutator(ctx, tpv.entry(k, l))
                        .mul_diff(ctx, U, V);
                    let mut rhs = Series::zero(uv(), order);
                    if k == j {
                        for s in 1..=size {
                            rhs = rhs.add(ctx, &tu.entry(i, s).mul(ctx, tpv.entry(s, l)));
                        }
                    }
                    if i == l {
                        for s in 1..=size {
                            rhs = rhs.sub(ctx, &tpv.entry(k, s).mul(ctx, tu.entry(s, j)));
                        }
                    }
                    rhs = rhs.scale(ctx, sgn);
                    rec.series(ctx, || format!("i={i} j={j} k={k} l={l}"), &lhs, &rhs);
                }
            }
        }
    }
}

/// Diagonal blocks supercommute with distant ladder blocks: E version.
pub(crate) fn dd0_de(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    let n = d.n();
    for a in 1..=n {
        for b in 1..n {
            if a == b || a == b + 1 {
                continue;
            }
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a) {
                    for h in 1..=mu.part(b) {
                        for k in 1..=mu.part(b + 1) {
                            let lhs = g
                                .d(a, i, j, U)
                                .supercommutator(ctx, &g.e(b, b + 1, h, k, V));
                            rec.series_zero(
                                ctx,
                                || format!("a={a} b={b} i={i} j={j} h={h} k={k}"),
                                &lhs,
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Diagonal blocks supercommute with distant ladder blocks: F version.
pub(crate) fn dd0_df(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    let n = d.n();
    for a in 1..=n {
        for b in 1..n {
            if a == b || a == b + 1 {
                continue;
            }
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a) {
                    for h in 1..=mu.part(b + 1) {
                        for k in 1..=mu.part(b) {
                            let lhs = g
                                .d(a, i, j, U)
                                .supercommutator(ctx, &g.f(b + 1, b, h, k, V));
                            rec.series_zero(
                                ctx,
                                || format!("a={a} b={b} i={i} j={j} h={h} k={k}"),
                                &lhs,
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Distant adjacent-ladder blocks supercommute: E version.
pub(crate) fn dd0_ee(d: &FamilyData, rec: &mut Recorder) {
    distant_ladders(d, true, rec);
}

/// Distant adjacent-ladder blocks supercommute: F version.
pub(crate) fn dd0_ff(d: &FamilyData, rec: &mut Recorder) {
    distant_ladders(d, false, rec);
}

fn distant_ladders(d: &FamilyData, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    let n = d.n();
    for a in 1..n {
        for b in 1..n {
            if a.abs_diff(b) <= 1 {
                continue;
            }
            let (r1, c1) = if is_e { (a, a + 1) } else { (a + 1, a) };
            let (r2, c2) = if is_e { (b, b + 1) } else { (b + 1, b) };
            for i in 1..=mu.part(r1) {
                for j in 1..=mu.part(c1) {
                    for h in 1..=mu.part(r2) {
                        for k in 1..=mu.part(c2) {
                            let x = if is_e {
                                g.e(a, a + 1, i, j, U)
                            } else {
                                g.f(a + 1, a, i, j, U)
                            };
                            let y = if is_e {
                                g.e(b, b + 1, h, k, V)
                            } else {
                                g.f(b + 1, b, h, k, V)
                            };
                            let lhs = x.supercommutator(ctx, &y);
                            rec.series_zero(
                                ctx,
                                || format!("a={a} b={b} i={i} j={j} h={h} k={k}"),
                                &lhs,
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Same-point brackets of one ladder block vanish entrywise (both kinds).
pub(crate) fn same_point_ee_ff(d: &FamilyData, a: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for (kind, rows, cols) in [("E", a, a + 1), ("F", a + 1, a)] {
        for i in 1..=mu.part(rows) {
            for j in 1..=mu.part(cols) {
                for h in 1..=mu.part(rows) {
                    for k in 1..=mu.part(cols) {
                        let x = if kind == "E" {
                            g.e(a, a + 1, i, j, V)
                        } else {
                            g.f(a + 1, a, i, j, V)
                        };
                        let y = if kind == "E" {
                            g.e(a, a + 1, h, k, V)
                        } else {
                            g.f(a + 1, a, h, k, V)
                        };
                        let lhs = x.supercommutator(ctx, &y);
                        rec.series_zero(
                            ctx,
                            || format!("{kind} a={a} i={i} j={j} h={h} k={k}"),
                            &lhs,
                        );
                    }
                }
            }
        }
    }
}

/// Cleared bracket of a diagonal block with an adjacent E block (covers the
/// same-block and block-above cases).
pub(crate) fn gde_at(d: &FamilyData, a: usize, b: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    debug_assert!(a == b || a == b + 1);
    for i in 1..=mu.part(a) {
        for j in 1..=mu.part(a) {
            for h in 1..=mu.part(b) {
                for k in 1..=mu.part(b + 1) {
                    let lhs = g
                        .d(a, i, j, U)
                        .supercommutator(ctx, &g.e(b, b + 1, h, k, V))
                        .mul_diff(ctx, U, V);
                    let mut rhs = Series::zero(uv(), g.order());
                    if a == b && h == j {
                        let sgn = d.sign(d.rp(a, h) & d.rp(a, j));
                        let mut acc = Series::zero(uv(), g.order());
                        for p in 1..=mu.part(a) {
                            let diff = g
                                .e(b, b + 1, p, k, V)
                                .sub(ctx, &g.e(b, b + 1, p, k, U));
                            acc = acc.add(ctx, &g.d(a, i, p, U).mul(ctx, &diff));
                        }
                        rhs = rhs.add(ctx, &acc.scale(ctx, sgn));
                    }
                    if a == b + 1 {
                        let e = (d.rp(b, h) & d.rp(a, k))
                            ^ (d.rp(b, h) & d.rp(a, j))
                            ^ (d.rp(a, j) & d.rp(a, k));
                        let diff = g
                            .e(b, b + 1, h, j, U)
                            .sub(ctx, &g.e(b, b + 1, h, j, V));
                        let term = g.d(a, i, k, U).mul(ctx, &diff);
                        rhs = rhs.add(ctx, &term.scale(ctx, d.sign(e)));
                    }
                    rec.series(
                        ctx,
                        || format!("a={a} b={b} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared bracket of a diagonal block with an adjacent F block.
pub(crate) fn gdf_at(d: &FamilyData, a: usize, b: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    debug_assert!(a == b || a == b + 1);
    for i in 1..=mu.part(a) {
        for j in 1..=mu.part(a) {
            for h in 1..=mu.part(b + 1) {
                for k in 1..=mu.part(b) {
                    let lhs = g
                        .d(a, i, j, U)
                        .supercommutator(ctx, &g.f(b + 1, b, h, k, V))
                        .mul_diff(ctx, U, V);
                    let mut rhs = Series::zero(uv(), g.order());
                    if a == b && i == k {
                        let e = (d.rp(a, i) & d.rp(a, j))
                            ^ (d.rp(a + 1, h) & d.rp(a, i))
                            ^ (d.rp(a + 1, h) & d.rp(a, j));
                        let mut acc = Series::zero(uv(), g.order());
                        for p in 1..=mu.part(a) {
                            let diff = g
                                .f(b + 1, b, h, p, U)
                                .sub(ctx, &g.f(b + 1, b, h, p, V));
                            acc = acc.add(ctx, &diff.mul(ctx, &g.d(a, p, j, U)));
                        }
                        rhs = rhs.add(ctx, &acc.scale(ctx, d.sign(e)));
                    }
                    if a == b + 1 {
                        let e = (d.rp(a, h) & d.rp(b, k))
                            ^ (d.rp(a, h) & d.rp(a, j))
                            ^ (d.rp(a, j) & d.rp(b, k));
                        let diff = g
                            .f(b + 1, b, i, k, V)
                            .sub(ctx, &g.f(b + 1, b, i, k, U));
                        let term = diff.mul(ctx, &g.d(a, h, j, U));
                        rhs = rhs.add(ctx, &term.scale(ctx, d.sign(e)));
                    }
                    rec.series(
                        ctx,
                        || format!("a={a} b={b} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared bracket of an E block with the next inverse diagonal block.
pub(crate) fn edp_next(d: &FamilyData, a: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(a) {
        for j in 1..=mu.part(a + 1) {
            for h in 1..=mu.part(a + 1) {
                for k in 1..=mu.part(a + 1) {
                    let lhs = g
                        .e(a, a + 1, i, j, U)
                        .supercommutator(ctx, &g.dp(a + 1, h, k, V))
                        .mul_diff(ctx, U, V);
                    let mut rhs = Series::zero(uv(), g.order());
                    if h == j {
                        let sgn = d.sign(d.rp(a + 1, h) & d.rp(a + 1, j));
                        let mut acc = Series::zero(uv(), g.order());
                        for q in 1..=mu.part(a + 1) {
                            let diff = g
                                .e(a, a + 1, i, q, U)
                                .sub(ctx, &g.e(a, a + 1, i, q, V));
                            acc = acc.add(ctx, &diff.mul(ctx, &g.dp(a + 1, q, k, V)));
                        }
                        rhs = acc.scale(ctx, sgn);
                    }
                    rec.series(
                        ctx,
                        || format!("a={a} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared bracket of an F block with the next inverse diagonal block.
pub(crate) fn fdp_next(d: &FamilyData, a: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(a + 1) {
        for j in 1..=mu.part(a) {
            for h in 1..=mu.part(a + 1) {
                for k in 1..=mu.part(a + 1) {
                    let lhs = g
                        .f(a + 1, a, i, j, U)
                        .supercommutator(ctx, &g.dp(a + 1, h, k, V))
                        .mul_diff(ctx, U, V);
                    let mut rhs = Series::zero(uv(), g.order());
                    if i == k {
                        let e = (d.rp(a + 1, h) & d.rp(a + 1, i))
                            ^ (d.rp(a + 1, h) & d.rp(a, j))
                            ^ (d.rp(a, j) & d.rp(a + 1, k));
                        let mut acc = Series::zero(uv(), g.order());
                        for q in 1..=mu.part(a + 1) {
                            let diff = g
                                .f(a + 1, a, q, j, V)
                                .sub(ctx, &g.f(a + 1, a, q, j, U));
                            acc = acc.add(ctx, &g.dp(a + 1, h, q, V).mul(ctx, &diff));
                        }
                        rhs = acc.scale(ctx, d.sign(e));
                    }
                    rec.series(
                        ctx,
                        || format!("a={a} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared bracket of E and F blocks: diagonal-product right-hand side for
/// equal block indices, zero otherwise (checked without clearing).
pub(crate) fn gef_at(d: &FamilyData, a: usize, b: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(a) {
        for j in 1..=mu.part(a + 1) {
            for h in 1..=mu.part(b + 1) {
                for k in 1..=mu.part(b) {
                    let bracket = g
                        .e(a, a + 1, i, j, U)
                        .supercommutator(ctx, &g.f(b + 1, b, h, k, V));
                    if a != b {
                        rec.series_zero(
                            ctx,
                            || format!("a={a} b={b} i={i} j={j} h={h} k={k}"),
                            &bracket,
                        );
                        continue;
                    }
                    let lhs = bracket.mul_diff(ctx, U, V);
                    let e1 = (d.rp(a + 1, h) & d.rp(a, i))
                        ^ (d.rp(a, i) & d.rp(a + 1, j))
                        ^ (d.rp(a + 1, h) & d.rp(a + 1, j));
                    let e2 = (d.rp(a + 1, h) & d.rp(a, k))
                        ^ (d.rp(a + 1, j) & d.rp(a, k))
                        ^ (d.rp(a + 1, h) & d.rp(a + 1, j));
                    let t1 = g
                        .d(a + 1, h, j, U)
                        .mul(ctx, &g.dp(a, i, k, U))
                        .scale(ctx, d.sign(e1));
                    let t2 = g
                        .dp(a, i, k, V)
                        .mul(ctx, &g.d(a + 1, h, j, V))
                        .scale(ctx, d.sign(e2));
                    let rhs = t1.sub(ctx, &t2).extend_vars(uv());
                    rec.series(
                        ctx,
                        || format!("a={a} b={b} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared same-block E-E bracket: product of entry differences.
pub(crate) fn gee_at(d: &FamilyData, a: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(a) {
        for j in 1..=mu.part(a + 1) {
            for h in 1..=mu.part(a) {
                for k in 1..=mu.part(a + 1) {
                    let lhs = g
                        .e(a, a + 1, i, j, U)
                        .supercommutator(ctx, &g.e(a, a + 1, h, k, V))
                        .mul_diff(ctx, U, V);
                    let e = (d.rp(a, h) & d.rp(a + 1, j))
                        ^ (d.rp(a + 1, j) & d.rp(a + 1, k))
                        ^ (d.rp(a, h) & d.rp(a + 1, k));
                    let d1 = g
                        .e(a, a + 1, i, k, U)
                        .sub(ctx, &g.e(a, a + 1, i, k, V));
                    let d2 = g
                        .e(a, a + 1, h, j, U)
                        .sub(ctx, &g.e(a, a + 1, h, j, V));
                    let rhs = d1.mul(ctx, &d2).scale(ctx, d.sign(e));
                    rec.series(
                        ctx,
                        || format!("a={a} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared same-block F-F bracket: negated product of entry differences.
pub(crate) fn gff_at(d: &FamilyData, a: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(a + 1) {
        for j in 1..=mu.part(a) {
            for h in 1..=mu.part(a + 1) {
                for k in 1..=mu.part(a) {
                    let lhs = g
                        .f(a + 1, a, i, j, U)
                        .supercommutator(ctx, &g.f(a + 1, a, h, k, V))
                        .mul_diff(ctx, U, V);
                    let e = (d.rp(a + 1, i) & d.rp(a, j))
                        ^ (d.rp(a + 1, h) & d.rp(a + 1, i))
                        ^ (d.rp(a + 1, h) & d.rp(a, j));
                    let d1 = g
                        .f(a + 1, a, h, j, U)
                        .sub(ctx, &g.f(a + 1, a, h, j, V));
                    let d2 = g
                        .f(a + 1, a, i, k, U)
                        .sub(ctx, &g.f(a + 1, a, i, k, V));
                    let rhs = d1.mul(ctx, &d2).scale(ctx, d.sign(e)).neg(ctx);
                    rec.series(
                        ctx,
                        || format!("a={a} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared bracket of adjacent E blocks: one-step composite appears.
pub(crate) fn gee_next_at(d: &FamilyData, a: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(a) {
        for j in 1..=mu.part(a + 1) {
            for h in 1..=mu.part(a + 1) {
                for k in 1..=mu.part(a + 2) {
                    let lhs = g
                        .e(a, a + 1, i, j, U)
                        .supercommutator(ctx, &g.e(a + 1, a + 2, h, k, V))
                        .mul_diff(ctx, U, V);
                    let mut rhs = Series::zero(uv(), g.order());
                    if h == j {
                        let sgn = d.sign(d.rp(a + 1, j) & d.rp(a + 1, h));
                        let mut acc = Series::zero(uv(), g.order());
                        for q in 1..=mu.part(a + 1) {
                            let diff = g
                                .e(a, a + 1, i, q, U)
                                .sub(ctx, &g.e(a, a + 1, i, q, V));
                            acc = acc.add(ctx, &diff.mul(ctx, &g.e(a + 1, a + 2, q, k, V)));
                        }
                        acc = acc.add(ctx, &g.e(a, a + 2, i, k, V).extend_vars(uv()));
                        acc = acc.sub(ctx, &g.e(a, a + 2, i, k, U).extend_vars(uv()));
                        rhs = acc.scale(ctx, sgn);
                    }
                    rec.series(
                        ctx,
                        || format!("a={a} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// Cleared bracket of adjacent F blocks: one-step composite appears.
pub(crate) fn gff_next_at(d: &FamilyData, a: usize, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(a + 1) {
        for j in 1..=mu.part(a) {
            for h in 1..=mu.part(a + 2) {
                for k in 1..=mu.part(a + 1) {
                    let lhs = g
                        .f(a + 1, a, i, j, U)
                        .supercommutator(ctx, &g.f(a + 2, a + 1, h, k, V))
                        .mul_diff(ctx, U, V);
                    let mut rhs = Series::zero(uv(), g.order());
                    if i == k {
                        let e = (d.rp(a + 1, i) & d.rp(a, j))
                            ^ (d.rp(a + 1, i) & d.rp(a + 2, h))
                            ^ (d.rp(a, j) & d.rp(a + 2, h));
                        let mut acc = Series::zero(uv(), g.order());
                        for q in 1..=mu.part(a + 1) {
                            let diff = g
                                .f(a + 1, a, q, j, V)
                                .sub(ctx, &g.f(a + 1, a, q, j, U));
                            acc = acc.add(ctx, &g.f(a + 2, a + 1, h, q, V).mul(ctx, &diff));
                        }
                        acc = acc.sub(ctx, &g.f(a + 2, a, h, j, V).extend_vars(uv()));
                        acc = acc.add(ctx, &g.f(a + 2, a, h, j, U).extend_vars(uv()));
                        rhs = acc.scale(ctx, d.sign(e));
                    }
                    rec.series(
                        ctx,
                        || format!("a={a} i={i} j={j} h={h} k={k}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
}

/// First block commutes with the second F ladder (three blocks).
pub(crate) fn d1f2(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(1) {
        for j in 1..=mu.part(1) {
            for h in 1..=mu.part(3) {
                for k in 1..=mu.part(2) {
                    let lhs = g.d(1, i, j, U).supercommutator(ctx, &g.f(3, 2, h, k, V));
                    rec.series_zero(ctx, || format!("i={i} j={j} h={h} k={k}"), &lhs);
                }
            }
        }
    }
}

/// First F ladder commutes with the third inverse diagonal block.
pub(crate) fn f1d3(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(2) {
        for j in 1..=mu.part(1) {
            for h in 1..=mu.part(3) {
                for k in 1..=mu.part(3) {
                    let lhs = g.f(2, 1, i, j, U).supercommutator(ctx, &g.dp(3, h, k, V));
                    rec.series_zero(ctx, || format!("i={i} j={j} h={h} k={k}"), &lhs);
                }
            }
        }
    }
}

/// Long F composite against the third inverse diagonal block: nested
/// bracket right-hand side with a fixed pivot entry in the middle block.
pub(crate) fn d3f31(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for r in 1..=mu.part(2) {
        for i in 1..=mu.part(3) {
            for j in 1..=mu.part(1) {
                for h in 1..=mu.part(3) {
                    for k in 1..=mu.part(3) {
                        let lhs =
                            g.f(3, 1, i, j, U).supercommutator(ctx, &g.dp(3, h, k, V));
                        let mut rhs = Series::zero(uv(), g.order());
                        if i == k {
                            for m in 1..=mu.part(3) {
                                let e = (d.rp(1, j) & d.rp(3, i))
                                    ^ (d.rp(1, j) & d.rp(2, r))
                                    ^ (d.rp(3, h) & d.rp(3, i))
                                    ^ (d.rp(3, m) & d.rp(2, r))
                                    ^ (d.rp(3, h) & d.rp(1, j))
                                    ^ (d.rp(3, m) & d.rp(1, j));
                                let inner = g
                                    .f(2, 1, r, j, U)
                                    .supercommutator(ctx, &g.f(3, 2, m, r, V));
                                let term = g
                                    .dp(3, h, m, V)
                                    .extend_vars(uv())
                                    .mul(ctx, &inner)
                                    .scale(ctx, d.sign(e));
                                rhs = rhs.add(ctx, &term);
                            }
                            rhs = rhs.neg(ctx);
                        }
                        rec.series(
                            ctx,
                            || format!("pivot={r} i={i} j={j} h={h} k={k}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
}

/// First F ladder commutes with the second E ladder.
pub(crate) fn f1e2(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(2) {
        for j in 1..=mu.part(1) {
            for h in 1..=mu.part(2) {
                for k in 1..=mu.part(3) {
                    let lhs = g
                        .f(2, 1, i, j, U)
                        .supercommutator(ctx, &g.e(2, 3, h, k, V));
                    rec.series_zero(ctx, || format!("i={i} j={j} h={h} k={k}"), &lhs);
                }
            }
        }
    }
}

/// Long F composite against the second F ladder: right-hand side is a
/// bracket times a ladder entry, with a fixed pivot in the middle block.
pub(crate) fn f2f3(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for piv in 1..=mu.part(2) {
        for i in 1..=mu.part(3) {
            for j in 1..=mu.part(1) {
                for h in 1..=mu.part(3) {
                    for k in 1..=mu.part(2) {
                        let lhs = g
                            .f(3, 1, i, j, U)
                            .supercommutator(ctx, &g.f(3, 2, h, k, V));
                        let e = (d.rp(3, i) & d.rp(1, j))
                            ^ (d.rp(3, i) & d.rp(3, h))
                            ^ (d.rp(1, j) & d.rp(3, h))
                            ^ d.rp(2, piv);
                        let inner = g
                            .f(3, 2, h, piv, V)
                            .supercommutator(ctx, &g.f(2, 1, piv, j, U));
                        let rhs = inner
                            .mul(ctx, &g.f(3, 2, i, k, V).extend_vars(uv()))
                            .scale(ctx, d.sign(e))
                            .neg(ctx);
                        rec.series(
                            ctx,
                            || format!("pivot={piv} i={i} j={j} h={h} k={k}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
}

/// The primed long F composite (product minus composite) of three blocks.
fn f_primed_31(d: &FamilyData, h: usize, k: usize, var: Var) -> Series {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    let mut acc = Series::zero(VarSet::single(var), g.order());
    for w in 1..=mu.part(2) {
        acc = acc.add(
            ctx,
            &g.f(3, 2, h, w, var).mul(ctx, &g.f(2, 1, w, k, var)),
        );
    }
    acc.sub(ctx, &g.f(3, 1, h, k, var))
}

/// The primed long E composite (product minus composite) of three blocks.
fn e_primed_13(d: &FamilyData, h: usize, k: usize, var: Var) -> Series {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    let mut acc = Series::zero(VarSet::single(var), g.order());
    for w in 1..=mu.part(2) {
        acc = acc.add(
            ctx,
            &g.e(1, 2, h, w, var).mul(ctx, &g.e(2, 3, w, k, var)),
        );
    }
    acc.sub(ctx, &g.e(1, 3, h, k, var))
}

/// First F ladder against the primed long F composite.
pub(crate) fn f1f31(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for piv in 1..=mu.part(2) {
        for i in 1..=mu.part(2) {
            for j in 1..=mu.part(1) {
                for h in 1..=mu.part(3) {
                    for k in 1..=mu.part(1) {
                        let fp = f_primed_31(d, h, k, V).extend_vars(uv());
                        let lhs = g.f(2, 1, i, j, U).supercommutator(ctx, &fp);
                        let e = (d.rp(3, h) ^ d.rp(1, j)) & (d.rp(1, k) ^ d.rp(2, piv));
                        let inner = g
                            .f(2, 1, piv, j, U)
                            .supercommutator(ctx, &g.f(3, 2, h, piv, V));
                        let rhs = g
                            .f(2, 1, i, k, U)
                            .extend_vars(uv())
                            .mul(ctx, &inner)
                            .scale(ctx, d.sign(e));
                        rec.series(
                            ctx,
                            || format!("pivot={piv} i={i} j={j} h={h} k={k}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
}

/// First block commutes with the second E ladder.
pub(crate) fn d1e2(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(1) {
        for j in 1..=mu.part(1) {
            for h in 1..=mu.part(2) {
                for k in 1..=mu.part(3) {
                    let lhs = g.d(1, i, j, U).supercommutator(ctx, &g.e(2, 3, h, k, V));
                    rec.series_zero(ctx, || format!("i={i} j={j} h={h} k={k}"), &lhs);
                }
            }
        }
    }
}

/// First E ladder commutes with the third inverse diagonal block.
pub(crate) fn d3e1(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(1) {
        for j in 1..=mu.part(2) {
            for h in 1..=mu.part(3) {
                for k in 1..=mu.part(3) {
                    let lhs = g.e(1, 2, i, j, U).supercommutator(ctx, &g.dp(3, h, k, V));
                    rec.series_zero(ctx, || format!("i={i} j={j} h={h} k={k}"), &lhs);
                }
            }
        }
    }
}

/// First E ladder commutes with the second F ladder.
pub(crate) fn e1f2(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(1) {
        for j in 1..=mu.part(2) {
            for h in 1..=mu.part(3) {
                for k in 1..=mu.part(2) {
                    let lhs = g
                        .e(1, 2, i, j, U)
                        .supercommutator(ctx, &g.f(3, 2, h, k, V));
                    rec.series_zero(ctx, || format!("i={i} j={j} h={h} k={k}"), &lhs);
                }
            }
        }
    }
}

/// Long E composite against the third inverse diagonal block.
pub(crate) fn d3e13(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for piv in 1..=mu.part(2) {
        for i in 1..=mu.part(1) {
            for j in 1..=mu.part(3) {
                for h in 1..=mu.part(3) {
                    for k in 1..=mu.part(3) {
                        let lhs =
                            g.e(1, 3, i, j, U).supercommutator(ctx, &g.dp(3, h, k, V));
                        let mut rhs = Series::zero(uv(), g.order());
                        if h == j {
                            let e = 1 ^ d.rp(2, piv) ^ (d.rp(3, j) & d.rp(3, h));
                            let mut acc = Series::zero(uv(), g.order());
                            for gg in 1..=mu.part(3) {
                                let inner = g
                                    .e(1, 2, i, piv, U)
                                    .supercommutator(ctx, &g.e(2, 3, piv, gg, V));
                                acc = acc.add(
                                    ctx,
                                    &inner.mul(ctx, &g.dp(3, gg, k, V).extend_vars(uv())),
                                );
                            }
                            rhs = acc.scale(ctx, d.sign(e));
                        }
                        rec.series(
                            ctx,
                            || format!("pivot={piv} i={i} j={j} h={h} k={k}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
}

/// First block against the primed long E composite.
pub(crate) fn d1e13(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for piv in 1..=mu.part(2) {
        for i in 1..=mu.part(1) {
            for j in 1..=mu.part(1) {
                for h in 1..=mu.part(1) {
                    for k in 1..=mu.part(3) {
                        let ep = e_primed_13(d, h, k, V).extend_vars(uv());
                        let lhs = g.d(1, i, j, U).supercommutator(ctx, &ep);
                        let mut rhs = Series::zero(uv(), g.order());
                        if h == j {
                            let e = 1 ^ d.rp(2, piv) ^ (d.rp(1, j) & d.rp(1, h));
                            let mut acc = Series::zero(uv(), g.order());
                            for p in 1..=mu.part(1) {
                                let inner = g
                                    .e(1, 2, p, piv, U)
                                    .supercommutator(ctx, &g.e(2, 3, piv, k, V));
                                acc = acc.add(
                                    ctx,
                                    &g.d(1, i, p, U).extend_vars(uv()).mul(ctx, &inner),
                                );
                            }
                            rhs = acc.scale(ctx, d.sign(e));
                        }
                        rec.series(
                            ctx,
                            || format!("pivot={piv} i={i} j={j} h={h} k={k}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
}

/// Long E composite against the second E ladder, fixed pivot in the middle
/// block.
pub(crate) fn e13_e2(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for piv in 1..=mu.part(2) {
        for i in 1..=mu.part(1) {
            for j in 1..=mu.part(3) {
                for h in 1..=mu.part(2) {
                    for k in 1..=mu.part(3) {
                        let lhs = g
                            .e(1, 3, i, j, U)
                            .supercommutator(ctx, &g.e(2, 3, h, k, V));
                        let e = (d.rp(1, i) & d.rp(3, j))
                            ^ (d.rp(1, i) & d.rp(2, h))
                            ^ (d.rp(2, h) & d.rp(3, j))
                            ^ d.rp(2, piv);
                        let inner = g
                            .e(1, 2, i, piv, U)
                            .supercommutator(ctx, &g.e(2, 3, piv, k, V));
                        let rhs = g
                            .e(2, 3, h, j, V)
                            .extend_vars(uv())
                            .mul(ctx, &inner)
                            .scale(ctx, d.sign(e));
                        rec.series(
                            ctx,
                            || format!("pivot={piv} i={i} j={j} h={h} k={k}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
}

/// First E ladder against the primed long E composite, fixed pivot.
pub(crate) fn e1_e13(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for piv in 1..=mu.part(2) {
        for i in 1..=mu.part(1) {
            for j in 1..=mu.part(2) {
                for h in 1..=mu.part(1) {
                    for k in 1..=mu.part(3) {
                        let ep = e_primed_13(d, h, k, V).extend_vars(uv());
                        let lhs = g.e(1, 2, i, j, U).supercommutator(ctx, &ep);
                        let e = (d.rp(1, h) & d.rp(2, j))
                            ^ (d.rp(2, j) & d.rp(3, k))
                            ^ (d.rp(1, h) & d.rp(3, k))
                            ^ d.rp(2, piv);
                        let inner = g
                            .e(1, 2, i, piv, U)
                            .supercommutator(ctx, &g.e(2, 3, piv, k, V));
                        let rhs = inner
                            .mul(ctx, &g.e(1, 2, h, j, U).extend_vars(uv()))
                            .scale(ctx, d.sign(e));
                        rec.series(
                            ctx,
                            || format!("pivot={piv} i={i} j={j} h={h} k={k}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
}

/// Leading coefficient of the second F ladder against the third inverse
/// diagonal block.
pub(crate) fn f2_level1_dp3(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(3) {
        for j in 1..=mu.part(2) {
            for h in 1..=mu.part(3) {
                for k in 1..=mu.part(3) {
                    let x = g.f_elem(3, 2, i, j, 1);
                    let lhs = elem_bracket_series(ctx, &x, &g.dp(3, h, k, V));
                    let mut rhs = Series::zero(VarSet::single(V), g.order());
                    if i == k {
                        let e = (d.rp(3, h) & d.rp(3, i))
                            ^ (d.rp(3, h) & d.rp(2, j))
                            ^ (d.rp(2, j) & d.rp(3, k));
                        let mut acc = Series::zero(VarSet::single(V), g.order());
                        for m in 1..=mu.part(3) {
                            acc = acc.add(
                                ctx,
                                &g.dp(3, h, m, V).mul(ctx, &g.f(3, 2, m, j, V)),
                            );
                        }
                        rhs = acc.scale(ctx, d.sign(e));
                    }
                    rec.series(ctx, || format!("i={i} j={j} h={h} k={k}"), &lhs, &rhs);
                }
            }
        }
    }
}

/// Leading coefficient of the first F ladder against the second F ladder
/// yields the primed long composite.
pub(crate) fn f1_level1_f2(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for i in 1..=mu.part(2) {
        for j in 1..=mu.part(2) {
            for k in 1..=mu.part(1) {
                for h in 1..=mu.part(3) {
                    let x = g.f_elem(2, 1, i, k, 1);
                    let lhs = elem_bracket_series(ctx, &x, &g.f(3, 2, h, j, V));
                    let mut rhs = Series::zero(VarSet::single(V), g.order());
                    if i == j {
                        let e = (d.rp(2, i) & d.rp(1, k))
                            ^ (d.rp(2, i) & d.rp(3, h))
                            ^ (d.rp(1, k) & d.rp(3, h));
                        rhs = f_primed_31(d, h, k, V).scale(ctx, d.sign(e));
                    }
                    rec.series(ctx, || format!("i={i} j={j} k={k} h={h}"), &lhs, &rhs);
                }
            }
        }
    }
}

/// First diagonal block against the leading coefficient of the first F
/// ladder.
pub(crate) fn d1_f1_level1(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    for a in 1..=mu.part(2) {
        for i in 1..=mu.part(1) {
            for j in 1..=mu.part(1) {
                for k in 1..=mu.part(1) {
                    let x = g.f_elem(2, 1, a, k, 1);
                    let lhs = series_bracket_elem(ctx, &g.d(1, i, j, U), &x);
                    let mut rhs = Series::zero(VarSet::single(U), g.order());
                    if i == k {
                        let e = (d.rp(1, i) & d.rp(1, j))
                            ^ (d.rp(2, a) & d.rp(1, i))
                            ^ (d.rp(2, a) & d.rp(1, j));
                        let mut acc = Series::zero(VarSet::single(U), g.order());
                        for p in 1..=mu.part(1) {
                            acc = acc.add(
                                ctx,
                                &g.f(2, 1, a, p, U).mul(ctx, &g.d(1, p, j, U)),
                            );
                        }
                        rhs = acc.scale(ctx, d.sign(e)).neg(ctx);
                    }
                    rec.series(ctx, || format!("a={a} i={i} j={j} k={k}"), &lhs, &rhs);
                }
            }
        }
    }
}

/// Two-variable cubic constraint: bracketing an adjacent-pair bracket with
/// a second copy of the repeated factor at the same point vanishes.
pub(crate) fn serre(d: &FamilyData, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    let n = d.n();
    for a in 1..n {
        for b in 1..n {
            if a.abs_diff(b) != 1 {
                continue;
            }
            let (ar, ac) = if is_e { (a, a + 1) } else { (a + 1, a) };
            let (br, bc) = if is_e { (b, b + 1) } else { (b + 1, b) };
            for i in 1..=mu.part(ar) {
                for j in 1..=mu.part(ac) {
                    for h in 1..=mu.part(br) {
                        for k in 1..=mu.part(bc) {
                            for f in 1..=mu.part(br) {
                                for gg in 1..=mu.part(bc) {
                                    let x = if is_e {
                                        g.e(a, a + 1, i, j, U)
                                    } else {
                                        g.f(a + 1, a, i, j, U)
                                    };
                                    let y = if is_e {
                                        g.e(b, b + 1, h, k, V)
                                    } else {
                                        g.f(b + 1, b, h, k, V)
                                    };
                                    let z = if is_e {
                                        g.e(b, b + 1, f, gg, V)
                                    } else {
                                        g.f(b + 1, b, f, gg, V)
                                    };
                                    let lhs = x
                                        .supercommutator(ctx, &y)
                                        .supercommutator(ctx, &z);
                                    rec.series_zero(
                                        ctx,
                                        || {
                                            format!(
                                            "a={a} b={b} i={i} j={j} h={h} k={k} f={f} g={gg}"
                                        )
                                        },
                                        &lhs,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Three-variable symmetrized cubic constraint: swapping the two points of
/// the repeated factor changes the sign.
pub(crate) fn super_serre(d: &FamilyData, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.series;
    let mu = d.mu();
    let n = d.n();
    for a in 1..n {
        for b in 1..n {
            if a.abs_diff(b) != 1 {
                continue;
            }
            let (ar, ac) = if is_e { (a, a + 1) } else { (a + 1, a) };
            let (br, bc) = if is_e { (b, b + 1) } else { (b + 1, b) };
            let pick = |r: usize, c: usize, var: Var| {
                if is_e {
                    g.e(b, b + 1, r, c, var)
                } else {
                    g.f(b + 1, b, r, c, var)
                }
            };
            for i in 1..=mu.part(ar) {
                for j in 1..=mu.part(ac) {
                    for h in 1..=mu.part(br) {
                        for k in 1..=mu.part(bc) {
                            for f in 1..=mu.part(br) {
                                for gg in 1..=mu.part(bc) {
                                    let x = if is_e {
                                        g.e(a, a + 1, i, j, U)
                                    } else {
                                        g.f(a + 1, a, i, j, U)
                                    };
                                    let t1 = x
                                        .supercommutator(ctx, &pick(h, k, V))
                                        .supercommutator(ctx, &pick(f, gg, W));
                                    let t2 = x
                                        .supercommutator(ctx, &pick(h, k, W))
                                        .supercommutator(ctx, &pick(f, gg, V));
                                    let lhs = t1.add(ctx, &t2);
                                    rec.series_zero(
                                        ctx,
                                        || {
                                            format!(
                                            "a={a} b={b} i={i} j={j} h={h} k={k} f={f} g={gg}"
                                        )
                                        },
                                        &lhs,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
