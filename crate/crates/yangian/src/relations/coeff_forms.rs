//! Coefficient-level family checkers: exact identities between PBW normal
//! forms at fixed levels, with no series truncation involved.

use super::{FamilyData, Recorder, RelationConfig};
use crate::pbw::Element;

/// Level-r generating-matrix coefficient, with the level-0 convention
/// t^{(0)}_{ij} = δ_{ij}.
fn t_gen(d: &FamilyData, i: usize, j: usize, r: usize) -> Element {
    let ctx = d.ctx();
    if r == 0 {
        if i == j {
            Element::scalar(ctx, 1)
        } else {
            Element::zero()
        }
    } else {
        Element::generator(ctx, i, j, r)
    }
}

/// Defining relation, coefficient form: the straightened supercommutator
/// of two generators equals the signed convolution sum.
pub(crate) fn rtt(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let size = ctx.size();
    for i in 1..=size {
        for j in 1..=size {
            for k in 1..=size {
                for l in 1..=size {
                    let pi = ctx.parity_of_index(i);
                    let pj = ctx.parity_of_index(j);
                    let pk = ctx.parity_of_index(k);
                    let sgn = d.sign((pi & pj) ^ (pi & pk) ^ (pj & pk));
                    for r in 1..=cfg.gen_order {
                        for s in 1..=cfg.gen_order {
                            let x = Element::generator(ctx, i, j, r);
                            let y = Element::generator(ctx, k, l, s);
                            let lhs = x.supercommutator(ctx, &y);
                            let mut rhs = Element::zero();
                            for t in 0..r.min(s) {
                                let t1 = t_gen(d, k, j, t)
                                    .mul(ctx, &t_gen(d, i, l, r + s - 1 - t));
                                let t2 = t_gen(d, k, j, r + s - 1 - t)
                                    .mul(ctx, &t_gen(d, i, l, t));
                                rhs = rhs.add(ctx, &t1).sub(ctx, &t2);
                            }
                            let delta = lhs.sub(ctx, &rhs.scale(ctx, sgn));
                            rec.element(
                                || format!("i={i} j={j} r={r} k={k} l={l} s={s}"),
                                &delta,
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Level-0 diagonal-block coefficients are the identity matrix (both the
/// block and its inverse).
pub(crate) fn d_level_zero(d: &FamilyData, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    for a in 1..=d.n() {
        for i in 1..=mu.part(a) {
            for j in 1..=mu.part(a) {
                let expect = t_gen(d, i, j, 0);
                let delta = g.d_elem(a, i, j, 0).sub(ctx, &expect);
                rec.element(|| format!("D a={a} i={i} j={j}"), &delta);
                let delta = g.dp_elem(a, i, j, 0).sub(ctx, &expect);
                rec.element(|| format!("D' a={a} i={i} j={j}"), &delta);
            }
        }
    }
}

/// The diagonal block convolved with its inverse gives the identity at
/// every level.
pub(crate) fn d_convolution(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    for a in 1..=d.n() {
        for i in 1..=mu.part(a) {
            for j in 1..=mu.part(a) {
                for r in 0..=cfg.gen_order {
                    let mut acc = Element::zero();
                    for p in 1..=mu.part(a) {
                        for t in 0..=r {
                            acc = acc.add(
                                ctx,
                                &g.d_elem(a, i, p, t).mul(ctx, &g.dp_elem(a, p, j, r - t)),
                            );
                        }
                    }
                    let expect = if r == 0 && i == j {
                        Element::scalar(ctx, 1)
                    } else {
                        Element::zero()
                    };
                    let delta = acc.sub(ctx, &expect);
                    rec.element(|| format!("a={a} i={i} j={j} r={r}"), &delta);
                }
            }
        }
    }
}

/// Brackets of diagonal-block coefficients: same block follows the
/// convolution rule, different blocks supercommute.
pub(crate) fn dd_bracket(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    for a in 1..=d.n() {
        for b in 1..=d.n() {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a) {
                    for h in 1..=mu.part(b) {
                        for k in 1..=mu.part(b) {
                            for r in 1..=cfg.gen_order {
                                for s in 1..=cfg.gen_order {
                                    let lhs = g
                                        .d_elem(a, i, j, r)
                                        .supercommutator(ctx, &g.d_elem(b, h, k, s));
                                    let mut rhs = Element::zero();
                                    if a == b {
                                        let e = (d.rp(a, i) & d.rp(a, j))
                                            ^ (d.rp(a, i) & d.rp(a, h))
                                            ^ (d.rp(a, j) & d.rp(a, h));
                                        for t in 0..r.min(s) {
                                            let t1 = g.d_elem(a, h, j, t).mul(
                                                ctx,
                                                &g.d_elem(a, i, k, r + s - 1 - t),
                                            );
                                            let t2 = g
                                                .d_elem(a, h, j, r + s - 1 - t)
                                                .mul(ctx, &g.d_elem(a, i, k, t));
                                            rhs = rhs.add(ctx, &t1).sub(ctx, &t2);
                                        }
                                        rhs = rhs.scale(ctx, d.sign(e));
                                    }
                                    let delta = lhs.sub(ctx, &rhs);
                                    rec.element(
                                        || {
                                            format!(
                                            "a={a} b={b} i={i} j={j} h={h} k={k} r={r} s={s}"
                                        )
                                        },
                                        &delta,
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

/// Bracket of a diagonal-block coefficient with an adjacent E-ladder
/// coefficient.
pub(crate) fn p_daeb(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    for a in 1..=n {
        for b in 1..n {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a) {
                    for h in 1..=mu.part(b) {
                        for k in 1..=mu.part(b + 1) {
                            for r in 1..=cfg.gen_order {
                                for s in 1..=cfg.gen_order {
                                    let lhs = g.d_elem(a, i, j, r).supercommutator(
                                        ctx,
                                        &g.e_elem(b, b + 1, h, k, s),
                                    );
                                    let mut rhs = Element::zero();
                                    if a == b && h == j {
                                        let sgn = d.sign(d.rp(a, h) & d.rp(a, j));
                                        let mut acc = Element::zero();
                                        for p in 1..=mu.part(a) {
                                            for t in 0..r {
                                                acc = acc.add(
                                                    ctx,
                                                    &g.d_elem(a, i, p, t).mul(
                                                        ctx,
                                                        &g.e_elem(
                                                            b,
                                                            b + 1,
                                                            p,
                                                            k,
                                                            r + s - 1 - t,
                                                        ),
                                                    ),
                                                );
                                            }
                                        }
                                        rhs = rhs.add(ctx, &acc.scale(ctx, sgn));
                                    }
                                    if a == b + 1 {
                                        let e = (d.rp(b, h) & d.rp(a, k))
                                            ^ (d.rp(b, h) & d.rp(a, j))
                                            ^ (d.rp(a, j) & d.rp(a, k));
                                        let mut acc = Element::zero();
                                        for t in 0..r {
                                            acc = acc.add(
                                                ctx,
                                                &g.d_elem(a, i, k, t).mul(
                                                    ctx,
                                                    &g.e_elem(b, b + 1, h, j, r + s - 1 - t),
                                                ),
                                            );
                                        }
                                        rhs = rhs.sub(ctx, &acc.scale(ctx, d.sign(e)));
                                    }
                                    let delta = lhs.sub(ctx, &rhs);
                                    rec.element(
                                        || {
                                            format!(
                                            "a={a} b={b} i={i} j={j} h={h} k={k} r={r} s={s}"
                                        )
                                        },
                                        &delta,
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

/// Bracket of a diagonal-block coefficient with an adjacent F-ladder
/// coefficient.
pub(crate) fn p_dafb(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    for a in 1..=n {
        for b in 1..n {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a) {
                    for h in 1..=mu.part(b + 1) {
                        for k in 1..=mu.part(b) {
                            for r in 1..=cfg.gen_order {
                                for s in 1..=cfg.gen_order {
                                    let lhs = g.d_elem(a, i, j, r).supercommutator(
                                        ctx,
                                        &g.f_elem(b + 1, b, h, k, s),
                                    );
                                    let mut rhs = Element::zero();
                                    if a == b && i == k {
                                        let e = (d.rp(a, i) & d.rp(a, j))
                                            ^ (d.rp(a + 1, h) & d.rp(a, i))
                                            ^ (d.rp(a + 1, h) & d.rp(a, j));
                                        let mut acc = Element::zero();
                                        for p in 1..=mu.part(a) {
                                            for t in 0..r {
                                                acc = acc.add(
                                                    ctx,
                                                    &g.f_elem(
                                                        b + 1,
                                                        b,
                                                        h,
                                                        p,
                                                        r + s - 1 - t,
                                                    )
                                                    .mul(ctx, &g.d_elem(a, p, j, t)),
                                                );
                                            }
                                        }
                                        rhs = rhs.sub(ctx, &acc.scale(ctx, d.sign(e)));
                                    }
                                    if a == b + 1 {
                                        let e = (d.rp(a, h) & d.rp(b, k))
                                            ^ (d.rp(a, h) & d.rp(a, j))
                                            ^ (d.rp(a, j) & d.rp(b, k));
                                        let mut acc = Element::zero();
                                        for t in 0..r {
                                            acc = acc.add(
                                                ctx,
                                                &g.f_elem(b + 1, b, i, k, r + s - 1 - t)
                                                    .mul(ctx, &g.d_elem(a, h, j, t)),
                                            );
                                        }
                                        rhs = rhs.add(ctx, &acc.scale(ctx, d.sign(e)));
                                    }
                                    let delta = lhs.sub(ctx, &rhs);
                                    rec.element(
                                        || {
                                            format!(
                                            "a={a} b={b} i={i} j={j} h={h} k={k} r={r} s={s}"
                                        )
                                        },
                                        &delta,
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

/// Bracket of E- and F-ladder coefficients: a diagonal convolution for
/// equal block indices, zero otherwise.
pub(crate) fn p_eafb(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    for a in 1..n {
        for b in 1..n {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a + 1) {
                    for h in 1..=mu.part(b + 1) {
                        for k in 1..=mu.part(b) {
                            for r in 1..=cfg.gen_order {
                                for s in 1..=cfg.gen_order {
                                    let lhs = g.e_elem(a, a + 1, i, j, r).supercommutator(
                                        ctx,
                                        &g.f_elem(b + 1, b, h, k, s),
                                    );
                                    let mut rhs = Element::zero();
                                    if a == b {
                                        let e = (d.rp(a + 1, h) & d.rp(a, k))
                                            ^ (d.rp(a + 1, j) & d.rp(a, k))
                                            ^ (d.rp(a + 1, h) & d.rp(a + 1, j))
                                            ^ 1;
                                        let mut acc = Element::zero();
                                        for t in 0..=(r + s - 1) {
                                            acc = acc.add(
                                                ctx,
                                                &g.dp_elem(a, i, k, r + s - 1 - t)
                                                    .mul(ctx, &g.d_elem(a + 1, h, j, t)),
                                            );
                                        }
                                        rhs = acc.scale(ctx, d.sign(e));
                                    }
                                    let delta = lhs.sub(ctx, &rhs);
                                    rec.element(
                                        || {
                                            format!(
                                            "a={a} b={b} i={i} j={j} h={h} k={k} r={r} s={s}"
                                        )
                                        },
                                        &delta,
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

/// Same-block ladder coefficient brackets: signed difference of two
/// convolution ranges (E and F versions differ by which range is first).
pub(crate) fn p_exex(d: &FamilyData, cfg: &RelationConfig, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    for a in 1..d.n() {
        let (rows, cols) = if is_e { (a, a + 1) } else { (a + 1, a) };
        for i in 1..=mu.part(rows) {
            for j in 1..=mu.part(cols) {
                for h in 1..=mu.part(rows) {
                    for k in 1..=mu.part(cols) {
                        let e = if is_e {
                            (d.rp(a, h) & d.rp(a + 1, j))
                                ^ (d.rp(a + 1, j) & d.rp(a + 1, k))
                                ^ (d.rp(a, h) & d.rp(a + 1, k))
                        } else {
                            (d.rp(a + 1, h) & d.rp(a, j))
                                ^ (d.rp(a, j) & d.rp(a, k))
                                ^ (d.rp(a + 1, h) & d.rp(a, k))
                        };
                        let pick = |r1: usize, c1: usize, lvl: usize| {
                            if is_e {
                                g.e_elem(a, a + 1, r1, c1, lvl)
                            } else {
                                g.f_elem(a + 1, a, r1, c1, lvl)
                            }
                        };
                        for r in 1..=cfg.gen_order {
                            for s in 1..=cfg.gen_order {
                                let lhs = pick(i, j, r).supercommutator(ctx, &pick(h, k, s));
                                let mut rhs = Element::zero();
                                let (first, second) = if is_e { (s, r) } else { (r, s) };
                                for t in 1..first {
                                    rhs = rhs.add(
                                        ctx,
                                        &pick(i, k, r + s - 1 - t).mul(ctx, &pick(h, j, t)),
                                    );
                                }
                                for t in 1..second {
                                    rhs = rhs.sub(
                                        ctx,
                                        &pick(i, k, r + s - 1 - t).mul(ctx, &pick(h, j, t)),
                                    );
                                }
                                rhs = rhs.scale(ctx, d.sign(e));
                                let delta = lhs.sub(ctx, &rhs);
                                rec.element(
                                    || format!("a={a} i={i} j={j} h={h} k={k} r={r} s={s}"),
                                    &delta,
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Adjacent-block ladder coefficients: the level-shift difference of two
/// brackets collapses to a single convolution.
pub(crate) fn p_xx_next(d: &FamilyData, cfg: &RelationConfig, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    if cfg.gen_order < 2 {
        return;
    }
    for a in 1..=n.saturating_sub(2) {
        if is_e {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a + 1) {
                    for h in 1..=mu.part(a + 1) {
                        for k in 1..=mu.part(a + 2) {
                            for r in 1..cfg.gen_order {
                                for s in 1..cfg.gen_order {
                                    let b1 = g.e_elem(a, a + 1, i, j, r + 1).supercommutator(
                                        ctx,
                                        &g.e_elem(a + 1, a + 2, h, k, s),
                                    );
                                    let b2 = g.e_elem(a, a + 1, i, j, r).supercommutator(
                                        ctx,
                                        &g.e_elem(a + 1, a + 2, h, k, s + 1),
                                    );
                                    let lhs = b1.sub(ctx, &b2);
                                    let mut rhs = Element::zero();
                                    if h == j {
                                        let sgn =
                                            d.sign(d.rp(a + 1, j) & d.rp(a + 1, h));
                                        let mut acc = Element::zero();
                                        for q in 1..=mu.part(a + 1) {
                                            acc = acc.add(
                                                ctx,
                                                &g.e_elem(a, a + 1, i, q, r).mul(
                                                    ctx,
                                                    &g.e_elem(a + 1, a + 2, q, k, s),
                                                ),
                                            );
                                        }
                                        rhs = acc.scale(ctx, sgn);
                                    }
                                    let delta = lhs.sub(ctx, &rhs);
                                    rec.element(
                                        || {
                                            format!(
                                                "a={a} i={i} j={j} h={h} k={k} r={r} s={s}"
                                            )
                                        },
                                        &delta,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        } else {
            for i in 1..=mu.part(a + 1) {
                for j in 1..=mu.part(a) {
                    for h in 1..=mu.part(a + 2) {
                        for k in 1..=mu.part(a + 1) {
                            for r in 1..cfg.gen_order {
                                for s in 1..cfg.gen_order {
                                    let b1 = g.f_elem(a + 1, a, i, j, r + 1).supercommutator(
                                        ctx,
                                        &g.f_elem(a + 2, a + 1, h, k, s),
                                    );
                                    let b2 = g.f_elem(a + 1, a, i, j, r).supercommutator(
                                        ctx,
                                        &g.f_elem(a + 2, a + 1, h, k, s + 1),
                                    );
                                    let lhs = b1.sub(ctx, &b2);
                                    let mut rhs = Element::zero();
                                    if i == k {
                                        let e = (d.rp(a + 1, i)
                                            & (d.rp(a, j) ^ d.rp(a + 2, h)))
                                            ^ (d.rp(a, j) & d.rp(a + 2, h))
                                            ^ 1;
                                        let mut acc = Element::zero();
                                        for q in 1..=mu.part(a + 1) {
                                            acc = acc.add(
                                                ctx,
                                                &g.f_elem(a + 2, a + 1, h, q, s).mul(
                                                    ctx,
                                                    &g.f_elem(a + 1, a, q, j, r),
                                                ),
                                            );
                                        }
                                        rhs = acc.scale(ctx, d.sign(e));
                                    }
                                    let delta = lhs.sub(ctx, &rhs);
                                    rec.element(
                                        || {
                                            format!(
                                                "a={a} i={i} j={j} h={h} k={k} r={r} s={s}"
                                            )
                                        },
                                        &delta,
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

/// Vanishing ladder-coefficient brackets: distant blocks always, adjacent
/// blocks when the inner entries differ.
pub(crate) fn pc_xx(d: &FamilyData, cfg: &RelationConfig, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    for a in 1..n {
        for b in (a + 1)..n {
            let (ar, ac) = if is_e { (a, a + 1) } else { (a + 1, a) };
            let (br, bc) = if is_e { (b, b + 1) } else { (b + 1, b) };
            for i in 1..=mu.part(ar) {
                for j in 1..=mu.part(ac) {
                    for h in 1..=mu.part(br) {
                        for k in 1..=mu.part(bc) {
                            if b == a + 1 {
                                // Adjacent blocks vanish only off the inner
                                // matching entries.
                                let inner_differs =
                                    if is_e { h != j } else { i != k };
                                if !inner_differs {
                                    continue;
                                }
                            }
                            for r in 1..=cfg.gen_order {
                                for s in 1..=cfg.gen_order {
                                    let x = if is_e {
                                        g.e_elem(a, a + 1, i, j, r)
                                    } else {
                                        g.f_elem(a + 1, a, i, j, r)
                                    };
                                    let y = if is_e {
                                        g.e_elem(b, b + 1, h, k, s)
                                    } else {
                                        g.f_elem(b + 1, b, h, k, s)
                                    };
                                    let delta = x.supercommutator(ctx, &y);
                                    rec.element(
                                        || {
                                            format!(
                                            "a={a} b={b} i={i} j={j} h={h} k={k} r={r} s={s}"
                                        )
                                        },
                                        &delta,
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

/// Cubic constraint with the repeated adjacent factor at one level.
pub(crate) fn cubic_serre(d: &FamilyData, cfg: &RelationConfig, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    let cap = cfg.cubic_cap();
    for a in 1..n {
        for b in 1..n {
            if a.abs_diff(b) != 1 {
                continue;
            }
            let (ar, ac) = if is_e { (a, a + 1) } else { (a + 1, a) };
            let (br, bc) = if is_e { (b, b + 1) } else { (b + 1, b) };
            let pick = |blk: usize, r1: usize, c1: usize, lvl: usize| {
                if is_e {
                    g.e_elem(blk, blk + 1, r1, c1, lvl)
                } else {
                    g.f_elem(blk + 1, blk, r1, c1, lvl)
                }
            };
            for i in 1..=mu.part(ar) {
                for j in 1..=mu.part(ac) {
                    for h in 1..=mu.part(br) {
                        for k in 1..=mu.part(bc) {
                            for f in 1..=mu.part(br) {
                                for gg in 1..=mu.part(bc) {
                                    for r in 1..=cap {
                                        for t in 1..=cap {
                                            let delta = pick(a, i, j, r)
                                                .supercommutator(ctx, &pick(b, h, k, t))
                                                .supercommutator(ctx, &pick(b, f, gg, t));
                                            rec.element(
                                                || {
                                                    format!(
                                                "a={a} b={b} i={i} j={j} h={h} k={k} f={f} g={gg} r={r} t={t}"
                                            )
                                                },
                                                &delta,
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
    }
}

/// Symmetrized cubic constraint: swapping the levels of the two same-block
/// outer factors flips the sign.
pub(crate) fn cubic_super(d: &FamilyData, cfg: &RelationConfig, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    let cap = cfg.cubic_cap();
    for a in 1..n {
        for b in 1..n {
            if a.abs_diff(b) != 1 {
                continue;
            }
            let (ar, ac) = if is_e { (a, a + 1) } else { (a + 1, a) };
            let (br, bc) = if is_e { (b, b + 1) } else { (b + 1, b) };
            let pick = |blk: usize, r1: usize, c1: usize, lvl: usize| {
                if is_e {
                    g.e_elem(blk, blk + 1, r1, c1, lvl)
                } else {
                    g.f_elem(blk + 1, blk, r1, c1, lvl)
                }
            };
            for i in 1..=mu.part(ar) {
                for j in 1..=mu.part(ac) {
                    for h in 1..=mu.part(ar) {
                        for k in 1..=mu.part(ac) {
                            for f in 1..=mu.part(br) {
                                for gg in 1..=mu.part(bc) {
                                    for r in 1..=cap {
                                        for s in 1..=cap {
                                            for l in 1..=cap {
                                                let inner1 = pick(a, h, k, s)
                                                    .supercommutator(ctx, &pick(b, f, gg, l));
                                                let t1 = pick(a, i, j, r)
                                                    .supercommutator(ctx, &inner1);
                                                let inner2 = pick(a, h, k, r)
                                                    .supercommutator(ctx, &pick(b, f, gg, l));
                                                let t2 = pick(a, i, j, s)
                                                    .supercommutator(ctx, &inner2);
                                                let delta = t1.add(ctx, &t2);
                                                rec.element(
                                                    || {
                                                        format!(
                                                "a={a} b={b} i={i} j={j} h={h} k={k} f={f} g={gg} r={r} s={s} l={l}"
                                            )
                                                    },
                                                    &delta,
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
        }
    }
}

/// Level-symmetrized cubic constraint for F ladders: the level travels
/// with its entry pair when the two repeated factors are exchanged.
pub(crate) fn rst_coeffi(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    let cap = cfg.cubic_cap();
    for a in 1..n {
        for b in 1..n {
            if a.abs_diff(b) != 1 {
                continue;
            }
            for i in 1..=mu.part(a + 1) {
                for j in 1..=mu.part(a) {
                    for h in 1..=mu.part(b + 1) {
                        for k in 1..=mu.part(b) {
                            for f in 1..=mu.part(b + 1) {
                                for gg in 1..=mu.part(b) {
                                    for r in 1..=cap {
                                        for s in 1..=cap {
                                            for t in 1..=cap {
                                                let x = g.f_elem(a + 1, a, i, j, r);
                                                let y = g.f_elem(b + 1, b, h, k, s);
                                                let z = g.f_elem(b + 1, b, f, gg, t);
                                                let t1 = x
                                                    .supercommutator(ctx, &y)
                                                    .supercommutator(ctx, &z);
                                                let t2 = x
                                                    .supercommutator(ctx, &z)
                                                    .supercommutator(ctx, &y);
                                                let delta = t1.add(ctx, &t2);
                                                rec.element(
                                                    || {
                                                        format!(
                                                "a={a} b={b} i={i} j={j} h={h} k={k} f={f} g={gg} r={r} s={s} t={t}"
                                            )
                                                    },
                                                    &delta,
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
        }
    }
}

/// Quartic constraint chaining three consecutive ladders, with the two
/// middle factors at level one.
pub(crate) fn quartic_serre(d: &FamilyData, cfg: &RelationConfig, is_e: bool, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    let cap = cfg.quartic_cap();
    for a in 1..=n.saturating_sub(3) {
        for r in 1..=cap {
            for s in 1..=cap {
                if is_e {
                    for i in 1..=mu.part(a) {
                        for f1 in 1..=mu.part(a + 1) {
                            for f2 in 1..=mu.part(a + 1) {
                                for j in 1..=mu.part(a + 2) {
                                    for h in 1..=mu.part(a + 1) {
                                        for g1 in 1..=mu.part(a + 2) {
                                            for g2 in 1..=mu.part(a + 2) {
                                                for k in 1..=mu.part(a + 3) {
                                                    let left = g
                                                        .e_elem(a, a + 1, i, f1, r)
                                                        .supercommutator(
                                                            ctx,
                                                            &g.e_elem(
                                                                a + 1,
                                                                a + 2,
                                                                f2,
                                                                j,
                                                                1,
                                                            ),
                                                        );
                                                    let right = g
                                                        .e_elem(a + 1, a + 2, h, g1, 1)
                                                        .supercommutator(
                                                            ctx,
                                                            &g.e_elem(
                                                                a + 2,
                                                                a + 3,
                                                                g2,
                                                                k,
                                                                s,
                                                            ),
                                                        );
                                                    let delta =
                                                        left.supercommutator(ctx, &right);
                                                    rec.element(
                                                        || {
                                                            format!(
                                                    "a={a} r={r} s={s} i={i} f1={f1} f2={f2} j={j} h={h} g1={g1} g2={g2} k={k}"
                                                )
                                                        },
                                                        &delta,
                                                    );
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                } else {
                    for i in 1..=mu.part(a) {
                        for f1 in 1..=mu.part(a + 1) {
                            for f2 in 1..=mu.part(a + 1) {
                                for j in 1..=mu.part(a + 2) {
                                    for h in 1..=mu.part(a + 1) {
                                        for g1 in 1..=mu.part(a + 2) {
                                            for g2 in 1..=mu.part(a + 2) {
                                                for k in 1..=mu.part(a + 3) {
                                                    let left = g
                                                        .f_elem(a + 1, a, f1, i, r)
                                                        .supercommutator(
                                                            ctx,
                                                            &g.f_elem(
                                                                a + 2,
                                                                a + 1,
                                                                j,
                                                                f2,
                                                                1,
                                                            ),
                                                        );
                                                    let right = g
                                                        .f_elem(a + 2, a + 1, g1, h, 1)
                                                        .supercommutator(
                                                            ctx,
                                                            &g.f_elem(
                                                                a + 3,
                                                                a + 2,
                                                                k,
                                                                g2,
                                                                s,
                                                            ),
                                                        );
                                                    let delta =
                                                        left.supercommutator(ctx, &right);
                                                    rec.element(
                                                        || {
                                                            format!(
                                                    "a={a} r={r} s={s} i={i} f1={f1} f2={f2} j={j} h={h} g1={g1} g2={g2} k={k}"
                                                )
                                                        },
                                                        &delta,
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
            }
        }
    }
}
