//! Leading-symbol family checkers.
//!
//! The filtration puts a level-r coefficient in degree r − 1, and degrees
//! add under multiplication.  Each family here takes a bracket of
//! composite-ladder coefficients, extracts its top-degree part in the
//! associated graded algebra (the current algebra), and compares against
//! the expected image computed directly from current-algebra generators.
//! A bracket whose actual degree exceeds the expected top degree is itself
//! a counterexample and is recorded as one.

use super::{Failure, FamilyData, Recorder, RelationConfig};
use crate::pbw::{gr_leading_symbol, CurrentAlgebraElement, Element};

/// Expected image of a level-r composite-ladder coefficient: a signed
/// current-algebra generator at polynomial degree r − 1.
fn im(d: &FamilyData, a: usize, b: usize, i: usize, j: usize, r: usize) -> CurrentAlgebraElement {
    let ctx = d.ctx();
    let mu = d.mu();
    let row = mu.offset(a) + i;
    let col = mu.offset(b) + j;
    CurrentAlgebraElement::generator(ctx, row, col, r - 1)
        .scale(ctx, d.sign(ctx.parity_of_index(row)))
}

/// Record `gr(bracket) == expected` at the given degree, treating degree
/// overflow as a failure.
fn check_gr(
    d: &FamilyData,
    rec: &mut Recorder,
    indices: impl FnOnce() -> String,
    x: &Element,
    y: &Element,
    deg: usize,
    expected: &CurrentAlgebraElement,
) {
    let ctx = d.ctx();
    let br = x.supercommutator(ctx, y);
    rec.checked += 1;
    match gr_leading_symbol(ctx, &br, deg) {
        Ok(sym) => {
            let delta = sym.sub(ctx, expected);
            if !delta.is_zero() {
                rec.failures.push(Failure {
                    indices: indices(),
                    delta: delta.to_text(),
                });
            }
        }
        Err(e) => rec.failures.push(Failure {
            indices: indices(),
            delta: format!("degree overflow: {e}"),
        }),
    }
}

/// Level pairs (r, s) with r, s >= 1 and r + s bounded by the quadratic
/// cap plus one.
fn level_pairs(cfg: &RelationConfig) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 1..=cfg.gen_order {
        for s in 1..=cfg.gen_order {
            if r + s <= cfg.gen_order + 1 {
                out.push((r, s));
            }
        }
    }
    out
}

/// Images and the full bracket table of composite-ladder coefficients at
/// the leading-symbol level.
pub(crate) fn inj(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();

    // Image statement: the leading symbol of each coefficient is the
    // expected signed current-algebra generator.
    for a in 1..n {
        for b in (a + 1)..=n {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(b) {
                    for r in 1..=cfg.gen_order {
                        let x = g.e_elem(a, b, i, j, r);
                        rec.checked += 1;
                        match gr_leading_symbol(ctx, &x, r - 1) {
                            Ok(sym) => {
                                let delta = sym.sub(ctx, &im(d, a, b, i, j, r));
                                if !delta.is_zero() {
                                    rec.failures.push(Failure {
                                        indices: format!("image a={a} b={b} i={i} j={j} r={r}"),
                                        delta: delta.to_text(),
                                    });
                                }
                            }
                            Err(e) => rec.failures.push(Failure {
                                indices: format!("image a={a} b={b} i={i} j={j} r={r}"),
                                delta: format!("degree overflow: {e}"),
                            }),
                        }
                    }
                }
            }
        }
    }

    // Bracket statement: leading symbols multiply like current-algebra
    // matrix units.
    for a in 1..n {
        for b in (a + 1)..=n {
            for c in 1..n {
                for dd in (c + 1)..=n {
                    for i in 1..=mu.part(a) {
                        for j in 1..=mu.part(b) {
                            for h in 1..=mu.part(c) {
                                for k in 1..=mu.part(dd) {
                                    for &(r, s) in &level_pairs(cfg) {
                                        let x = g.e_elem(a, b, i, j, r);
                                        let y = g.e_elem(c, dd, h, k, s);
                                        let mut expected = CurrentAlgebraElement::zero();
                                        if b == c && h == j {
                                            let sgn = d.sign(d.rp(b, j) & d.rp(c, h));
                                            expected = expected.add(
                                                ctx,
                                                &im(d, a, dd, i, k, r + s - 1)
                                                    .scale(ctx, sgn),
                                            );
                                        }
                                        if a == dd && i == k {
                                            let e = (d.rp(a, i) & d.rp(b, j))
                                                ^ (d.rp(a, i) & d.rp(c, h))
                                                ^ (d.rp(b, j) & d.rp(c, h));
                                            expected = expected.sub(
                                                ctx,
                                                &im(d, c, b, h, j, r + s - 1)
                                                    .scale(ctx, d.sign(e)),
                                            );
                                        }
                                        check_gr(
                                            d,
                                            rec,
                                            || {
                                                format!(
                                            "a={a} b={b} c={c} d={dd} i={i} j={j} h={h} k={k} r={r} s={s}"
                                        )
                                            },
                                            &x,
                                            &y,
                                            r + s - 2,
                                            &expected,
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

/// Vanishing leading-symbol brackets for five block-pair shapes.
pub(crate) fn inj_zero_pairs(
    d: &FamilyData,
    cfg: &RelationConfig,
    which: usize,
    rec: &mut Recorder,
) {
    let n = d.n();
    let mut shapes: Vec<(usize, usize, usize, usize)> = Vec::new();
    match which {
        1 => {
            for a in 1..=n.saturating_sub(2) {
                shapes.push((a, a + 2, a + 1, a + 2));
            }
        }
        2 => {
            for a in 1..=n.saturating_sub(2) {
                shapes.push((a, a + 1, a, a + 2));
            }
        }
        3 => {
            for a in 1..=n.saturating_sub(3) {
                shapes.push((a, a + 2, a + 1, a + 3));
            }
        }
        4 => {
            for a in 1..n {
                for b in (a + 1)..=n {
                    for c in a..b {
                        shapes.push((a, b, c, c + 1));
                    }
                }
            }
        }
        5 => {
            for a in 1..n {
                for b in 1..n {
                    if a.abs_diff(b) != 1 {
                        shapes.push((a, a + 1, b, b + 1));
                    }
                }
            }
        }
        _ => unreachable!("unknown zero-pair shape"),
    }
    let g = d.coeff;
    let mu = d.mu();
    let zero = CurrentAlgebraElement::zero();
    for (a, b, c, dd) in shapes {
        for i in 1..=mu.part(a) {
            for j in 1..=mu.part(b) {
                for h in 1..=mu.part(c) {
                    for k in 1..=mu.part(dd) {
                        for &(r, s) in &level_pairs(cfg) {
                            let x = g.e_elem(a, b, i, j, r);
                            let y = g.e_elem(c, dd, h, k, s);
                            check_gr(
                                d,
                                rec,
                                || {
                                    format!(
                                        "a={a} b={b} c={c} d={dd} i={i} j={j} h={h} k={k} r={r} s={s}"
                                    )
                                },
                                &x,
                                &y,
                                r + s - 2,
                                &zero,
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Level-shift invariance of adjacent-ladder leading-symbol brackets.
pub(crate) fn inj_ladder(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let ctx = d.ctx();
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    for a in 1..n {
        for b in 1..n {
            if a.abs_diff(b) != 1 {
                continue;
            }
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a + 1) {
                    for h in 1..=mu.part(b) {
                        for k in 1..=mu.part(b + 1) {
                            for r in 1..cfg.gen_order {
                                for s in 1..cfg.gen_order {
                                    let deg = r + s - 1;
                                    let b1 = g.e_elem(a, a + 1, i, j, r + 1).supercommutator(
                                        ctx,
                                        &g.e_elem(b, b + 1, h, k, s),
                                    );
                                    let b2 = g.e_elem(a, a + 1, i, j, r).supercommutator(
                                        ctx,
                                        &g.e_elem(b, b + 1, h, k, s + 1),
                                    );
                                    rec.checked += 1;
                                    let s1 = gr_leading_symbol(ctx, &b1, deg);
                                    let s2 = gr_leading_symbol(ctx, &b2, deg);
                                    match (s1, s2) {
                                        (Ok(x1), Ok(x2)) => {
                                            let delta = x1.sub(ctx, &x2);
                                            if !delta.is_zero() {
                                                rec.failures.push(Failure {
                                                    indices: format!(
                                                    "a={a} b={b} i={i} j={j} h={h} k={k} r={r} s={s}"
                                                ),
                                                    delta: delta.to_text(),
                                                });
                                            }
                                        }
                                        (e1, e2) => {
                                            let msg = e1
                                                .err()
                                                .or(e2.err())
                                                .map(|e| e.to_string())
                                                .unwrap_or_default();
                                            rec.failures.push(Failure {
                                                indices: format!(
                                                "a={a} b={b} i={i} j={j} h={h} k={k} r={r} s={s}"
                                            ),
                                                delta: format!("degree overflow: {msg}"),
                                            });
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

/// Antisymmetry of the nested adjacent-ladder bracket under swapping the
/// two same-block levels, at the leading-symbol level.
pub(crate) fn inj_antisym(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
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
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a + 1) {
                    for h in 1..=mu.part(a) {
                        for k in 1..=mu.part(a + 1) {
                            for f in 1..=mu.part(b) {
                                for gg in 1..=mu.part(b + 1) {
                                    for r in 1..=cap {
                                        for s in 1..=cap {
                                            for t in 1..=cap {
                                                let deg = r + s + t - 3;
                                                let n1 = g
                                                    .e_elem(a, a + 1, i, j, r)
                                                    .supercommutator(
                                                        ctx,
                                                        &g.e_elem(a, a + 1, h, k, s)
                                                            .supercommutator(
                                                                ctx,
                                                                &g.e_elem(
                                                                    b,
                                                                    b + 1,
                                                                    f,
                                                                    gg,
                                                                    t,
                                                                ),
                                                            ),
                                                    );
                                                let n2 = g
                                                    .e_elem(a, a + 1, i, j, s)
                                                    .supercommutator(
                                                        ctx,
                                                        &g.e_elem(a, a + 1, h, k, r)
                                                            .supercommutator(
                                                                ctx,
                                                                &g.e_elem(
                                                                    b,
                                                                    b + 1,
                                                                    f,
                                                                    gg,
                                                                    t,
                                                                ),
                                                            ),
                                                    );
                                                let total = n1.add(ctx, &n2);
                                                rec.checked += 1;
                                                match gr_leading_symbol(ctx, &total, deg) {
                                                    Ok(sym) => {
                                                        if !sym.is_zero() {
                                                            rec.failures.push(Failure {
                                                                indices: format!(
                                                            "a={a} b={b} i={i} j={j} h={h} k={k} f={f} g={gg} r={r} s={s} t={t}"
                                                        ),
                                                                delta: sym.to_text(),
                                                            });
                                                        }
                                                    }
                                                    Err(e) => rec.failures.push(Failure {
                                                        indices: format!(
                                                        "a={a} b={b} i={i} j={j} h={h} k={k} f={f} g={gg} r={r} s={s} t={t}"
                                                    ),
                                                        delta: format!("degree overflow: {e}"),
                                                    }),
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

/// Composite leading symbols split through any intermediate block, from
/// either end.
pub(crate) fn inj_splice(d: &FamilyData, cfg: &RelationConfig, rec: &mut Recorder) {
    let g = d.coeff;
    let mu = d.mu();
    let n = d.n();
    for a in 1..n {
        for b in (a + 2)..=n {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(b) {
                    for r in 1..=cfg.gen_order {
                        for h in 1..=mu.part(b - 1) {
                            let x = g.e_elem(a, b - 1, i, h, r);
                            let y = g.e_elem(b - 1, b, h, j, 1);
                            let expected =
                                im(d, a, b, i, j, r).scale(d.ctx(), d.sign(d.rp(b - 1, h)));
                            check_gr(
                                d,
                                rec,
                                || format!("tail a={a} b={b} i={i} j={j} r={r} h={h}"),
                                &x,
                                &y,
                                r - 1,
                                &expected,
                            );
                        }
                        for k in 1..=mu.part(a + 1) {
                            let x = g.e_elem(a, a + 1, i, k, 1);
                            let y = g.e_elem(a + 1, b, k, j, r);
                            let expected =
                                im(d, a, b, i, j, r).scale(d.ctx(), d.sign(d.rp(a + 1, k)));
                            check_gr(
                                d,
                                rec,
                                || format!("head a={a} b={b} i={i} j={j} r={r} k={k}"),
                                &x,
                                &y,
                                r - 1,
                                &expected,
                            );
                        }
                    }
                }
            }
        }
    }
}
