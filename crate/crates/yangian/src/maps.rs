//! Structure-preserving maps between generating-matrix presentations.
//!
//! Seven maps, each determined by its images on the matrix coefficients
//! t^{(r)}_{i,j} and extended multiplicatively (or anti-multiplicatively,
//! with the sign rule for reversing a product of homogeneous factors):
//!
//! - `rho`: t_{i,j}(x) ↦ t_{ı,ȷ}(−x) with ı = size+1−i, into the algebra
//!   with flipped-and-reversed parity sequence — an isomorphism;
//! - `sigma_anti`: t_{i,j}(x) ↦ t_{i,j}(−x) — an involutive anti-automorphism;
//! - `antipode`: t_{i,j}(x) ↦ t′_{i,j}(x) (matrix inverse coefficients) —
//!   an anti-automorphism, not involutive;
//! - `omega`: t_{i,j}(x) ↦ t′_{i,j}(−x) — an involutive automorphism;
//! - `zeta` = rho ∘ omega: t_{i,j}(x) ↦ t′_{ı,ȷ}(x) in the flipped-reversed
//!   algebra — an isomorphism;
//! - `phi_shift` (by L): t^{(r)}_{i,j} ↦ t^{(r)}_{L+i,L+j}, from the algebra
//!   of the length-(size−L) suffix of the parity sequence — an embedding;
//! - `psi_shift` = omega ∘ phi_shift ∘ omega: images are the entries of the
//!   trailing Schur complement of T(x) eliminating the leading L×L corner.
//!
//! Maps whose images involve t′ only carry finitely much data, so they are
//! built with a level cap and refuse generators above it.
//!
//! The companion check functions verify, coefficient by coefficient, the
//! involution laws, the (anti-)multiplicativity, compatibility with the
//! defining commutation relations, the two factorization identities, the
//! interaction with block Gauss decompositions on both sides, and the
//! supercommutation between the leading corner and the shifted image.

use std::sync::Arc;

use crate::context::{AlgebraContext, Composition, SequenceTransform};
use crate::error::YangianError;
use crate::gauss::{gauss_decompose, CheckLog};
use crate::pbw::{Element, Gen};
use crate::series::{bordered_schur, t_matrix, tp_matrix, Var};

/// Which of the seven maps a [`GeneratorMap`] instance applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Rho,
    SigmaAnti,
    Antipode,
    Omega,
    Zeta,
    PhiShift,
    PsiShift,
}

/// A map fixed by its generator images, applied term by term to elements.
pub struct GeneratorMap {
    kind: MapKind,
    source: Arc<AlgebraContext>,
    target: Arc<AlgebraContext>,
    /// Highest generator level with a stored image; unlimited for the maps
    /// whose images are single generators.
    cap: usize,
    /// Index shift L for `phi_shift`/`psi_shift`; 0 otherwise.
    shift: usize,
    /// Apply with factor reversal and the corresponding sign.
    anti: bool,
    /// Stored images, indexed by ((i−1)·size + (j−1))·(cap+1) + r.
    images: Vec<Element>,
}

/// The algebra with swapped even/odd counts and flipped-reversed sequence.
fn dual_context(ctx: &AlgebraContext) -> Result<Arc<AlgebraContext>, YangianError> {
    let sd = ctx.sigma().transform(SequenceTransform::FlipReverse);
    AlgebraContext::new(ctx.p(), ctx.n(), ctx.m(), sd)
}

/// The algebra of the last `size − l` digits of `big`'s sequence.
fn suffix_context(big: &AlgebraContext, l: usize) -> Result<Arc<AlgebraContext>, YangianError> {
    if l >= big.size() {
        return Err(YangianError::Config(format!(
            "shift {l} leaves no trailing block in size {}",
            big.size()
        )));
    }
    let suffix = big.sigma().suffix(big.size() - l);
    AlgebraContext::new(big.p(), suffix.zeros(), suffix.ones(), suffix)
}

/// Flatten a matrix of series into an image table of its coefficients.
fn coefficient_table(
    m: &crate::series::MatrixSeries,
    size: usize,
    cap: usize,
    entry_for: impl Fn(usize, usize) -> (usize, usize),
) -> Vec<Element> {
    let mut images = Vec::with_capacity(size * size * (cap + 1));
    for i in 1..=size {
        for j in 1..=size {
            let (ei, ej) = entry_for(i, j);
            let s = m.entry(ei, ej);
            for r in 0..=cap {
                let mut exps = [0usize; 3];
                exps[Var::U.index()] = r;
                images.push(s.get(exps));
            }
        }
    }
    images
}

pub fn rho(ctx: &Arc<AlgebraContext>) -> Result<GeneratorMap, YangianError> {
    Ok(GeneratorMap {
        kind: MapKind::Rho,
        source: Arc::clone(ctx),
        target: dual_context(ctx)?,
        cap: usize::MAX,
        shift: 0,
        anti: false,
        images: Vec::new(),
    })
}

pub fn sigma_anti(ctx: &Arc<AlgebraContext>) -> GeneratorMap {
    GeneratorMap {
        kind: MapKind::SigmaAnti,
        source: Arc::clone(ctx),
        target: Arc::clone(ctx),
        cap: usize::MAX,
        shift: 0,
        anti: true,
        images: Vec::new(),
    }
}

pub fn antipode(ctx: &Arc<AlgebraContext>, cap: usize) -> GeneratorMap {
    let tp = tp_matrix(ctx, Var::U, cap);
    GeneratorMap {
        kind: MapKind::Antipode,
        source: Arc::clone(ctx),
        target: Arc::clone(ctx),
        cap,
        shift: 0,
        anti: true,
        images: coefficient_table(&tp, ctx.size(), cap, |i, j| (i, j)),
    }
}

pub fn omega(ctx: &Arc<AlgebraContext>, cap: usize) -> GeneratorMap {
    let tp = tp_matrix(ctx, Var::U, cap);
    let mut images = coefficient_table(&tp, ctx.size(), cap, |i, j| (i, j));
    // The sign (−1)^r from substituting −x for x.
    let field = *ctx.field();
    for (pos, e) in images.iter_mut().enumerate() {
        let r = pos % (cap + 1);
        if r % 2 == 1 {
            *e = e.scale(ctx, field.sign(1));
        }
    }
    GeneratorMap {
        kind: MapKind::Omega,
        source: Arc::clone(ctx),
        target: Arc::clone(ctx),
        cap,
        shift: 0,
        anti: false,
        images,
    }
}

pub fn zeta(ctx: &Arc<AlgebraContext>, cap: usize) -> Result<GeneratorMap, YangianError> {
    let target = dual_context(ctx)?;
    let tp = tp_matrix(&target, Var::U, cap);
    let size = ctx.size();
    let images = coefficient_table(&tp, size, cap, |i, j| (size + 1 - i, size + 1 - j));
    Ok(GeneratorMap {
        kind: MapKind::Zeta,
        source: Arc::clone(ctx),
        target,
        cap,
        shift: 0,
        anti: false,
        images,
    })
}

pub fn phi_shift(big: &Arc<AlgebraContext>, l: usize) -> Result<GeneratorMap, YangianError> {
    Ok(GeneratorMap {
        kind: MapKind::PhiShift,
        source: suffix_context(big, l)?,
        target: Arc::clone(big),
        cap: usize::MAX,
        shift: l,
        anti: false,
        images: Vec::new(),
    })
}

pub fn psi_shift(
    big: &Arc<AlgebraContext>,
    l: usize,
    cap: usize,
) -> Result<GeneratorMap, YangianError> {
    let source = suffix_context(big, l)?;
    let t = t_matrix(big, Var::U, cap);
    let rows: Vec<usize> = (l + 1..=big.size()).collect();
    let schur = bordered_schur(big, &t, l, &rows, &rows)?;
    let images = coefficient_table(&schur, source.size(), cap, |i, j| (i, j));
    Ok(GeneratorMap {
        kind: MapKind::PsiShift,
        source,
        target: Arc::clone(big),
        cap,
        shift: l,
        anti: false,
        images,
    })
}

impl GeneratorMap {
    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn source(&self) -> &Arc<AlgebraContext> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AlgebraContext> {
        &self.target
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    /// Highest level this map can be applied to.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The image of the generator t^{(r)}_{i,j} of the source algebra.
    pub fn image(&self, i: usize, j: usize, r: usize) -> Result<Element, YangianError> {
        let size = self.source.size();
        assert!(i >= 1 && i <= size && j >= 1 && j <= size, "index out of range");
        match self.kind {
            MapKind::Rho => {
                let sign = self.target.field().sign((r % 2) as u8);
                Ok(
                    Element::generator(&self.target, size + 1 - i, size + 1 - j, r)
                        .scale(&self.target, sign),
                )
            }
            MapKind::SigmaAnti => {
                let sign = self.target.field().sign((r % 2) as u8);
                Ok(Element::generator(&self.target, i, j, r).scale(&self.target, sign))
            }
            MapKind::PhiShift => Ok(Element::generator(
                &self.target,
                self.shift + i,
                self.shift + j,
                r,
            )),
            MapKind::Antipode | MapKind::Omega | MapKind::Zeta | MapKind::PsiShift => {
                if r > self.cap {
                    return Err(YangianError::LevelAboveTruncation {
                        level: r,
                        order: self.cap,
                    });
                }
                let pos = ((i - 1) * size + (j - 1)) * (self.cap + 1) + r;
                Ok(self.images[pos].clone())
            }
        }
    }

    /// Apply the map to an element, factor by factor. Anti maps reverse
    /// each word and multiply by the sign collected from commuting all
    /// pairs of odd factors past each other.
    pub fn apply(&self, e: &Element) -> Result<Element, YangianError> {
        let field = *self.target.field();
        let mut out = Element::zero();
        for (word, coeff) in e.terms() {
            let gens: Vec<Gen> = word.factors().to_vec();
            let mut sign_exp = 0u8;
            let ordered: Vec<Gen> = if self.anti {
                let parities: Vec<u8> = gens
                    .iter()
                    .map(|g| self.source.generator_parity(g.i(), g.j()))
                    .collect();
                for a in 0..parities.len() {
                    for b in a + 1..parities.len() {
                        sign_exp ^= parities[a] & parities[b];
                    }
                }
                gens.iter().rev().copied().collect()
            } else {
                gens
            };
            let c = field.mul(coeff, field.sign(sign_exp));
            let mut acc = Element::scalar(&self.target, c as i64);
            for g in ordered {
                acc = acc.mul(&self.target, &self.image(g.i(), g.j(), g.r())?);
            }
            out = out.add(&self.target, &acc);
        }
        Ok(out)
    }
}

/// Applying the map twice must return every generator to itself. The two
/// maps may be distinct instances (e.g. a map and its counterpart on the
/// dual algebra); the composite must land in the original algebra.
pub fn involution_check(
    first: &GeneratorMap,
    second: &GeneratorMap,
    levels: usize,
) -> Result<CheckLog, YangianError> {
    assert!(first.target.same_algebra(&second.source));
    assert!(second.target.same_algebra(&first.source));
    let ctx = &first.source;
    let mut log = CheckLog::new();
    for i in 1..=ctx.size() {
        for j in 1..=ctx.size() {
            for r in 1..=levels {
                let gen = Element::generator(ctx, i, j, r);
                let round = second.apply(&first.apply(&gen)?)?;
                let delta = round.sub(ctx, &gen);
                log.record(delta.is_zero(), || {
                    format!("double image of t({i},{j},{r}): delta {}", delta.to_text())
                });
            }
        }
    }
    Ok(log)
}

/// The map must send the defining commutation relations to zero: the image
/// of a straightened supercommutator equals the supercommutator of the
/// images (negated for anti maps).
pub fn rtt_image_check(map: &GeneratorMap, levels: usize) -> Result<CheckLog, YangianError> {
    let src = &map.source;
    let tgt = &map.target;
    let mut log = CheckLog::new();
    let size = src.size();
    for i in 1..=size {
        for j in 1..=size {
            for k in 1..=size {
                for l in 1..=size {
                    for r in 1..=levels {
                        for s in 1..=levels {
                            if r + s - 1 > levels {
                                continue;
                            }
                            let lhs = map.apply(&Element::rtt_bracket(src, i, j, r, k, l, s))?;
                            let mut rhs = map
                                .image(i, j, r)?
                                .supercommutator(tgt, &map.image(k, l, s)?);
                            if map.anti {
                                rhs = rhs.neg(tgt);
                            }
                            let delta = lhs.sub(tgt, &rhs);
                            log.record(delta.is_zero(), || {
                                format!(
                                    "bracket image t({i},{j},{r}), t({k},{l},{s}): delta {}",
                                    delta.to_text()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(log)
}

/// Multiplicativity on generator products: φ(xy) = φ(x)φ(y), or for anti
/// maps φ(xy) = ±φ(y)φ(x) with the parity sign of swapping x and y.
pub fn multiplicativity_check(map: &GeneratorMap, levels: usize) -> Result<CheckLog, YangianError> {
    let src = &map.source;
    let tgt = &map.target;
    let field = *tgt.field();
    let mut log = CheckLog::new();
    let size = src.size();
    for i in 1..=size {
        for j in 1..=size {
            for k in 1..=size {
                for l in 1..=size {
                    for r in 1..=levels {
                        for s in 1..=levels {
                            if r + s - 1 > levels {
                                continue;
                            }
                            let x = Element::generator(src, i, j, r);
                            let y = Element::generator(src, k, l, s);
                            let lhs = map.apply(&x.mul(src, &y))?;
                            let fx = map.image(i, j, r)?;
                            let fy = map.image(k, l, s)?;
                            let rhs = if map.anti {
                                let sign = field.sign(
                                    src.generator_parity(i, j) & src.generator_parity(k, l),
                                );
                                fy.mul(tgt, &fx).scale(tgt, sign)
                            } else {
                                fx.mul(tgt, &fy)
                            };
                            let delta = lhs.sub(tgt, &rhs);
                            log.record(delta.is_zero(), || {
                                format!(
                                    "product image t({i},{j},{r})·t({k},{l},{s}): delta {}",
                                    delta.to_text()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(log)
}

/// Every generator image must be parity homogeneous of the same parity as
/// its source generator.
pub fn parity_preservation_check(
    map: &GeneratorMap,
    levels: usize,
) -> Result<CheckLog, YangianError> {
    let src = &map.source;
    let tgt = &map.target;
    let mut log = CheckLog::new();
    for i in 1..=src.size() {
        for j in 1..=src.size() {
            for r in 1..=levels {
                let img = map.image(i, j, r)?;
                let expected = src.generator_parity(i, j);
                let ok = match img.parity(tgt) {
                    Some(p) => img.is_zero() || p == expected,
                    None => false,
                };
                log.record(ok, || {
                    format!(
                        "image of t({i},{j},{r}): parity {:?}, expected {expected}",
                        img.parity(tgt)
                    )
                });
            }
        }
    }
    Ok(log)
}

/// ζ must agree with ρ applied after ω, generator by generator.
pub fn zeta_factorization_check(
    ctx: &Arc<AlgebraContext>,
    levels: usize,
) -> Result<CheckLog, YangianError> {
    let om = omega(ctx, levels);
    let rh = rho(ctx)?;
    let ze = zeta(ctx, levels)?;
    let tgt = ze.target();
    let mut log = CheckLog::new();
    for i in 1..=ctx.size() {
        for j in 1..=ctx.size() {
            for r in 1..=levels {
                let direct = ze.image(i, j, r)?;
                let composed = rh.apply(&om.image(i, j, r)?)?;
                let delta = direct.sub(tgt, &composed);
                log.record(delta.is_zero(), || {
                    format!("t({i},{j},{r}): direct vs composed delta {}", delta.to_text())
                });
            }
        }
    }
    Ok(log)
}

/// The shifted embedding must agree with the composite route through the
/// involutions on both sides: Schur-complement images versus ω ∘ φ ∘ ω.
pub fn psi_factorization_check(
    big: &Arc<AlgebraContext>,
    l: usize,
    levels: usize,
) -> Result<CheckLog, YangianError> {
    let ps = psi_shift(big, l, levels)?;
    let om_small = omega(ps.source(), levels);
    let ph = phi_shift(big, l)?;
    let om_big = omega(big, levels);
    let mut log = CheckLog::new();
    for i in 1..=ps.source().size() {
        for j in 1..=ps.source().size() {
            for r in 1..=levels {
                let direct = ps.image(i, j, r)?;
                let composed = om_big.apply(&ph.apply(&om_small.image(i, j, r)?)?)?;
                let delta = direct.sub(big, &composed);
                log.record(delta.is_zero(), || {
                    format!("t({i},{j},{r}): direct vs composed delta {}", delta.to_text())
                });
            }
        }
    }
    Ok(log)
}

/// The shifted embedding sends inverse-matrix coefficients to the shifted
/// inverse-matrix coefficients: ψ(t′^{(r)}_{i,j}) = t′^{(r)}_{L+i,L+j}.
pub fn psi_primed_check(
    big: &Arc<AlgebraContext>,
    l: usize,
    levels: usize,
) -> Result<CheckLog, YangianError> {
    let ps = psi_shift(big, l, levels)?;
    let small = ps.source();
    let tp_small = tp_matrix(small, Var::U, levels);
    let tp_big = tp_matrix(big, Var::U, levels);
    let mut log = CheckLog::new();
    for i in 1..=small.size() {
        for j in 1..=small.size() {
            for r in 0..=levels {
                let mut exps = [0usize; 3];
                exps[Var::U.index()] = r;
                let mapped = ps.apply(&tp_small.entry(i, j).get(exps))?;
                let expected = tp_big.entry(l + i, l + j).get(exps);
                let delta = mapped.sub(big, &expected);
                log.record(delta.is_zero(), || {
                    format!("t'({i},{j},{r}): delta {}", delta.to_text())
                });
            }
        }
    }
    Ok(log)
}

/// With L the offset of block `a` of μ, the shifted embedding carries the
/// leading Gauss blocks of the suffix composition onto blocks at `a`:
/// ψ_L(D_1) = D_a, ψ_L(E_{1,2}) = E_{a,a+1}, ψ_L(F_{2,1}) = F_{a+1,a}.
pub fn psi_parabolic_check(
    big: &Arc<AlgebraContext>,
    mu: &Composition,
    a: usize,
    order: usize,
) -> Result<CheckLog, YangianError> {
    assert!(a >= 2 && a <= mu.n(), "block index must lie in 2..=n");
    let l = mu.offset(a);
    let ps = psi_shift(big, l, order)?;
    let suffix_mu = mu.suffix(a);
    let g_small = gauss_decompose(ps.source(), &suffix_mu, Var::U, order)?;
    let g_big = gauss_decompose(big, mu, Var::U, order)?;
    let mut log = CheckLog::new();
    for i in 1..=mu.part(a) {
        for j in 1..=mu.part(a) {
            for r in 0..=order {
                let mapped = ps.apply(&g_small.d_elem(1, i, j, r))?;
                let delta = mapped.sub(big, &g_big.d_elem(a, i, j, r));
                log.record(delta.is_zero(), || {
                    format!("D block ({i},{j}) level {r}: delta {}", delta.to_text())
                });
            }
        }
    }
    if a < mu.n() {
        for i in 1..=mu.part(a) {
            for j in 1..=mu.part(a + 1) {
                for r in 1..=order {
                    let mapped = ps.apply(&g_small.e_elem(1, 2, i, j, r))?;
                    let delta = mapped.sub(big, &g_big.e_elem(a, a + 1, i, j, r));
                    log.record(delta.is_zero(), || {
                        format!("E block ({i},{j}) level {r}: delta {}", delta.to_text())
                    });
                    let mapped = ps.apply(&g_small.f_elem(2, 1, j, i, r))?;
                    let delta = mapped.sub(big, &g_big.f_elem(a + 1, a, j, i, r));
                    log.record(delta.is_zero(), || {
                        format!("F block ({j},{i}) level {r}: delta {}", delta.to_text())
                    });
                }
            }
        }
    }
    Ok(log)
}

/// ζ turns the decomposition upside down: for the reversed composition on
/// the target side,
///   ζ(D^{(r)}_{a;i,j})   = D̄′^{(r)}_{n+1−a; μ_a+1−i, μ_a+1−j},
///   ζ(E^{(r)}_{a,b;i,j}) = F̄̃^{(r)}_{n+1−a,n+1−b; μ_a+1−i, μ_b+1−j},
///   ζ(F^{(r)}_{b,a;i,j}) = Ē̃^{(r)}_{n+1−b,n+1−a; μ_b+1−i, μ_a+1−j},
/// where Ē̃/F̄̃ are the chain-sum blocks of the inverse triangular factors;
/// for adjacent blocks these reduce to −Ē and −F̄.
pub fn zeta_parabolic_check(
    ctx: &Arc<AlgebraContext>,
    mu: &Composition,
    order: usize,
) -> Result<CheckLog, YangianError> {
    let ze = zeta(ctx, order)?;
    let tgt = ze.target().clone();
    let rev = mu.reversed();
    let g_src = gauss_decompose(ctx, mu, Var::U, order)?;
    let g_tgt = gauss_decompose(&tgt, &rev, Var::U, order)?;
    let n = mu.n();
    let mut log = CheckLog::new();
    for a in 1..=n {
        for i in 1..=mu.part(a) {
            for j in 1..=mu.part(a) {
                for r in 0..=order {
                    let mapped = ze.apply(&g_src.d_elem(a, i, j, r))?;
                    let expected =
                        g_tgt.dp_elem(n + 1 - a, mu.part(a) + 1 - i, mu.part(a) + 1 - j, r);
                    let delta = mapped.sub(&tgt, &expected);
                    log.record(delta.is_zero(), || {
                        format!("D_{a} ({i},{j}) level {r}: delta {}", delta.to_text())
                    });
                }
            }
        }
    }
    let coeff = |m: &crate::series::MatrixSeries, i: usize, j: usize, r: usize| {
        let mut exps = [0usize; 3];
        exps[Var::U.index()] = r;
        m.entry(i, j).get(exps)
    };
    for a in 1..n {
        for b in a + 1..=n {
            let ft = g_tgt.ft_block(n + 1 - a, n + 1 - b);
            let et = g_tgt.et_block(n + 1 - b, n + 1 - a);
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(b) {
                    for r in 1..=order {
                        let mapped = ze.apply(&g_src.e_elem(a, b, i, j, r))?;
                        let expected =
                            coeff(ft, mu.part(a) + 1 - i, mu.part(b) + 1 - j, r);
                        let delta = mapped.sub(&tgt, &expected);
                        log.record(delta.is_zero(), || {
                            format!("E_{a},{b} ({i},{j}) level {r}: delta {}", delta.to_text())
                        });
                        let mapped = ze.apply(&g_src.f_elem(b, a, j, i, r))?;
                        let expected =
                            coeff(et, mu.part(b) + 1 - j, mu.part(a) + 1 - i, r);
                        let delta = mapped.sub(&tgt, &expected);
                        log.record(delta.is_zero(), || {
                            format!("F_{b},{a} ({j},{i}) level {r}: delta {}", delta.to_text())
                        });
                    }
                }
            }
        }
    }
    Ok(log)
}

/// Generators of the leading L×L corner supercommute with every image of
/// the shifted embedding.
pub fn corner_commute_check(
    big: &Arc<AlgebraContext>,
    l: usize,
    levels: usize,
) -> Result<CheckLog, YangianError> {
    let ps = psi_shift(big, l, levels)?;
    let mut log = CheckLog::new();
    for i in 1..=l {
        for j in 1..=l {
            for r in 1..=levels {
                let corner = Element::generator(big, i, j, r);
                for k in 1..=ps.source().size() {
                    for t in 1..=ps.source().size() {
                        for s in 1..=levels {
                            let image = ps.image(k, t, s)?;
                            let bracket = corner.supercommutator(big, &image);
                            log.record(bracket.is_zero(), || {
                                format!(
                                    "[t({i},{j},{r}), psi t({k},{t},{s})]: {}",
                                    bracket.to_text()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(log)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Sequence01;

    fn ctx(p: u64, m: usize, n: usize, sigma: &str) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, m, n, Sequence01::parse(sigma).unwrap()).unwrap()
    }

    #[test]
    fn rho_round_trips_through_the_dual_algebra() {
        let c = ctx(5, 2, 1, "010");
        let first = rho(&c).unwrap();
        let second = rho(first.target()).unwrap();
        assert!(second.target().same_algebra(&c));
        let log = involution_check(&first, &second, 3).unwrap();
        assert!(log.all_passed(), "failures: {:?}", log.failures);
    }

    #[test]
    fn sign_flip_is_an_involutive_anti_map() {
        let c = ctx(3, 1, 1, "01");
        let m = sigma_anti(&c);
        let log = involution_check(&m, &m, 3).unwrap();
        assert!(log.all_passed(), "failures: {:?}", log.failures);
        let log = multiplicativity_check(&m, 3).unwrap();
        assert!(log.all_passed(), "failures: {:?}", log.failures);
    }

    #[test]
    fn omega_is_an_involutive_automorphism() {
        for c in [ctx(3, 1, 1, "10"), ctx(5, 2, 1, "001")] {
            let m = omega(&c, 4);
            let log = involution_check(&m, &m, 2).unwrap();
            assert!(log.all_passed(), "failures: {:?}", log.failures);
            let log = multiplicativity_check(&m, 2).unwrap();
            assert!(log.all_passed(), "failures: {:?}", log.failures);
        }
    }

    #[test]
    fn antipode_is_anti_but_not_involutive() {
        let c = ctx(5, 1, 1, "01");
        let m = antipode(&c, 4);
        let log = multiplicativity_check(&m, 2).unwrap();
        assert!(log.all_passed(), "failures: {:?}", log.failures);
        // S² fixes level one but moves higher levels.
        let g = Element::generator(&c, 1, 1, 2);
        let twice = m.apply(&m.apply(&g).unwrap()).unwrap();
        assert!(!twice.sub(&c, &g).is_zero());
    }

    #[test]
    fn all_maps_respect_the_defining_relations() {
        let c = ctx(3, 1, 1, "01");
        let levels = 3;
        let maps: Vec<GeneratorMap> = vec![
            rho(&c).unwrap(),
            sigma_anti(&c),
            antipode(&c, levels),
            omega(&c, levels),
            zeta(&c, levels).unwrap(),
        ];
        for m in &maps {
            let log = rtt_image_check(m, levels).unwrap();
            assert!(log.all_passed(), "{:?}: failures {:?}", m.kind(), log.failures);
        }
        let big = ctx(3, 2, 1, "010");
        for m in [phi_shift(&big, 1).unwrap(), psi_shift(&big, 1, levels).unwrap()] {
            let log = rtt_image_check(&m, levels).unwrap();
            assert!(log.all_passed(), "{:?}: failures {:?}", m.kind(), log.failures);
        }
    }

    #[test]
    fn all_maps_preserve_parity() {
        let c = ctx(3, 2, 1, "100");
        let levels = 3;
        for m in [
            rho(&c).unwrap(),
            sigma_anti(&c),
            antipode(&c, levels),
            omega(&c, levels),
            zeta(&c, levels).unwrap(),
            phi_shift(&c, 1).unwrap(),
            psi_shift(&c, 1, levels).unwrap(),
        ] {
            let log = parity_preservation_check(&m, levels).unwrap();
            assert!(log.all_passed(), "{:?}: failures {:?}", m.kind(), log.failures);
        }
    }

    #[test]
    fn zeta_matches_rho_after_omega() {
        for c in [ctx(3, 1, 1, "01"), ctx(5, 2, 1, "010")] {
            let log = zeta_factorization_check(&c, 3).unwrap();
            assert!(log.all_passed(), "failures: {:?}", log.failures);
        }
    }

    #[test]
    fn shifted_embedding_agrees_with_composite_route() {
        let big = ctx(3, 2, 1, "010");
        for l in [1, 2] {
            let log = psi_factorization_check(&big, l, 3).unwrap();
            assert!(log.all_passed(), "shift {l} failures: {:?}", log.failures);
        }
    }

    #[test]
    fn shifted_embedding_shifts_primed_coefficients() {
        let big = ctx(3, 2, 1, "001");
        let log = psi_primed_check(&big, 1, 3).unwrap();
        assert!(log.all_passed(), "failures: {:?}", log.failures);
    }

    #[test]
    fn shifted_embedding_carries_gauss_blocks() {
        let big = ctx(3, 2, 2, "0101");
        let mu = Composition::new(vec![1, 2, 1], 4).unwrap();
        for a in 2..=3 {
            let log = psi_parabolic_check(&big, &mu, a, 2).unwrap();
            assert!(log.all_passed(), "block {a} failures: {:?}", log.failures);
        }
    }

    #[test]
    fn zeta_turns_gauss_blocks_upside_down() {
        let c = ctx(3, 2, 1, "010");
        for parts in [vec![1, 2], vec![2, 1], vec![1, 1, 1]] {
            let mu = Composition::new(parts, 3).unwrap();
            let log = zeta_parabolic_check(&c, &mu, 2).unwrap();
            assert!(log.all_passed(), "failures: {:?}", log.failures);
        }
    }

    #[test]
    fn corner_supercommutes_with_shifted_image() {
        let big = ctx(3, 2, 1, "010");
        let log = corner_commute_check(&big, 1, 2).unwrap();
        assert!(log.all_passed(), "failures: {:?}", log.failures);
        let log = corner_commute_check(&big, 2, 2).unwrap();
        assert!(log.all_passed(), "failures: {:?}", log.failures);
    }

    #[test]
    fn level_cap_is_enforced_for_inverse_based_maps() {
        let c = ctx(5, 1, 1, "01");
        let m = omega(&c, 2);
        assert!(matches!(
            m.image(1, 1, 3),
            Err(YangianError::LevelAboveTruncation { level: 3, order: 2 })
        ));
        let g = Element::generator(&c, 1, 2, 3);
        assert!(m.apply(&g).is_err());
    }
}
