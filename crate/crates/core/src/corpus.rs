//! Seeded random matrix generators for cross-validation corpora and benches.
//!
//! Nothing in the algebra draws randomness; callers pass their own RNG.

use rand::Rng;

use crate::determinant::rank_defect_certificate;
use crate::semiring::{ratio, TropScalar};
use crate::tensor::TropMatrix;

/// Relative weights of the entry kinds and the integer magnitude range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMix {
    pub real: u32,
    pub ghost: u32,
    pub neg_inf: u32,
    pub min: i64,
    pub max: i64,
    /// When above 1, magnitudes are drawn as `p / q` with `q` in `1..=denominator`.
    pub denominator: i64,
}

impl Default for EntryMix {
    fn default() -> Self {
        EntryMix {
            real: 60,
            ghost: 25,
            neg_inf: 15,
            min: -9,
            max: 9,
            denominator: 1,
        }
    }
}

impl EntryMix {
    /// 60% `-inf`, the remainder mostly real.
    pub fn sparse() -> Self {
        EntryMix {
            real: 30,
            ghost: 10,
            neg_inf: 60,
            ..EntryMix::default()
        }
    }

    /// Finite real entries only.
    pub fn real_only(min: i64, max: i64) -> Self {
        EntryMix {
            real: 1,
            ghost: 0,
            neg_inf: 0,
            min,
            max,
            denominator: 1,
        }
    }

    fn total(&self) -> u32 {
        self.real + self.ghost + self.neg_inf
    }
}

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, mix: &EntryMix) -> TropScalar {
    let pick = rng.random_range(0..mix.total().max(1));
    let draw = |rng: &mut R| {
        let q = if mix.denominator > 1 {
            rng.random_range(1..=mix.denominator)
        } else {
            1
        };
        let p = rng.random_range(mix.min * q..=mix.max * q);
        ratio(p, q)
    };
    if pick < mix.real {
        TropScalar::Real(draw(rng))
    } else if pick < mix.real + mix.ghost {
        TropScalar::Ghost(draw(rng))
    } else {
        TropScalar::NegInf
    }
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, mix: &EntryMix) -> TropMatrix {
    let data = (0..rows * cols).map(|_| random_scalar(rng, mix)).collect();
    TropMatrix::new(rows, cols, data).expect("nonempty shape")
}

/// Column conditions on `0` and `0^ν` entries that force singularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroPattern {
    /// Every column holds a `0` or `0^ν` entry.
    ZeroInEveryColumn,
    /// Every column holds two `0` entries or a `0^ν` entry.
    TwoZerosOrGhostZero,
    /// Every column holds a `0^ν` entry.
    GhostZeroInEveryColumn,
}

/// A square matrix with all entries `⪯ 0^ν`, the requested column shape and
/// a determinant other than `-inf`.
pub fn zero_pattern_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, shape: ZeroPattern) -> TropMatrix {
    loop {
        let mut rows: Vec<Vec<TropScalar>> = (0..n)
            .map(|_| (0..n).map(|_| below_ghost_zero(rng)).collect())
            .collect();
        for c in 0..n {
            let r = rng.random_range(0..n);
            match shape {
                ZeroPattern::ZeroInEveryColumn => {
                    rows[r][c] = if rng.random_bool(0.5) {
                        TropScalar::real(0)
                    } else {
                        TropScalar::ghost_of(0)
                    };
                }
                ZeroPattern::GhostZeroInEveryColumn => rows[r][c] = TropScalar::ghost_of(0),
                ZeroPattern::TwoZerosOrGhostZero => {
                    if n < 2 || rng.random_bool(0.4) {
                        rows[r][c] = TropScalar::ghost_of(0);
                    } else {
                        let other = (r + rng.random_range(1..n)) % n;
                        rows[r][c] = TropScalar::real(0);
                        rows[other][c] = TropScalar::real(0);
                    }
                }
            }
        }
        let a = TropMatrix::from_rows(rows).expect("square");
        if rank_defect_certificate(&a).expect("square").is_none() {
            return a;
        }
    }
}

fn below_ghost_zero<R: Rng + ?Sized>(rng: &mut R) -> TropScalar {
    match rng.random_range(0..100) {
        0..15 => TropScalar::NegInf,
        15..70 => TropScalar::real(rng.random_range(-9..=-1)),
        70..85 => TropScalar::ghost_of(rng.random_range(-9..=-1)),
        85..95 => TropScalar::real(0),
        _ => TropScalar::ghost_of(0),
    }
}
