//! Seeded cross-validation over a random corpus.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supertrop::corpus::{random_matrix, EntryMix};
use supertrop::determinant::{det_expand, is_singular, rank_defect_certificate};
use supertrop::inverse::{pseudo_inverse, verify_pseudo_inverse};
use supertrop::rank::{rank, square_witness};
use supertrop::{det, DetMethod, TropError, TropMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCount {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub seed: u64,
    pub matrices: usize,
    pub properties: Vec<PropertyCount>,
}

impl CheckSummary {
    pub fn failures(&self) -> usize {
        self.properties.iter().map(|p| p.failed).sum()
    }
}

type Property = (&'static str, fn(&TropMatrix) -> Option<bool>);

/// Each property returns `None` when it does not apply to the matrix.
const PROPERTIES: [Property; 5] = [
    ("determinant methods agree", |a| {
        let brute = det(a, DetMethod::Brute).ok()?;
        let rows_agree = a.rows() < 2 || (1..=a.rows()).all(|i| det_expand(a, i).is_ok_and(|d| d == brute));
        Some(rows_agree && det(a, DetMethod::Fast).is_ok_and(|d| d == brute))
    }),
    ("rank < n iff singular", |a| {
        Some((rank(a).ok()? < a.rows()) == is_singular(a).ok()?)
    }),
    ("witness validates", |a| {
        if !is_singular(a).ok()? {
            return None;
        }
        Some(square_witness(a).is_ok_and(|w| w.validate(&a.row_vectors())))
    }),
    ("pseudo-inverse verifies", |a| {
        Some(match pseudo_inverse(a) {
            Ok(inv) => verify_pseudo_inverse(a, &inv).unwrap_or(false),
            Err(TropError::Singular) => is_singular(a).unwrap_or(false),
            Err(_) => false,
        })
    }),
    ("rank defect iff -inf", |a| {
        let neg_inf = det(a, DetMethod::Auto).ok()?.is_neg_inf();
        Some(match rank_defect_certificate(a) {
            Ok(Some(cert)) => neg_inf && cert.verify(a),
            Ok(None) => !neg_inf,
            Err(_) => false,
        })
    }),
];

/// `count` matrices for each size `1..=max_n`, half over the default entry
/// mix and half over the sparse one.
pub fn corpus(seed: u64, max_n: usize, count: usize) -> Vec<TropMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(max_n * count);
    for n in 1..=max_n {
        for k in 0..count {
            let mix = if k % 2 == 0 { EntryMix::default() } else { EntryMix::sparse() };
            out.push(random_matrix(&mut rng, n, n, &mix));
        }
    }
    out
}

pub fn run_check(seed: u64, max_n: usize, count: usize) -> CheckSummary {
    let matrices = corpus(seed, max_n, count);
    let properties = PROPERTIES
        .iter()
        .map(|(name, property)| {
            let results: Vec<bool> = matrices.iter().filter_map(property).collect();
            let passed = results.iter().filter(|ok| **ok).count();
            PropertyCount {
                name,
                passed,
                failed: results.len() - passed,
            }
        })
        .collect();
    CheckSummary {
        seed,
        matrices: matrices.len(),
        properties,
    }
}
