//! A quick timing table for the determinant paths.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supertrop::corpus::{random_matrix, EntryMix};
use supertrop::determinant::BRUTE_LIMIT;
use supertrop::{det, DetMethod};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    /// Mean over the repetitions; `None` above the brute-force guard.
    pub brute: Option<Duration>,
    pub fast: Duration,
}

pub fn run_bench(seed: u64, max_n: usize, reps: usize) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reps = reps.max(1);
    (1..=max_n)
        .map(|n| {
            let inputs: Vec<_> = (0..reps)
                .map(|_| random_matrix(&mut rng, n, n, &EntryMix::real_only(-1000, 1000)))
                .collect();
            let time = |method: DetMethod| {
                let start = Instant::now();
                for a in &inputs {
                    det(a, method).expect("determinant");
                }
                start.elapsed() / reps as u32
            };
            BenchRow {
                n,
                brute: (n <= BRUTE_LIMIT).then(|| time(DetMethod::Brute)),
                fast: time(DetMethod::Fast),
            }
        })
        .collect()
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let ms = |d: Duration| format!("{:.3}", d.as_secs_f64() * 1e3);
    let mut out = format!("{:>4} {:>12} {:>12}\n", "n", "brute_ms", "fast_ms");
    for row in rows {
        let brute = row.brute.map_or_else(|| "-".to_string(), ms);
        out.push_str(&format!("{:>4} {:>12} {:>12}\n", row.n, brute, ms(row.fast)));
    }
    out
}
