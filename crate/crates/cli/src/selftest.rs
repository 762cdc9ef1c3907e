//! Field checks: quotient/remainder ordering, and agreement between the
//! three key modes wherever they are defined.

use clap::Args;
use qrsort_core::rng::{bounded, bounded_i64, rng_from_seed, ExperimentRng};
use qrsort_core::{
    compute_quotient_keys, compute_remainder_keys, qr_sort_slice, CostLedger, QrKeyMode, Tagged,
    ValueRange,
};

use crate::error::CliError;

type Check = fn(&mut ExperimentRng) -> Result<(), String>;

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 10_000)]
    cases: u64,
    #[arg(long, env = "QRSORT_SEED", default_value_t = 0)]
    seed: u64,
}

/// If `r_i >= r_j` and `s_i < s_j` then `q_i < q_j`.
fn ordering_case(rng: &mut ExperimentRng) -> Result<(), String> {
    let si = bounded_i64(rng, -1_000_000_000, 1_000_000_000);
    let sj = si + 1 + bounded(rng, 1_000_000) as i64;
    let min = si - bounded(rng, 1_000_000) as i64;
    let bits = 1 + bounded(rng, 21);
    let d = 1 + bounded(rng, 1 << bits);

    let items = [min, si, sj];
    let range = ValueRange::of(&items)
        .map_err(|e| e.to_string())?
        .expect("non-empty");
    let mut ledger = CostLedger::new();
    let general = QrKeyMode::General;
    let r = compute_remainder_keys(&items, &range, d, general, &mut ledger)
        .map_err(|e| e.to_string())?;
    let q = compute_quotient_keys(&items, &range, d, general, &mut ledger)
        .map_err(|e| e.to_string())?;
    if r.keys()[1] >= r.keys()[2] && q.keys()[1] >= q.keys()[2] {
        return Err(format!(
            "quotient ordering fails for s_i={si}, s_j={sj}, min={min}, d={d}"
        ));
    }
    Ok(())
}

fn sort_tagged(items: &[Tagged], d: u64, mode: QrKeyMode) -> Result<Vec<Tagged>, String> {
    qr_sort_slice(items, d, mode, &mut CostLedger::new()).map_err(|e| format!("{mode}: {e}"))
}

/// Bitwise matches general for `d = 2^c`; subtraction-free matches general
/// on non-negative input. Outputs are compared tag for tag.
fn equivalence_case(rng: &mut ExperimentRng) -> Result<(), String> {
    let n = 1 + bounded(rng, 256) as usize;
    let hi = 1 + bounded(rng, 100_000) as i64;
    let items: Vec<Tagged> = (0..n)
        .map(|i| Tagged {
            value: bounded_i64(rng, 0, hi),
            tag: i as u32,
        })
        .collect();
    let d = 1u64 << bounded(rng, 18);

    let general = sort_tagged(&items, d, QrKeyMode::General)?;
    if sort_tagged(&items, d, QrKeyMode::Bitwise)? != general {
        return Err(format!("bitwise differs from general at n={n}, d={d}"));
    }
    let d = 1 + bounded(rng, hi as u64 + 1);
    if sort_tagged(&items, d, QrKeyMode::SubtractionFree)?
        != sort_tagged(&items, d, QrKeyMode::General)?
    {
        return Err(format!(
            "subtraction-free differs from general at n={n}, d={d}"
        ));
    }
    Ok(())
}

pub fn run(args: SelftestArgs) -> Result<(), CliError> {
    let mut rng = rng_from_seed(args.seed);
    let checks: [(&str, Check); 2] = [
        ("quotient ordering", ordering_case),
        ("key-mode equivalence", equivalence_case),
    ];
    for (name, check) in checks {
        for case in 0..args.cases {
            check(&mut rng)
                .map_err(|msg| CliError::Failed(format!("{name}, case {case}: {msg}")))?;
        }
        println!("ok  {name}: {} cases", args.cases);
    }
    Ok(())
}
