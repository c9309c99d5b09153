//! The list-recovery family: ell^m codewords that take at most ell values
//! on each of the first p coordinates.
//!
//!     cargo run --example list_recovery

use frs_lab::recovery;
use frs_lab::{AlphaRule, FrsCode};

fn main() -> frs_lab::Result<()> {
    let code = FrsCode::new(13, 5, 2, 6, AlphaRule::Default)?;
    for ell in 1..=3u64 {
        let scalars: Vec<u64> = (1..=ell).collect();
        let fam = recovery::build_counterexample(&code, 2, &scalars)?;
        let chk = recovery::measure(&fam)?;
        println!(
            "ell={ell} p={} basis {:?}: |G|={} per-coordinate {:?} p/n={} R={} holds {}",
            chk.p,
            fam.basis()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            chk.family_size,
            chk.per_coord_sizes,
            chk.prefix_fraction,
            chk.rate,
            chk.holds()
        );
    }
    let f2 = recovery::build_counterexample(&code, 2, &[1])?.basis()[1].clone();
    let bad =
        recovery::CounterexampleFamily::from_parts(&code, 2, 4, vec![f2.clone(), f2], &[1, 2]);
    println!("f_1 := f_2 rejected: {}", bad.is_err());
    Ok(())
}
