//! List size of an affine space of messages inside a ball, for every
//! admissible (r, t).
//!
//!     cargo run --release --example subspace_list_bound

use frs_lab::suite::{self, Summary};
use frs_lab::{AlphaRule, FrsCode};

fn main() -> frs_lab::Result<()> {
    let code = FrsCode::new(13, 4, 3, 4, AlphaRule::Default)?;
    for r in 1..=code.s() {
        for t in r..=code.s() {
            let reps = suite::srivastava_suite(&code, r, t, 200, 1)?;
            let worst = reps.iter().map(|x| x.lhs.clone()).max().expect("samples");
            let s = Summary::of(&reps);
            println!(
                "r={r} t={t} radius={} bound={} worst={worst} holds {}/{}",
                reps[0].rho.clone().expect("radius"),
                reps[0].rhs,
                s.holds,
                s.total
            );
        }
    }
    Ok(())
}
