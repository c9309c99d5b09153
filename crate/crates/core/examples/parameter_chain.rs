//! Exact check that the list-size theorem's radius reaches 1 - R - eps,
//! next to the Singleton-type floor on list size.
//!
//!     cargo run --example parameter_chain

use frs_lab::bounds;
use frs_lab::suite;
use frs_lab::Rational;

fn main() -> frs_lab::Result<()> {
    for eps in [
        Rational::new(1, 2),
        Rational::new(1, 4),
        Rational::new(1, 8),
    ] {
        let (t, s) = bounds::chain_parameters(&eps)?;
        let reps = suite::parameter_chain_grid(std::slice::from_ref(&eps))?;
        let ok = reps.iter().filter(|r| r.holds).count();
        println!("eps={eps}: t={t} s={s}, {ok}/{} rates hold", reps.len());
        for (rate, rep) in suite::rate_grid(&eps)?.iter().zip(&reps).step_by(6) {
            let floor = bounds::singleton_floor(rate, &eps)
                .map(|f| f.to_string())
                .unwrap_or("-".into());
            println!(
                "  R={rate}: rho={} >= {}, list floor {floor}",
                rep.rhs, rep.lhs
            );
        }
    }
    Ok(())
}
