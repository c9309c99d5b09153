//! Certificate pruning against the brute-force oracle on a word with two
//! planted codewords.
//!
//!     cargo run --release --example prune

use frs_lab::decode;
use frs_lab::{AlphaRule, FrsCode, Polynomial, Rational};

fn main() -> frs_lab::Result<()> {
    let code = FrsCode::new(13, 3, 3, 4, AlphaRule::Default)?;
    let f1 = Polynomial::new(code.field(), [1, 2, 3]);
    let f2 = Polynomial::new(code.field(), [9, 0, 4]);
    let (w1, w2) = (code.encode(&f1)?, code.encode(&f2)?);
    let mut y = w1.clone();
    for i in 2..4 {
        y.symbol_mut(i).copy_from_slice(w2.symbol(i));
    }

    let eps = Rational::new(1, 4);
    let rho = code.relative_distance() - eps.clone();
    let (space, m) = decode::candidate_space(&code, &y, &rho)?;
    println!(
        "rho = {rho}, candidate space dim {} (interpolation m = {m:?})",
        space.dim()
    );

    let trials = decode::recommended_trials(&eps, space.dim() as usize, 13, 0.01);
    let res = decode::prune_certificates(&code, &y, &space, &rho, trials, 42)?;
    println!(
        "{trials} trials: resolved {} dead ends {} abandoned {}",
        res.resolved, res.dead_ends, res.abandoned
    );
    for e in &res.entries {
        println!(
            "  {}  hits {}  certificate {:?}",
            e.message, e.hits, e.certificate.coords
        );
    }
    let oracle = decode::brute_force_list(&code, &y, &rho)?;
    println!(
        "oracle list {:?}, equal: {}",
        oracle.iter().map(ToString::to_string).collect::<Vec<_>>(),
        oracle == res.messages()
    );
    Ok(())
}
