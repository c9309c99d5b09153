//! Encode a message, look at its residues and measure agreement.
//!
//!     cargo run --example encode

use frs_lab::{AlphaRule, FrsCode, Polynomial, Rational};

fn main() -> frs_lab::Result<()> {
    let code = FrsCode::new(13, 3, 3, 4, AlphaRule::Default)?;
    println!(
        "q=13 gamma={} alphas={:?} rate={}",
        code.field().gamma(),
        code.alphas(),
        code.rate()
    );

    let f = Polynomial::new(code.field(), [3, 1, 4]);
    let word = code.encode(&f)?;
    println!("f = {f}");
    for i in 0..code.n() {
        let r = code.residue(&f, i)?;
        println!("  symbol {i}: {:?}  f mod Q_{i} = {r}", word.symbol(i));
    }

    // corrupt two symbols and test ball membership at a few radii
    let mut y = word.clone();
    y.symbol_mut(0)[1] = (y.symbol(0)[1] + 1) % 13;
    y.symbol_mut(3)[0] = 0;
    let agr = code.agreement(&word, &y)?;
    for rho in ["1/4", "1/2", "3/4"] {
        let rho: Rational = rho.parse()?;
        println!(
            "agreement {agr}/4, in B(y, {rho}): {}",
            code.in_ball(&word, &y, &rho)?
        );
    }
    Ok(())
}
