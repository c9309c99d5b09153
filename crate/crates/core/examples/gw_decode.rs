//! Interpolation decoding: a received word yields a small affine space of
//! candidate messages that contains every close codeword.
//!
//!     cargo run --example gw_decode

use frs_lab::decode;
use frs_lab::{AlphaRule, FrsCode, Polynomial};

fn main() -> frs_lab::Result<()> {
    let code = FrsCode::new(13, 4, 2, 6, AlphaRule::Default)?;
    let f = Polynomial::new(code.field(), [5, 0, 7, 1]);
    let mut y = code.encode(&f)?;
    y.symbol_mut(2)[0] = 11;

    for m in 1..=code.s() {
        let interp = decode::gw_interpolate(&code, &y, m)?;
        let space = decode::solution_space(&code, &interp);
        let radius = decode::gw_radius(&code, m)?;
        let list = decode::brute_force_list(&code, &y, &radius)?;
        println!(
            "m={m} D={} radius={radius} dim={} list={} contained={}",
            interp.degree_bound,
            space.dim(),
            list.len(),
            list.iter().all(|g| space.contains(g))
        );
        if let Some(off) = space.offset() {
            println!(
                "  offset {off}, residual of f: {}",
                interp.residual(&code, &f)
            );
        }
    }
    Ok(())
}
