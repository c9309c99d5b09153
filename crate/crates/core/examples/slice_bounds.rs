//! Slice dimensions of an affine space of messages, the slice-sum bound and
//! the folded Wronskian's roots.
//!
//!     cargo run --example slice_bounds

use frs_lab::bounds;
use frs_lab::{AffineSubspace, AlphaRule, FrsCode, Polynomial};

fn main() -> frs_lab::Result<()> {
    let code = FrsCode::new(13, 4, 3, 4, AlphaRule::Default)?;
    let field = code.field();
    let f0 = Polynomial::new(field, [1, 5, 0, 2]);
    // Q_0 vanishes on orbit 0, so the direction Q_0 keeps coordinate 0 fixed
    let a = AffineSubspace::new(
        f0.clone(),
        vec![code.q_poly(0).clone(), Polynomial::constant(field, 1)],
        4,
    )?;
    let y = code.encode(&f0)?;

    println!("slice dims {:?}", bounds::slice_dims(&code, &a, &y)?);
    let gk = bounds::check_gk(&code, &a, &y)?;
    println!("slice sum {} <= {}: {}", gk.lhs, gk.rhs, gk.holds);

    let w = bounds::folded_wronskian(a.basis())?;
    println!("W = {w}");
    let window = code.s() - a.dim() as usize + 1;
    for &sigma in &code.orbit(0)[..window] {
        println!(
            "  multiplicity at {sigma}: {:?}",
            w.root_multiplicity(sigma)
        );
    }
    let rep = bounds::check_wronskian_multiplicity(&code, &a, &y)?;
    println!(
        "{} <= {} ({}), holds {}",
        rep.lhs,
        rep.rhs,
        rep.detail.unwrap_or_default(),
        rep.holds
    );
    Ok(())
}
