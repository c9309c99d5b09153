//! Agreement graphs, the edge bound, the chain partition and the list-size
//! theorem, plus a short fuzzing run.
//!
//!     cargo run --release --example chen_zhang

use frs_lab::bounds;
use frs_lab::decode;
use frs_lab::suite;
use frs_lab::{AlphaRule, FrsCode, Polynomial, Rational};

fn main() -> frs_lab::Result<()> {
    let code = FrsCode::new(13, 4, 2, 6, AlphaRule::Default)?;
    let field = code.field();
    let f1 = Polynomial::new(field, [1, 2, 3, 4]);
    let f2 = f1.add(&code.q_poly(0).mul(&Polynomial::new(field, [0, 3])));
    let (w1, w2) = (code.encode(&f1)?, code.encode(&f2)?);
    let mut y = w1.clone();
    for i in 3..6 {
        y.symbol_mut(i).copy_from_slice(w2.symbol(i));
    }

    let rho = Rational::new(7, 12);
    let list = decode::brute_force_list(&code, &y, &rho)?;
    let g = bounds::agreement_graph(&code, &list, &y)?;
    println!(
        "list {} codewords, E_G = {}, n_G = {}",
        g.m(),
        g.edge_count(),
        g.covered()
    );
    let edge = bounds::check_cz_edge_bound(&code, &list, &y)?;
    println!("edge bound {} <= {}: {}", edge.lhs, edge.rhs, edge.holds);
    let part = bounds::cz_partition(&list, code.k())?;
    println!(
        "cells {:?}, cross picks independent: {}",
        part.cells,
        part.cross_picks_independent(code.k())
    );

    for t in 1..=code.s() {
        let rep = bounds::check_cz_theorem(&code, &y, t)?;
        println!(
            "t={t} radius {}: list {} <= {}",
            rep.rho.clone().expect("radius"),
            rep.lhs,
            rep.rhs
        );
    }
    let fuzzed = suite::fuzz(&code, 2, 8, 40, 3)?;
    println!(
        "fuzzer list sizes at t=2: {:?}",
        fuzzed.iter().map(|o| o.list_size).collect::<Vec<_>>()
    );
    Ok(())
}
