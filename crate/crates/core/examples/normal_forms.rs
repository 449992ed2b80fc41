//! Hermite and Smith normal forms, and quotient invariants of lattices.

use burnside_aug::zlattice::{det, hnf, quotient_invariants, snf, IntMatrix};

fn main() {
    let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let (h, u) = hnf(&m);
    println!("M =\n{m}\nH =\n{h}\nU =\n{u}");
    let (d, inv) = snf(&m);
    println!("D =\n{d}\nZ^3 / rows(M) = {inv}, det = {}", det(&m));

    let ambient = IntMatrix::identity(2);
    let sub = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
    println!(
        "Z^2 / <(2,0), (0,3)> = {}",
        quotient_invariants(&ambient, &sub).unwrap()
    );
}
