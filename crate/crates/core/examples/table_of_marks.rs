//! Prints the table of marks of a small cyclic group and of H(3,3).

use burnside_aug::group::{CyclicGroup, GroupParams, ModularGroup};
use burnside_aug::table_of_marks;

fn main() {
    let c12 = table_of_marks(&CyclicGroup::new(12).unwrap());
    println!("C_12:\n{}", c12.marks());

    let h = table_of_marks(&ModularGroup::new(GroupParams::new(3, 3).unwrap()));
    println!("H(3,3), {} classes:\n{}", h.rank(), h.marks());
}
