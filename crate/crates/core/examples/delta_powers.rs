//! Hermite bases of the powers of the augmentation ideal.

use burnside_aug::group::{GroupParams, ModularGroup};
use burnside_aug::table_of_marks;

fn main() {
    let table = table_of_marks(&ModularGroup::new(GroupParams::new(3, 3).unwrap()));
    for power in table.ideal_powers(4).unwrap() {
        println!(
            "Delta^{} (rank {}):\n{}",
            power.n,
            power.rank(),
            power.basis
        );
    }
}
