//! Q_n = Delta^n / Delta^(n+1) for H(p, m), compared with the closed form.

use burnside_aug::closed_form::closed_qn;
use burnside_aug::group::{GroupParams, ModularGroup};
use burnside_aug::table_of_marks;

fn main() {
    for (p, m) in [(3, 3), (3, 4), (5, 3)] {
        let params = GroupParams::new(p, m).unwrap();
        let table = table_of_marks(&ModularGroup::new(params));
        for (i, q) in table.quotient_series(4).unwrap().iter().enumerate() {
            let n = i as u32 + 1;
            let closed = closed_qn(&params, n).unwrap();
            println!("H({p},{m}) Q_{n} = {q}  (closed form {closed})");
        }
    }
}
