//! Products of transitive G-sets in the Burnside ring, named by basis label.

use burnside_aug::closed_form::{all_labels, closed_mul};
use burnside_aug::verify::HContext;
use burnside_aug::GroupParams;

fn main() {
    let params = GroupParams::new(3, 3).unwrap();
    let ctx = HContext::build(params);
    let al = ctx.alignment.as_ref().expect("labels align with classes");
    let t = &ctx.table;
    let labels = all_labels(&params);
    for &x in &labels {
        for &y in labels.iter().filter(|&&y| y >= x) {
            let z = t
                .multiply(&t.unit(al.index(x)), &t.unit(al.index(y)))
                .unwrap();
            let z = al.to_combination(&z);
            assert_eq!(z, closed_mul(&params, x, y));
            println!("{x} * {y} = {z}");
        }
    }
    let x = t.unit(al.index(labels[0]));
    println!("augmentation of {} = {}", labels[0], t.augmentation(&x));
}
