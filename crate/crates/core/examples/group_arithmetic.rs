//! Multiplication, inverses and powers in H(p, m).

use burnside_aug::group::{inv, mul, pow, pow_generic, GroupParams};

fn main() {
    let params = GroupParams::new(3, 3).expect("valid parameters");
    println!(
        "|H(3,3)| = {}, b^-1 a b = a^{}",
        params.group_order(),
        params.twist()
    );

    let (a, b) = (params.a(), params.b());
    let ba = mul(&params, b, a);
    let ab = mul(&params, a, b);
    println!("b*a = {ba}, a*b = {ab}");
    println!("(ba)^-1 = {}", inv(&params, ba));

    let x = params.element(1, 5);
    for j in [2, 3, 9, 27] {
        let fast = pow(&params, x, j);
        assert_eq!(fast, pow_generic(&params, x, j));
        println!("({x})^{j} = {fast}");
    }
}
