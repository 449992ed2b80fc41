//! Runs every check for one H(p, m) and prints the JSON report.

use burnside_aug::group::GroupParams;
use burnside_aug::verify::run_verify;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"));
    let p = args.next().unwrap_or(3);
    let m = args.next().unwrap_or(3) as u32;
    let params = GroupParams::new(p, m).expect("p an odd prime, m >= 3");
    let report = run_verify(params, 6).expect("m >= 3");
    for c in &report.checks {
        eprintln!("{:?} {}: {}", c.status, c.name, c.detail);
    }
    println!("{}", report.to_json());
}
