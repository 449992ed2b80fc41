//! Acceptance criteria. Run with
//! `cargo test -p burnside-aug --test acceptance -- --nocapture`
//! to see one line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use burnside_aug::cli::{run_cli, EXIT_OK};
use burnside_aug::closed_form::{closed_qn, BasisLabel};
use burnside_aug::group::{generate, is_normal, CyclicGroup, GroupParams};
use burnside_aug::verify::HContext;
use burnside_aug::zlattice::{hnf_only, snf, IntMatrix};
use burnside_aug::{table_of_marks, AbelianInvariants, BurnsideElement};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PARAMS: [(u64, u32); 3] = [(3, 3), (3, 4), (5, 3)];
const MAX_N: u32 = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(p: u64, m: u32) -> GroupParams {
    GroupParams::new(p, m).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn subgroup_classification() -> Outcome {
    let mut parts = Vec::new();
    for (p, m) in PARAMS {
        let start = Instant::now();
        let ctx = HContext::build(params(p, m));
        let r = ctx.subgroup_classification();
        within(start, Duration::from_secs(10), &format!("H({p},{m})"))?;
        ensure(r.passed(), || format!("H({p},{m}): {}", r.detail))?;
        let want = m as usize * p as usize + m as usize + 2;
        ensure(ctx.subgroups.len() == want, || {
            format!(
                "H({p},{m}): {} subgroups, expected {want}",
                ctx.subgroups.len()
            )
        })?;
        parts.push(format!("H({p},{m}) {}", ctx.subgroups.len()));
    }
    Ok(parts.join(", "))
}

fn multiplication_table() -> Outcome {
    for (p, m) in PARAMS {
        let start = Instant::now();
        let pr = params(p, m);
        let ctx = HContext::build(pr);
        let r = ctx.mult_table();
        ensure(r.passed(), || format!("H({p},{m}): {}", r.detail))?;

        // beta_m0 squared, read off the generic product directly
        let al = ctx.alignment.as_ref().map_err(|e| e.to_string())?;
        let b = al.index(BasisLabel::Beta(m, 0));
        let sq = &ctx.table.products().map_err(|e| e.to_string())?[b][b];
        let top = BigInt::from(p).pow(m - 1);
        let corr = &top - BigInt::from(p).pow(m - 2);
        let mut want = BurnsideElement::zero(ctx.table.rank());
        want = &want + &(&top * &ctx.table.unit(b));
        want = &want + &(&corr * &ctx.table.unit(al.index(BasisLabel::Alpha(m))));
        ensure(*sq == want, || {
            format!("H({p},{m}): beta_m0^2 = {}", al.to_combination(sq))
        })?;

        let st = ctx.comparator_self_test();
        ensure(st.passed(), || st.detail.clone())?;
        within(start, Duration::from_secs(10), &format!("H({p},{m})"))?;
    }
    Ok("all ordered pairs agree, beta_m0^2 explicit, corrupted table rejected".into())
}

fn delta_powers() -> Outcome {
    for (p, m) in PARAMS {
        let ctx = HContext::build(params(p, m));
        let r = ctx.delta_powers(MAX_N);
        ensure(r.passed(), || format!("H({p},{m}): {}", r.detail))?;
        let al = ctx.alignment.as_ref().map_err(|e| e.to_string())?;
        for n in 1..=MAX_N {
            let generic = ctx.table.ideal_power(n).map_err(|e| e.to_string())?;
            let closed = ctx.closed_lattice(al, n)?;
            ensure(generic.basis == closed, || {
                format!("H({p},{m}): Delta^{n} differs")
            })?;
            ensure(generic.rank() == ctx.table.delta_rank(), || {
                format!("H({p},{m}): Delta^{n} has rank {}", generic.rank())
            })?;
        }
    }
    Ok(format!("HNF agrees for n = 1..{MAX_N}"))
}

fn quotients() -> Outcome {
    let mut parts = Vec::new();
    for (p, m) in PARAMS {
        let pr = params(p, m);
        let ctx = HContext::build(pr);
        let (r, series) = ctx.qn(MAX_N);
        ensure(r.passed(), || format!("H({p},{m}): {}", r.detail))?;
        for (i, q) in series.iter().enumerate() {
            let n = i as u32 + 1;
            let want = closed_qn(&pr, n).map_err(|e| e.to_string())?;
            ensure(*q == want && q.free_rank() == 0, || {
                format!("H({p},{m}): Q_{n} = {q}")
            })?;
        }
        parts.push(format!("H({p},{m}) {} / {}", series[0], series[1]));
    }
    Ok(parts.join(", "))
}

fn ring_axioms(ctx: &HContext) -> Result<(), String> {
    let t = &ctx.table;
    let n = t.rank();
    let basis: Vec<BurnsideElement> = (0..n).map(|i| t.unit(i)).collect();
    let mul =
        |x: &BurnsideElement, y: &BurnsideElement| t.multiply(x, y).map_err(|e| e.to_string());
    for x in &basis {
        ensure(mul(x, &t.one())? == *x, || "one is not a unit".into())?;
        for y in &basis {
            let xy = mul(x, y)?;
            ensure(xy == mul(y, x)?, || "not commutative".into())?;
            ensure(
                t.augmentation(&xy) == t.augmentation(x) * t.augmentation(y),
                || "augmentation is not multiplicative".into(),
            )?;
            for z in &basis {
                ensure(mul(&xy, z)? == mul(x, &mul(y, z)?)?, || {
                    "not associative".into()
                })?;
            }
        }
    }
    for d in t.delta_basis() {
        ensure(t.augmentation(&d).is_zero(), || {
            "Delta basis element with nonzero augmentation".into()
        })?;
    }
    Ok(())
}

fn normal_product_rule(ctx: &HContext) -> Result<(), String> {
    let t = &ctx.table;
    let classes = t.classes();
    let order = BigInt::from(t.group_order());
    let normal: Vec<usize> = (0..classes.len())
        .filter(|&i| is_normal(&ctx.group, classes.representative(i)))
        .collect();
    for &i in &normal {
        for &j in &normal {
            let (k, l) = (classes.representative(i), classes.representative(j));
            let meet = generate(
                &ctx.group,
                &k.elements()
                    .iter()
                    .filter(|x| l.contains(x))
                    .copied()
                    .collect::<Vec<_>>(),
            );
            let mut gens = k.elements().to_vec();
            gens.extend_from_slice(l.elements());
            let join = generate(&ctx.group, &gens);
            let c = classes.class_of(&meet).ok_or("meet not found")?;
            let want = &(&order / BigInt::from(join.order())) * &t.unit(c);
            ensure(
                t.multiply(&t.unit(i), &t.unit(j))
                    .map_err(|e| e.to_string())?
                    == want,
                || format!("normal product rule fails for classes {i}, {j}"),
            )?;
        }
    }
    Ok(())
}

fn triangular(ctx: &HContext) -> Result<(), String> {
    let m = ctx.table.marks();
    for i in 0..m.rows() {
        ensure(m[(i, i)] > BigInt::zero(), || {
            format!("diagonal mark {i} not positive")
        })?;
        for j in 0..i {
            ensure(m[(i, j)].is_zero(), || {
                format!("mark ({i},{j}) below the diagonal")
            })?;
        }
    }
    Ok(())
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    let data = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| BigInt::from(rng.gen_range(-20i64..=20)))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(data, cols)
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let k = BigInt::from(rng.gen_range(-4i64..=4));
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = k;
        u = e.mul(&u);
    }
    u
}

fn perturbations() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..200 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let m = random_matrix(&mut rng, r, c);
        let p = random_unimodular(&mut rng, r);
        let q = random_unimodular(&mut rng, c);
        ensure(hnf_only(&p.mul(&m)) == hnf_only(&m), || {
            format!("HNF moved in case {case}")
        })?;
        ensure(snf(&p.mul(&m).mul(&q)) == snf(&m), || {
            format!("SNF moved in case {case}")
        })?;
    }
    Ok(())
}

fn cyclic_quotients() -> Result<(), String> {
    for p in [3u64, 5, 7] {
        let t = table_of_marks(&CyclicGroup::new(p).map_err(|e| e.to_string())?);
        let want = AbelianInvariants::elementary(&BigInt::from(p), 1);
        for n in 1..=MAX_N {
            let q = t.quotient_qn(n).map_err(|e| e.to_string())?;
            ensure(q == want, || format!("C_{p}: Q_{n} = {q}"))?;
        }
    }
    Ok(())
}

fn properties() -> Outcome {
    let h33 = HContext::build(params(3, 3));
    ring_axioms(&h33)?;
    for (p, m) in PARAMS {
        let ctx = HContext::build(params(p, m));
        normal_product_rule(&ctx).map_err(|e| format!("H({p},{m}): {e}"))?;
        triangular(&ctx).map_err(|e| format!("H({p},{m}): {e}"))?;
    }
    perturbations()?;
    cyclic_quotients()?;
    Ok("ring axioms, normal products, triangular marks, 200 perturbations, cyclic Q_n".into())
}

fn full_verify() -> Outcome {
    let start = Instant::now();
    for (p, m) in PARAMS {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let args = [
            "burnside-aug",
            "verify",
            "--p",
            &p.to_string(),
            "--m",
            &m.to_string(),
            "--max-n",
            "6",
        ];
        let code = run_cli(args, &mut out, &mut err);
        ensure(code == EXIT_OK, || {
            format!("H({p},{m}) exit {code}: {}", String::from_utf8_lossy(&out))
        })?;
    }
    within(start, Duration::from_secs(120), "verify")?;
    Ok(format!("exit 0 for all, {:?}", start.elapsed()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 6] = [
        ("subgroup classification", subgroup_classification),
        ("multiplication table", multiplication_table),
        ("powers of the augmentation ideal", delta_powers),
        ("augmentation quotients", quotients),
        ("property suites", properties),
        ("full verify", full_verify),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
