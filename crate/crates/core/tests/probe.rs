use std::sync::Arc;
use cdalg::{AlgebraSpec, CDElement, FieldSpec};

#[test]
fn probe_example_pair() {
    let spec = Arc::new(AlgebraSpec::all_minus_one(FieldSpec::rationals(), 4).unwrap());
    let e = |i: usize| CDElement::basis(&spec, i).unwrap();
    let x = e(3).add(&e(10)).unwrap();
    let y = e(6).sub(&e(15)).unwrap();
    println!("(e3+e10)(e6-e15) = {}", x.mul(&y).unwrap());
    println!("(e6-e15)(e3+e10) = {}", y.mul(&x).unwrap());
    // sweep: which e_i +/- e_j pairs are zero divisors?
    let mut found = vec![];
    for i in 1..16 {
        for j in (i + 1)..16 {
            for sign in [1i64, -1] {
                let mut coeffs = vec![0i64; 16];
                coeffs[i] = 1;
                coeffs[j] = sign;
                let x = CDElement::from_i64s(&spec, &coeffs).unwrap();
                if let Some(a) = x.annihilator().unwrap() {
                    found.push((i, j, sign, a.partner.to_string()));
                }
            }
        }
    }
    println!("zero-divisor candidates among e_i +/- e_j: {}", found.len());
    for f in found.iter().take(6) {
        println!("  {:?}", f);
    }
}
