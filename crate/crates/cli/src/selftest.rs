//! Randomized property checks behind `vknot selftest`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use vknot::foxcalc::{
    commutator_coefficient, commutator_coefficient_via_magnus, fundamental_identity_holds, EndoParams,
};
use vknot::freegroup::{Alphabet, Word};
use vknot::laurent::rat;
use vknot::ncalg::{group_to_series, AlgebraSpec, NcPoly};
use vknot::nilpotent::Collector;

use crate::commands::{Error, Output};

fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::reduce((0..len).map(|_| (rng.gen_range(0..rank), if rng.gen_bool(0.5) { 1 } else { -1 })))
}

fn random_unimodular(rng: &mut ChaCha8Rng) -> EndoParams {
    loop {
        let p = EndoParams {
            alpha: rng.gen_range(-4..=4),
            beta: rng.gen_range(-4..=4),
            gamma: rng.gen_range(-3..=3),
            a: rng.gen_range(-4..=4),
            b: rng.gen_range(-4..=4),
            c: rng.gen_range(-3..=3),
        };
        if p.determinant().abs() == 1 {
            return p;
        }
    }
}

type Property = fn(&mut ChaCha8Rng) -> Result<bool, Error>;

fn fox_identity(rng: &mut ChaCha8Rng) -> Result<bool, Error> {
    let rank = rng.gen_range(1..=3);
    let alphabet = Alphabet::new(&["x", "y", "z"][..rank])?;
    Ok(fundamental_identity_holds(&alphabet, &random_word(rng, rank, 20)))
}

fn collection(rng: &mut ChaCha8Rng) -> Result<bool, Error> {
    let col = Collector::get(2, 4)?;
    let (u, v) = (random_word(rng, 2, 12), random_word(rng, 2, 12));
    Ok(col.collect(&(&u * &v))? == col.collect(&u)?.mul(&col.collect(&v)?)?)
}

fn series(rng: &mut ChaCha8Rng) -> Result<bool, Error> {
    let spec = AlgebraSpec::free(&["X", "Y"], 6);
    let (u, v) = (random_word(rng, 2, 10), random_word(rng, 2, 10));
    let product = spec.mul(&group_to_series(&u, &spec)?, &group_to_series(&v, &spec)?);
    let inverse = spec.mul(&group_to_series(&u, &spec)?, &group_to_series(&u.inverse(), &spec)?);
    Ok(group_to_series(&(&u * &v), &spec)? == product && inverse == NcPoly::one(spec.vars().clone()))
}

fn commutator_closed_form(rng: &mut ChaCha8Rng) -> Result<bool, Error> {
    let p = random_unimodular(rng);
    let closed = commutator_coefficient(&p);
    Ok(closed == commutator_coefficient_via_magnus(&p)? && closed.augment() == rat(p.determinant()))
}

pub fn run(seed: u64, cases: usize) -> Result<Output, Error> {
    let properties: [(&str, Property); 4] = [
        ("fox fundamental identity", fox_identity),
        ("collection is a homomorphism", collection),
        ("series map is multiplicative", series),
        ("commutator coefficient closed form", commutator_closed_form),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = format!("seed {seed}, {cases} cases per property\n");
    let mut results = Vec::new();
    let mut verified = true;
    for (name, property) in properties {
        let mut passed = 0;
        for _ in 0..cases {
            passed += usize::from(property(&mut rng)?);
        }
        let ok = passed == cases;
        verified &= ok;
        text.push_str(&format!("[{}] {name}: {passed}/{cases}\n", if ok { "ok" } else { "FAILED" }));
        results.push(json!({ "property": name, "passed": passed, "cases": cases }));
    }
    Ok(Output { text, json: json!({ "seed": seed, "results": results }), verified })
}
