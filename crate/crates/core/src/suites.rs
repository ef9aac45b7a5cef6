//! Named verification suites. Each returns a [`Report`]; `skein verify`
//! prints them.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::diagram::{random_braid, random_isotopic_pair, BraidWord, MorseDiagram};
use crate::fusion::{
    f_matrix, new_bases, pretzel, random_admissible_k2, skein_consistency_k1, skein_consistency_k2,
    verify_f_identities, vertex_normalization, EndQ2Element, FVariant, K2Consistency,
};
use crate::laurent::{GaussInt, LaurentPoly};
use crate::report::Report;
use crate::skein::{
    kauffman_poly, lickorish_rhs, specialization_check, trivial_eval, twin_sign_check,
    two_term_state_sum, BracketParams, FourTermEvaluator, KauffmanVariant, SkeinError, Strategy,
};
use crate::tlhecke::{braid_relation_check, delta_iff_check, hecke_delta, zeta_letter, TLElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Laurent,
    Tl,
    Skein,
    Fusion,
    Lickorish,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["laurent", "tl", "skein", "fusion", "lickorish", "all"];

    pub fn run(self) -> Result<Report, SkeinError> {
        Ok(match self {
            Suite::Laurent => laurent_suite(),
            Suite::Tl => tl_suite(4, 6)?,
            Suite::Skein => skein_suite()?,
            Suite::Fusion => fusion_suite(),
            Suite::Lickorish => lickorish_suite(3, 7)?,
            Suite::All => {
                let mut r = Report::new("all suites");
                for s in [
                    Suite::Laurent,
                    Suite::Tl,
                    Suite::Skein,
                    Suite::Fusion,
                    Suite::Lickorish,
                ] {
                    r.extend(s.run()?);
                }
                r
            }
        })
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "laurent" => Suite::Laurent,
            "tl" => Suite::Tl,
            "skein" => Suite::Skein,
            "fusion" => Suite::Fusion,
            "lickorish" => Suite::Lickorish,
            "all" => Suite::All,
            other => {
                return Err(format!(
                    "unknown suite `{other}` (expected one of {})",
                    Self::NAMES.join(", ")
                ))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Laurent,
            Suite::Tl,
            Suite::Skein,
            Suite::Fusion,
            Suite::Lickorish,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Self::NAMES[i])
    }
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        let c = GaussInt::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let m = &LaurentPoly::var_pow("a", rng.gen_range(-3..=3))
            * &LaurentPoly::var_pow("z", rng.gen_range(-3..=3));
        p = p + m.scale(&c);
    }
    p
}

/// Ring axioms, text and JSON round trips, substitution on seeded samples.
pub fn laurent_suite() -> Report {
    let mut r = Report::new("laurent");
    let mut rng = StdRng::seed_from_u64(0x1a0e);
    let (mut ring, mut text, mut json, mut subst) = (true, true, true, true);
    let img: LaurentPoly = "-i*a^2*z^-1".parse().expect("literal");
    for _ in 0..200 {
        let (p, q, s) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        ring &= &(&p * &q) * &s == &p * &(&q * &s);
        ring &= &p * &(&q + &s) == &(&p * &q) + &(&p * &s);
        ring &= &p * &q == &q * &p && &(&p - &q) + &q == p;
        text &= p.to_string().parse::<LaurentPoly>().ok().as_ref() == Some(&p);
        json &= LaurentPoly::from_json(&p.to_json()).ok().as_ref() == Some(&p);
        let lhs = (&p * &q).substitute("a", &img);
        let rhs = p
            .substitute("a", &img)
            .and_then(|x| Ok(&x * &q.substitute("a", &img)?));
        subst &= matches!((lhs, rhs), (Ok(x), Ok(y)) if x == y);
    }
    r.exact("ring axioms", ring, "");
    r.exact("text round trip", text, "");
    r.exact("json round trip", json, "");
    r.exact("substitution is a homomorphism", subst, "");
    r
}

/// `trace_closure(ζ(b)) = ⟨closure(b)⟩` in free units `(a, b)` for every braid
/// with at most `max_n` strands and `max_len` letters, by depth-first search
/// over word prefixes.
pub fn tl_oracle(max_n: usize, max_len: usize) -> Result<Report, SkeinError> {
    let prm = BracketParams::homfly();
    let delta = hecke_delta(&prm.a, &prm.b).expect("units");
    let mut r = Report::new(format!(
        "TL closure oracle, n <= {max_n}, length <= {max_len}"
    ));
    for n in 1..=max_n {
        let letters: Vec<i64> = (1..n as i64).flat_map(|g| [g, -g]).collect();
        let images: Vec<TLElement> = letters
            .iter()
            .map(|&g| zeta_letter(n, g, &prm.a, &prm.b).expect("units"))
            .collect();
        let mut count = 0usize;
        let mut bad: Option<String> = None;
        let mut stack: Vec<(Vec<i64>, TLElement)> = vec![(Vec::new(), TLElement::identity(n))];
        while let Some((word, z)) = stack.pop() {
            let b = BraidWord::new(n, word.clone())?;
            let lhs = z.trace_closure(&delta);
            let rhs = two_term_state_sum(&b.closure(), &prm)?;
            count += 1;
            if lhs != rhs && bad.is_none() {
                bad = Some(format!("{b}: {lhs} vs {rhs}"));
            }
            if word.len() < max_len {
                for (g, img) in letters.iter().zip(&images) {
                    let mut w = word.clone();
                    w.push(*g);
                    stack.push((w, z.mul(img, &delta).expect("same n")));
                }
            }
        }
        r.exact(
            format!("n = {n}: {count} braids"),
            bad.is_none(),
            bad.unwrap_or_default(),
        );
    }
    Ok(r)
}

/// The closure oracle plus relation checks in `TL_2..TL_5`.
pub fn tl_suite(max_n: usize, max_len: usize) -> Result<Report, SkeinError> {
    let mut r = Report::new("tl");
    r.extend(tl_oracle(max_n, max_len)?);
    let prm = BracketParams::homfly();
    let delta = hecke_delta(&prm.a, &prm.b).expect("units");
    for n in 2..=5 {
        r.extend(braid_relation_check(n, &prm.a, &prm.b, &delta).expect("units"));
        r.extend(delta_iff_check(n, &prm.a, &prm.b).expect("units"));
    }
    Ok(r)
}

fn md(s: &str) -> MorseDiagram {
    s.parse().expect("literal diagram")
}

/// Kinks, the two-kink value, the specialization oracle, twin sign pairs and
/// determinism of the four-term recursion.
pub fn skein_suite() -> Result<Report, SkeinError> {
    let mut r = Report::new("skein");
    let twin = BracketParams::twin();
    let a = LaurentPoly::var("A");
    let d = twin.delta();
    let two_kink = two_term_state_sum(&md("cup@1 cup@2 x+@1 x+@1 cap@2 cap@1"), &twin)?;
    let want = &(&(&a.pow(2)? * &d.pow(2)?) - &d.scale(&GaussInt::from(2)))
        + &(&a.pow(-2)? * &d.pow(2)?);
    r.exact(
        "two-kink twin value",
        two_kink == want,
        format!("{two_kink}"),
    );
    let vert = two_term_state_sum(&BraidWord::new(2, vec![1])?.closure(), &twin)?;
    let horiz = two_term_state_sum(&md("cup@1 cup@2 cup@1 x-@2 cap@3 cap@2 cap@1"), &twin)?;
    r.exact(
        "vertical kink = A^3 d",
        vert == &a.pow(3)? * &d,
        format!("{vert}"),
    );
    r.exact(
        "horizontal kink = -A^3 d",
        horiz == -(&a.pow(3)? * &d),
        format!("{horiz}"),
    );
    let unknot = MorseDiagram::unknot();
    r.exact(
        "trivial invariant on the unknot",
        trivial_eval(&unknot, &GaussInt::i())? == GaussInt::from(1),
        "",
    );

    let mut spec_ok = true;
    let mut spec_n = 0;
    for b in BraidWord::enumerate(3, 4) {
        let d = b.closure();
        let k = kauffman_poly(&d, KauffmanVariant::Kauffman)?;
        spec_ok &= specialization_check(&d, &k)?;
        spec_n += 1;
    }
    r.exact(
        format!("kauffman(-A^3, A + 1/A) = bracket on {spec_n} closures"),
        spec_ok,
        "",
    );

    let mut rng = StdRng::seed_from_u64(0x5e1f);
    let mut pairs = Vec::new();
    while pairs.len() < 50 {
        let len = rng.gen_range(1..=4);
        let base = random_braid(&mut rng, 3, len).closure();
        let p = random_isotopic_pair(&mut rng, &base, 3);
        if p.after.crossing_count() <= 12 {
            pairs.push((p.before, p.after, p.k));
        }
    }
    r.extend(twin_sign_check(&pairs)?);

    r.extend(determinism_check(20)?);
    Ok(r)
}

/// Evaluates seeded braid closures under `orders` randomized crossing orders
/// and compares with the canonical order.
pub fn determinism_check(orders: u64) -> Result<Report, SkeinError> {
    let mut r = Report::new(format!(
        "four-term recursion under {orders} crossing orders"
    ));
    let words: [(usize, &[i64]); 4] = [
        (2, &[1, 1, 1]),
        (3, &[1, -2, 1, -2]),
        (3, &[1, 1, 2, -1, 2]),
        (2, &[1, 1, -1, 1, 1]),
    ];
    for v in [KauffmanVariant::Dubrovnik, KauffmanVariant::Kauffman] {
        for (n, w) in words {
            let d = BraidWord::new(n, w.to_vec())?.closure();
            let base = FourTermEvaluator::new(v).eval(&d)?;
            let mut ok = true;
            for seed in 0..orders {
                ok &= FourTermEvaluator::new(v)
                    .with_strategy(Strategy::Seeded(seed))
                    .eval(&d)?
                    == base;
            }
            r.exact(
                format!("{} on {}", v.name(), BraidWord::new(n, w.to_vec())?),
                ok,
                "",
            );
        }
    }
    Ok(r)
}

/// The Lickorish relation on every braid closure with at most `max_n`
/// strands and `max_len` letters.
pub fn lickorish_suite(max_n: usize, max_len: usize) -> Result<Report, SkeinError> {
    let mut r = Report::new(format!("lickorish, n <= {max_n}, length <= {max_len}"));
    let mut dub = FourTermEvaluator::new(KauffmanVariant::Dubrovnik);
    let mut kau = FourTermEvaluator::new(KauffmanVariant::Kauffman);
    let mut count = 0usize;
    let mut bad = None;
    for n in 1..=max_n {
        for b in BraidWord::enumerate(n, max_len) {
            count += 1;
            let d = b.closure();
            let lhs = dub.eval(&d)?;
            let rhs = lickorish_rhs(&d, &kau.eval(&d)?)?;
            if lhs != rhs && bad.is_none() {
                bad = Some(b.to_string());
            }
        }
    }
    r.exact(
        format!("{count} closures"),
        bad.is_none(),
        bad.map(|b| format!("first failure {b}"))
            .unwrap_or_default(),
    );
    Ok(r)
}

/// Uniform random `k = 2` dims `(d_q, d_x, d_y)` with `d_x, d_y ∈ [1, 10]`.
pub fn random_k2_dims(rng: &mut StdRng) -> [f64; 3] {
    let (dx, dy): (f64, f64) = (rng.gen_range(1.0..10.0), rng.gen_range(1.0..10.0));
    [(1.0 + dx + dy).sqrt(), dx, dy]
}

/// F identities on random dims, concrete matrices, jack algebra, new bases
/// and the braiding eigenvalue relations.
pub fn fusion_suite() -> Report {
    let mut r = Report::new("fusion");
    let mut rng = StdRng::seed_from_u64(0xf05e);
    let mut worst: f64 = 0.0;
    let mut all_pass = true;
    for i in 0..1000 {
        let f = if i % 2 == 0 {
            let dq: f64 = rng.gen_range(1.0..6.0);
            let kappa = if rng.gen_bool(0.5) { 1 } else { -1 };
            f_matrix(&[dq, dq * dq - 1.0], kappa, FVariant::Dubrovnik)
        } else {
            let v = if rng.gen_bool(0.5) {
                FVariant::Dubrovnik
            } else {
                FVariant::Kauffman
            };
            f_matrix(&random_k2_dims(&mut rng), 1, v)
        };
        match f {
            Ok(f) => {
                let rep = verify_f_identities(&f);
                all_pass &= rep.passed();
                worst = rep
                    .checks
                    .iter()
                    .filter(|c| c.detail.starts_with("tol"))
                    .fold(worst, |w, c| w.max(c.residual));
            }
            Err(_) => all_pass = false,
        }
    }
    r.exact(
        "F identities on 1000 random dims",
        all_pass,
        format!("worst residual {worst:.3e}"),
    );

    let f221 = f_matrix(&[2.0, 2.0, 1.0], 1, FVariant::Dubrovnik).expect("valid dims");
    let mut pz = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let p = pretzel(&f221, i, j).expect("in range");
            pz = pz.max((p - 4.0 * f221.get(i, j)).abs());
        }
    }
    r.numeric(
        "pretzel qtrace(bone_j jack_i) = kappa d_q^2 f_ij",
        pz,
        1e-10,
    );
    let x = EndQ2Element::from_coeffs(&f221, vec![0.3, -1.2, 2.5]).expect("size 3");
    let id = EndQ2Element::identity(&f221);
    r.numeric(
        "identity composes neutrally",
        id.compose(&x).expect("same space").max_abs_diff(&x),
        1e-10,
    );
    let rr = x
        .rotate(&f221)
        .and_then(|y| y.rotate(&f221))
        .expect("same space");
    r.numeric("rotate is an involution", rr.max_abs_diff(&x), 1e-10);
    for v in [FVariant::Dubrovnik, FVariant::Kauffman] {
        let f = f_matrix(&[2.0, 2.0, 1.0], 1, v).expect("valid dims");
        r.extend(new_bases(&f).expect("k = 2"));
    }
    let (nu, theta) = vertex_normalization(2.0, 3.0, 5.0);
    r.numeric("nu^2 Theta = d_z", (nu * nu * theta - 5.0).abs(), 1e-12);

    let fib = skein_consistency_k1(
        num_complex::Complex64::from_polar(1.0, std::f64::consts::TAU / 5.0),
        1,
    );
    r.exact(
        "k1 consistency at the Fibonacci point",
        matches!(fib, Ok(c) if (c.d_q - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12 && c.twist_residual < 1e-9),
        "",
    );
    let mut agree = true;
    for v in KauffmanVariant::ALL {
        for _ in 0..25 {
            let (a, b, g, k) = random_admissible_k2(&mut rng, v);
            agree &= matches!(skein_consistency_k2(a, b, g, k), Ok(K2Consistency::Classified { variant, .. }) if variant == v);
        }
    }
    r.exact(
        "k2 d_q formulas agree on 100 random eigenvalue triples",
        agree,
        "",
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::NAMES {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let r = laurent_suite();
        assert!(r.passed(), "{r}");
        let r = tl_suite(3, 3).unwrap();
        assert!(r.passed(), "{r}");
        let r = lickorish_suite(2, 3).unwrap();
        assert!(r.passed(), "{r}");
    }
}
