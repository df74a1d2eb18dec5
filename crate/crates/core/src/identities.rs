//! Identity suites on the shuffle module: the E/F/T operator relations
//! and the algebra and module axioms, checked word by word.

use crate::comb::WordComb;
use crate::exactq::{qint, LaurentPoly};
use crate::report::{ReportBuilder, ReportEntry};
use crate::rootdata::{cartan, DimVector, Letter};
use crate::shuffle::{left_delete_comb, right_delete_comb, shuffle_comb, shuffle_words};
use crate::thetamod::{
    ek_apply, right_delete_mod, star_comb, star_letter, star_words, t_exponent, theta_m, EkGen, ThetaElt,
};
use crate::words::{all_words, Word};

/// All words of length at most `max_len` in letters with |k| <= bound.
pub fn words_up_to(bound: i32, max_len: usize) -> Vec<Word> {
    let alpha = Letter::window(bound);
    (0..=max_len).flat_map(|n| all_words(&alpha, n)).collect()
}

fn apply_seq(gens: &[EkGen], u: &ThetaElt) -> WordComb {
    gens.iter().rev().fold(u.clone(), |acc, &g| ek_apply(g, &acc)).terms
}

fn check(lhs: &WordComb, rhs: &WordComb, what: impl FnOnce() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {} != {}", what(), lhs, rhs))
    }
}

fn serre(x: &dyn Fn(Letter, &ThetaElt) -> ThetaElt, i: Letter, j: Letter, u: &ThetaElt) -> WordComb {
    let a = x(j, &x(i, &x(i, u))).terms;
    let b = x(i, &x(j, &x(i, u))).terms;
    let c = x(i, &x(i, &x(j, u))).terms;
    a.sub(&b.scale(&qint(2))).add(&c)
}

fn commutator(x: &dyn Fn(Letter, &ThetaElt) -> ThetaElt, i: Letter, j: Letter, u: &ThetaElt) -> WordComb {
    x(i, &x(j, u)).terms.sub(&x(j, &x(i, u)).terms)
}

/// Checks on every word of length <= `max_len` over the window:
/// T_i = T_theta(i), commuting T's, T-conjugation of E and F, the E-F
/// cross relation, and the F-side Serre and commutation relations. The
/// E-side Serre and commutation relations are checked on the images
/// F_mu v of the vacuum for the same words mu.
pub fn verify_ek(framing: &DimVector, bound: i32, max_len: usize) -> Vec<ReportEntry> {
    let letters = Letter::window(bound);
    let mut rep = ReportBuilder::default();
    let fam = "ek";
    let f_act = |l: Letter, x: &ThetaElt| star_letter(x, l);
    let e_act = |l: Letter, x: &ThetaElt| right_delete_mod(l, x);
    for nu in words_up_to(bound, max_len) {
        let u = ThetaElt::word(framing, &nu);
        let wt = u.weight.to_string();
        for &i in &letters {
            let r = check(&apply_seq(&[EkGen::T(i)], &u), &apply_seq(&[EkGen::T(i.theta())], &u), || {
                format!("{nu} i={i}")
            });
            rep.record(fam, "T_i=T_theta(i)", &wt, r);
            for &j in &letters {
                let at = || format!("{nu} i={i} j={j}");
                let r = check(
                    &apply_seq(&[EkGen::T(i), EkGen::T(j)], &u),
                    &apply_seq(&[EkGen::T(j), EkGen::T(i)], &u),
                    at,
                );
                rep.record(fam, "T_iT_j=T_jT_i", &wt, r);

                let ij = DimVector::letter(i).symmetrize().dot_letter(j);
                let r = check(
                    &apply_seq(&[EkGen::T(i), EkGen::E(j), EkGen::TInv(i)], &u),
                    &apply_seq(&[EkGen::E(j)], &u).scale(&LaurentPoly::q_pow(ij)),
                    at,
                );
                rep.record(fam, "T_iE_jT_i^-1", &wt, r);
                let r = check(
                    &apply_seq(&[EkGen::T(i), EkGen::F(j), EkGen::TInv(i)], &u),
                    &apply_seq(&[EkGen::F(j)], &u).scale(&LaurentPoly::q_pow(-ij)),
                    at,
                );
                rep.record(fam, "T_iF_jT_i^-1", &wt, r);

                let mut rhs = apply_seq(&[EkGen::F(j), EkGen::E(i)], &u).scale(&LaurentPoly::q_pow(-cartan(i, j)));
                if i == j {
                    rhs.add_assign(&u.terms);
                }
                if i.theta() == j {
                    rhs.add_assign(&apply_seq(&[EkGen::T(i)], &u));
                }
                let r = check(&apply_seq(&[EkGen::E(i), EkGen::F(j)], &u), &rhs, at);
                rep.record(fam, "E_iF_j", &wt, r);

                match cartan(i, j) {
                    -1 => {
                        let s = serre(&f_act, i, j, &u);
                        rep.record(fam, "F-serre", &wt, check(&s, &WordComb::zero(), at));
                    }
                    0 => {
                        let c = commutator(&f_act, i, j, &u);
                        rep.record(fam, "F-commute", &wt, check(&c, &WordComb::zero(), at));
                    }
                    _ => {}
                }
            }
        }
        let m = theta_m(&nu, framing);
        let wt = m.weight.to_string();
        for &i in &letters {
            for &j in &letters {
                let at = || format!("F_({nu})v i={i} j={j}");
                match cartan(i, j) {
                    -1 => {
                        let s = serre(&e_act, i, j, &m);
                        rep.record(fam, "E-serre", &wt, check(&s, &WordComb::zero(), at));
                    }
                    0 => {
                        let c = commutator(&e_act, i, j, &m);
                        rep.record(fam, "E-commute", &wt, check(&c, &WordComb::zero(), at));
                    }
                    _ => {}
                }
            }
        }
    }
    rep.finish()
}

/// Associativity and unit of the shuffle product, the module axiom
/// u*(x y) = (u*x)*y with its unit, and the twisted derivation rule for
/// E_i on u*z, on all words over the window with total length <= `max_len`.
pub fn verify_axioms(framing: &DimVector, bound: i32, max_len: usize) -> Vec<ReportEntry> {
    let ws = words_up_to(bound, max_len);
    let letters = Letter::window(bound);
    let mut rep = ReportBuilder::default();
    let fam = "axioms";
    let one = |w: &Word| WordComb::word(w.clone());
    let empty = one(&Word::empty());
    for x in &ws {
        let wx = x.weight().to_string();
        let r = check(&shuffle_comb(&one(x), &empty), &one(x), || format!("{x}"));
        rep.record(fam, "shuffle-unit", &wx, r);
        let r = check(&shuffle_comb(&empty, &one(x)), &one(x), || format!("{x}"));
        rep.record(fam, "shuffle-unit", &wx, r);
        let tw = x.theta_weight().to_string();
        let r = check(&star_words(x, &Word::empty(), framing), &one(x), || format!("{x}"));
        rep.record(fam, "module-unit", &tw, r);
    }
    for x in &ws {
        for y in ws.iter().filter(|y| x.len() + y.len() <= max_len) {
            for z in ws.iter().filter(|z| x.len() + y.len() + z.len() <= max_len) {
                let at = || format!("{x} | {y} | {z}");
                let total = x.concat(y).concat(z);
                let lhs = shuffle_comb(&shuffle_words(x, y), &one(z));
                let rhs = shuffle_comb(&one(x), &shuffle_words(y, z));
                rep.record(fam, "shuffle-assoc", &total.weight().to_string(), check(&lhs, &rhs, at));
                let lhs = star_comb(&star_words(x, y, framing), &one(z), framing);
                let rhs = star_comb(&one(x), &shuffle_words(y, z), framing);
                rep.record(fam, "module-action", &total.theta_weight().to_string(), check(&lhs, &rhs, at));
            }
        }
    }
    for v in &ws {
        for z in ws.iter().filter(|z| v.len() + z.len() <= max_len) {
            let wt = v.concat(z).theta_weight();
            let vz = ThetaElt::from_comb(framing, &wt, star_words(v, z, framing));
            let zc = one(z);
            for &i in &letters {
                let lhs = right_delete_mod(i, &vz).terms;
                let ev = right_delete_comb(i, &one(v));
                let mut rhs = star_comb(&ev, &zc, framing).scale(&LaurentPoly::q_pow(-z.weight().dot_letter(i)));
                rhs.add_assign(&star_comb(&one(v), &right_delete_comb(i, &zc), framing));
                let ep = left_delete_comb(i.theta(), &zc);
                if let Some(z2) = ep.words().next() {
                    let e = -z2.weight().dot_letter(i) + t_exponent(framing, v, i);
                    rhs.add_scaled(&star_comb(&one(v), &ep, framing), &LaurentPoly::q_pow(e));
                }
                let r = check(&lhs, &rhs, || format!("E_{i} on {v} * {z}"));
                rep.record(fam, "twisted-derivation", &wt.to_string(), r);
            }
        }
    }
    rep.finish()
}
