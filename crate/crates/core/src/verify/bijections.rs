//! The insertion bijections and the transformations Φ and ψ.

use std::collections::BTreeSet;

use super::{Check, Context, Probe, VerificationReport};
use crate::permstats::{self, Permutation, Stats};
use crate::tcomb::{enumerate_t_permutations, InsertionKind, TPermutation};

fn t_perms(probe: &mut Probe, n: usize) -> Vec<TPermutation> {
    match enumerate_t_permutations(n, n) {
        Ok(it) => it.collect(),
        Err(e) => {
            probe.fail(format!("T_{n}"), "enumeration".into(), e.to_string());
            Vec::new()
        }
    }
}

fn valid(w: &TPermutation) -> bool {
    TPermutation::new(w.components().to_vec()).is_ok()
}

/// Statistics of `Δ*(i,w)` and `*Δ(i,w)` predicted from those of `w`.
fn sweep_one(probe: &mut Probe, w: &TPermutation, i: usize) -> bool {
    let s = w.stats();
    let before = w.components()[..i].iter().map(Vec::len).sum::<usize>();
    let gains = s.min.is_some_and(|m| m < i);
    let mut iligne: Vec<usize> = Stats::of(&w.word()).iligne.iter().map(|x| x + 1).collect();
    if gains {
        iligne.insert(0, 1);
    }
    let images = [
        (InsertionKind::First, "Δ*", w.delta_star(i), i, s.mu + 1),
        (InsertionKind::Second, "*Δ", w.star_delta(i), i - 1, s.mu - 1),
    ];
    for (_, name, image, min, mu) in images {
        let at = |what: &str| format!("{what} of {name}({i}, {w})");
        let v = match image {
            Ok(v) => v,
            Err(e) => {
                probe.fail(at("image"), "t-permutation".into(), e.to_string());
                return false;
            }
        };
        let t = v.stats();
        let vs = Stats::of(&v.word());
        let ok = probe.holds(|| at("validity"), valid(&v))
            && probe.eq(|| at("iligne"), &format!("{iligne:?}"), &format!("{:?}", vs.iligne))
            && probe.eq(|| at("ides"), &(s.ides + usize::from(gains)), &t.ides)
            && probe.eq(|| at("imaj"), &(s.imaj + s.ides + usize::from(gains)), &t.imaj)
            && probe.eq(|| at("inv"), &(s.inv + before), &t.inv)
            && probe.holds(|| format!("{} = {min}", at("min")), t.min == Some(min))
            && probe.eq(|| at("μ"), &mu, &t.mu);
        if !ok {
            return false;
        }
    }
    true
}

fn thm_3_1(ctx: &Context) -> VerificationReport {
    let n_max = ctx.bounds().sweep_n;
    let mut probe = Probe::default();
    'outer: for n in 0..=n_max {
        for w in t_perms(&mut probe, n) {
            for i in 1..=w.mu() {
                if !sweep_one(&mut probe, &w, i) {
                    break 'outer;
                }
            }
        }
    }
    probe.report("thm3.1", &[("n", n_max)])
}

/// Forward then backward from `T_n`, and backward then forward from
/// `T_{n+1}`.
fn delta_roundtrip(ctx: &Context) -> VerificationReport {
    let n_max = ctx.bounds().sweep_n;
    let mut probe = Probe::default();
    'outer: for n in 0..=n_max {
        for w in t_perms(&mut probe, n) {
            for i in 1..=w.mu() {
                let images = [
                    (InsertionKind::First, w.delta_star(i)),
                    (InsertionKind::Second, w.star_delta(i)),
                ];
                for (kind, image) in images {
                    let back = image.and_then(|v| v.undo_insertion());
                    let ok = match back {
                        Ok((k, j, u)) => probe.holds(
                            || format!("{kind:?} insertion at {i} into {w}"),
                            k == kind && j == i && u == w,
                        ),
                        Err(e) => {
                            probe.fail(format!("{kind:?} insertion at {i} into {w}"), "inverse".into(), e.to_string());
                            false
                        }
                    };
                    if !ok {
                        break 'outer;
                    }
                }
            }
        }
        for v in t_perms(&mut probe, n + 1) {
            let redo = v.undo_insertion().and_then(|(kind, i, u)| match kind {
                InsertionKind::First => u.delta_star(i),
                InsertionKind::Second => u.star_delta(i),
            });
            let ok = match redo {
                Ok(r) => probe.eq(|| format!("undo then redo {v}"), &v, &r),
                Err(e) => {
                    probe.fail(format!("undo {v}"), v.to_string(), e.to_string());
                    false
                }
            };
            if !ok {
                break 'outer;
            }
        }
    }
    probe.report("delta.roundtrip", &[("n", n_max)])
}

fn perm(values: &[usize]) -> Permutation {
    Permutation::new(values.to_vec()).expect("literal permutation")
}

fn eq_7_10(ctx: &Context) -> VerificationReport {
    let n_max = ctx.bounds().perm_n;
    let mut probe = Probe::default();
    let sigma = perm(&[7, 4, 9, 2, 6, 1, 5, 8, 3]);
    probe.eq(
        || format!("Φ({sigma})"),
        &perm(&[4, 7, 2, 6, 1, 9, 5, 8, 3]),
        &sigma.foata_phi(),
    );
    'outer: for n in 0..=n_max {
        let mut images = BTreeSet::new();
        for p in permstats::enumerate(n) {
            let phi = p.foata_phi();
            let (s, t) = (p.stats(), phi.stats());
            let ok = probe.eq(|| format!("inv Φ({p})"), &s.maj, &t.inv)
                && probe.eq(|| format!("iligne Φ({p})"), &format!("{:?}", s.iligne), &format!("{:?}", t.iligne));
            if !ok {
                break 'outer;
            }
            images.insert(phi);
        }
        let total = (1..=n).product::<usize>();
        probe.eq(|| format!("|Φ(S_{n})|"), &total, &images.len());
    }
    probe.report("7.10", &[("n", n_max)])
}

fn eq_8_1(ctx: &Context) -> VerificationReport {
    let n_max = ctx.bounds().perm_n;
    let mut probe = Probe::default();
    let sigma = perm(&[6, 4, 9, 2, 7, 5, 1, 8, 3]);
    let image = sigma.psi();
    probe.eq(|| format!("ψ({sigma})"), &perm(&[5, 3, 9, 1, 7, 4, 2, 8, 6]), &image);
    probe.eq(|| format!("inv ψ({sigma})"), &17, &image.stats().inv);
    'outer: for n in 0..=n_max {
        let mut images = BTreeSet::new();
        for p in permstats::enumerate(n) {
            let psi = p.psi();
            let (s, t) = (p.stats(), psi.stats());
            let ok = probe.eq(|| format!("inv ψ({p})"), &s.imaj, &t.inv)
                && probe.eq(|| format!("ligne ψ({p})"), &format!("{:?}", s.ligne), &format!("{:?}", t.ligne));
            if !ok {
                break 'outer;
            }
            images.insert(psi);
        }
        let total = (1..=n).product::<usize>();
        probe.eq(|| format!("|ψ(S_{n})|"), &total, &images.len());
    }
    probe.report("8.1", &[("n", n_max)])
}

fn eq_8_2(ctx: &Context) -> VerificationReport {
    let n_max = ctx.bounds().perm_n;
    let mut probe = Probe::default();
    let w = TPermutation::new(vec![vec![], vec![6], vec![4], vec![9, 2, 7], vec![5, 1, 8, 3]])
        .expect("literal t-permutation");
    let expected = TPermutation::new(vec![vec![], vec![5], vec![3], vec![9, 1, 7], vec![4, 2, 8, 6]])
        .expect("literal t-permutation");
    let image = w.psi();
    probe.eq(|| format!("ψ{w}"), &expected, &image);
    probe.eq(|| format!("imaj {w}"), &17, &w.stats().imaj);
    'outer: for n in 0..=n_max {
        let all = t_perms(&mut probe, n);
        let mut images = BTreeSet::new();
        for w in &all {
            let v = w.psi();
            let ok = probe.holds(|| format!("ψ{w} is a t-permutation"), valid(&v))
                && probe.eq(|| format!("Λ ψ{w}"), &w.lambda(), &v.lambda())
                && probe.eq(|| format!("inv ψ{w}"), &w.stats().imaj, &v.stats().inv);
            if !ok {
                break 'outer;
            }
            images.insert(v);
        }
        probe.eq(|| format!("|ψ(T_{n})|"), &all.len(), &images.len());
    }
    probe.report("8.2", &[("n", n_max)])
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "thm3.1",
            description: "statistics of Δ*(i,w) and *Δ(i,w) for every w and i",
            run: thm_3_1,
        },
        Check {
            id: "delta.roundtrip",
            description: "Δ* and *Δ are inverted exactly by removing the letter 1",
            run: delta_roundtrip,
        },
        Check {
            id: "7.10",
            description: "Φ: maj σ = inv Φ(σ), iligne preserved, bijective, worked example",
            run: eq_7_10,
        },
        Check {
            id: "8.1",
            description: "ψ: inv ψ(σ) = imaj σ, ligne preserved, bijective, worked example",
            run: eq_8_1,
        },
        Check {
            id: "8.2",
            description: "ψ on t-permutations keeps Λ and sends imaj to inv",
            run: eq_8_2,
        },
    ]
}
