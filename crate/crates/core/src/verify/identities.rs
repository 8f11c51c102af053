//! Series identities and the q-tangent coefficient layer.

use super::{Check, Context, Probe, VerificationReport};
use crate::derivtables::TripleTable;
use crate::permstats::{self, Permutation, Stats};
use crate::poly::{QPoly, XQPoly};
use crate::series::{
    q_secant_big_by_recurrence, q_tangent_by_combined_recurrence, q_tangent_by_recurrence,
    DividedSeries, Mode, QSeries, TrigCache,
};
use crate::special::{hoffman_by_derivative, hoffman_polys, hoffman_secant_gf, hoffman_tangent_gf};
use crate::tcomb::{enumerate_t_compositions, s_compositions};

/// Compares two series up to the smaller order; `false` on a mismatch.
fn series_eq<R>(probe: &mut Probe, label: impl Fn() -> String, lhs: &DividedSeries<R>, rhs: &DividedSeries<R>) -> bool
where
    R: crate::series::Coeff + std::fmt::Display,
{
    match lhs.first_difference(rhs) {
        None => true,
        Some(i) => {
            probe.fail(
                format!("{} coefficient {i}", label()),
                lhs.coeff(i).to_string(),
                rhs.coeff(i).to_string(),
            );
            false
        }
    }
}

fn sum_series(cache: &TrigCache, terms: impl Iterator<Item = QSeries>) -> QSeries {
    terms.fold(cache.one().scale(&QPoly::zero()), |acc, t| {
        acc.add(&t).expect("same mode")
    })
}

fn product(cache: &TrigCache, factors: &[&QSeries]) -> QSeries {
    factors
        .iter()
        .fold(cache.one(), |acc, f| acc.mul(f).expect("same mode"))
}

fn check_derivatives(
    ctx: &Context,
    id: &str,
    base: impl Fn(&TrigCache) -> QSeries,
    rhs: impl Fn(&Context, &TrigCache, usize) -> QSeries,
) -> VerificationReport {
    let b = ctx.bounds();
    let (order, n_max) = (b.order, b.identity_n.min(b.order));
    let mut probe = Probe::default();
    let cache = TrigCache::new(order, n_max + 1);
    let f = base(&cache);
    for n in 0..=n_max {
        let lhs = f.d_q_iter(n).expect("n <= order");
        if !series_eq(&mut probe, || format!("n={n}"), &lhs, &rhs(ctx, &cache, n)) {
            break;
        }
    }
    probe.report(id, &[("n", n_max), ("order", order)])
}

fn k_index(k: i64) -> usize {
    usize::try_from(k).expect("k >= 0 here")
}

fn eq_1_9(ctx: &Context) -> VerificationReport {
    check_derivatives(
        ctx,
        "1.9",
        |c| c.tan(0).into_owned(),
        |ctx, c, n| {
            sum_series(
                c,
                ctx.a().row(n).map(|(key, p)| {
                    let k = k_index(key.k);
                    product(c, &[&c.tan(k + 1).pow(key.b), &c.tan(k).pow(key.a)]).scale(p)
                }),
            )
        },
    )
}

fn eq_1_11(ctx: &Context) -> VerificationReport {
    check_derivatives(
        ctx,
        "1.11",
        |c| c.sec(0).into_owned(),
        |ctx, c, n| {
            sum_series(
                c,
                ctx.b().row(n).map(|(key, p)| {
                    // The seed B_{0,-1,0,0} stands for sec_q(u) alone.
                    let k1 = usize::try_from(key.k + 1).expect("k >= -1");
                    let tan_k = if key.a == 0 {
                        c.one()
                    } else {
                        c.tan(k_index(key.k)).pow(key.a)
                    };
                    product(c, &[&c.tan(k1).pow(key.b), &c.sec(k1), &tan_k]).scale(p)
                }),
            )
        },
    )
}

/// `(k, a, b, q^{n(n-1)/2} B_{n,n-1-k,b,a}(1/q))` for every stored entry.
/// A reversal that is not a polynomial drops its term, so the identity
/// fails at the first coefficient it touches.
fn reversed_b(b: &TripleTable, n: usize) -> Vec<(usize, usize, usize, QPoly)> {
    let d = n * n.saturating_sub(1) / 2;
    b.row(n)
        .map(|(key, p)| {
            let k = usize::try_from(n as i64 - 1 - key.k).expect("k <= n-1");
            (k, key.b, key.a, p.reverse(d).unwrap_or_default())
        })
        .collect()
}

fn eq_1_12(ctx: &Context) -> VerificationReport {
    check_derivatives(
        ctx,
        "1.12",
        |c| c.cap_sec(0).into_owned(),
        |ctx, c, n| {
            sum_series(
                c,
                reversed_b(ctx.b(), n).into_iter().map(|(k, a, b, p)| {
                    product(c, &[&c.tan(k + 1).pow(b), &c.cap_sec(k), &c.tan(k).pow(a)]).scale(&p)
                }),
            )
        },
    )
}

fn eq_1_14(ctx: &Context) -> VerificationReport {
    check_derivatives(
        ctx,
        "1.14",
        |c| c.tan(0).into_owned(),
        |ctx, c, n| {
            sum_series(
                c,
                enumerate_t_compositions(n)
                    .into_iter()
                    .map(|comp| c.tan_product(comp.parts()).scale(&ctx.ac().get(&comp))),
            )
        },
    )
}

fn eq_1_15(ctx: &Context) -> VerificationReport {
    check_derivatives(
        ctx,
        "1.15",
        |c| c.sec(0).into_owned(),
        |ctx, c, n| {
            let sec = c.sec(n);
            sum_series(
                c,
                s_compositions(n).into_iter().map(|comp| {
                    c.tan_product(comp.reduced())
                        .mul(&sec)
                        .expect("same mode")
                        .scale(&ctx.ac().get(&comp))
                }),
            )
        },
    )
}

fn eq_1_16(ctx: &Context) -> VerificationReport {
    check_derivatives(
        ctx,
        "1.16",
        |c| c.cap_sec(0).into_owned(),
        |ctx, c, n| {
            let d = n * n.saturating_sub(1) / 2;
            let sec = c.cap_sec(0);
            sum_series(
                c,
                s_compositions(n).into_iter().map(|comp| {
                    let mirrored: Vec<usize> = comp.reduced().iter().rev().copied().collect();
                    let coeff = ctx.ac().get(&comp).reverse(d).unwrap_or_default();
                    c.tan_product(&mirrored)
                        .mul(&sec)
                        .expect("same mode")
                        .scale(&coeff)
                }),
            )
        },
    )
}

fn first_derivative(
    ctx: &Context,
    id: &str,
    lhs: impl Fn(&TrigCache) -> QSeries,
    rhs: impl Fn(&TrigCache) -> QSeries,
) -> VerificationReport {
    let order = ctx.bounds().trig_order;
    let mut probe = Probe::default();
    if order >= 1 {
        let cache = TrigCache::new(order, 1);
        let l = lhs(&cache).d_q().expect("order >= 1");
        series_eq(&mut probe, || "D_q".into(), &l, &rhs(&cache));
    }
    probe.report(id, &[("order", order)])
}

fn eq_2_3(ctx: &Context) -> VerificationReport {
    first_derivative(
        ctx,
        "2.3",
        |c| c.tan(0).into_owned(),
        |c| c.one().add(&product(c, &[&c.tan(0), &c.tan(1)])).expect("same mode"),
    )
}

fn eq_2_4(ctx: &Context) -> VerificationReport {
    first_derivative(ctx, "2.4", |c| c.sec(0).into_owned(), |c| product(c, &[&c.sec(1), &c.tan(0)]))
}

fn eq_2_5(ctx: &Context) -> VerificationReport {
    first_derivative(
        ctx,
        "2.5",
        |c| c.cap_sec(0).into_owned(),
        |c| product(c, &[&c.cap_sec(0), &c.tan(1)]),
    )
}

fn xq_series(order: usize, f: impl FnMut(usize) -> XQPoly) -> DividedSeries<XQPoly> {
    DividedSeries::from_fn(Mode::Q, order, f).expect("q-mode over XQ")
}

/// `sec_q(u) (1 - x tan_q(u))^{-1}` and the promoted `tan_q`, `Sec_q`, `x`.
struct XqParts {
    tan: DividedSeries<XQPoly>,
    cap_sec: DividedSeries<XQPoly>,
    x: DividedSeries<XQPoly>,
    sec_geometric: DividedSeries<XQPoly>,
}

fn xq_parts(order: usize) -> XqParts {
    let cache = TrigCache::new(order, 0);
    let tan = cache.tan(0).promote();
    let x = xq_series(order, |n| {
        if n == 0 {
            XQPoly::monomial(QPoly::one(), 1)
        } else {
            XQPoly::zero()
        }
    });
    let one = xq_series(order, |n| if n == 0 { XQPoly::one() } else { XQPoly::zero() });
    let den = one.sub(&x.mul(&tan).expect("same mode")).expect("same mode");
    let geometric = den.invert().expect("constant term 1");
    XqParts {
        sec_geometric: cache.sec(0).promote().mul(&geometric).expect("same mode"),
        tan,
        cap_sec: cache.cap_sec(0).promote(),
        x,
    }
}

fn eq_1_19(ctx: &Context) -> VerificationReport {
    let order = ctx.bounds().gf_order;
    let mut probe = Probe::default();
    let p = xq_parts(order);
    let lhs = xq_series(order, |n| ctx.a().generating_poly(n));
    let rhs = p
        .tan
        .add(
            &p.sec_geometric
                .mul(&p.x)
                .and_then(|s| s.mul(&p.cap_sec))
                .expect("same mode"),
        )
        .expect("same mode");
    series_eq(&mut probe, || "Σ A_n(x,q) u^n/(q;q)_n".into(), &lhs, &rhs);
    probe.report("1.19", &[("order", order)])
}

fn eq_1_20(ctx: &Context) -> VerificationReport {
    let order = ctx.bounds().gf_order;
    let mut probe = Probe::default();
    let p = xq_parts(order);
    let lhs = xq_series(order, |n| ctx.b().generating_poly(n));
    series_eq(&mut probe, || "Σ B_n(x,q) u^n/(q;q)_n".into(), &lhs, &p.sec_geometric);
    probe.report("1.20", &[("order", order)])
}

fn hoffman(ctx: &Context, id: &str, tangent: bool) -> VerificationReport {
    let order = ctx.bounds().gf_order;
    let mut probe = Probe::default();
    let (ta, tb) = hoffman_polys(order);
    let (da, db) = hoffman_by_derivative(order);
    let (gf, tri, der) = if tangent {
        (hoffman_tangent_gf(order), ta, da)
    } else {
        (hoffman_secant_gf(order), tb, db)
    };
    let name = if tangent { "A" } else { "B" };
    for n in 0..=order {
        let ok = probe.eq(|| format!("{name}_{n}(x) from the triangle"), &tri[n], gf.coeff(n))
            && probe.eq(|| format!("{name}_{n}(x) by differentiation"), &der[n], gf.coeff(n));
        if !ok {
            break;
        }
    }
    probe.report(id, &[("order", order)])
}

fn check_list(probe: &mut Probe, name: &str, parity: Option<usize>, expected: &[QPoly], actual: &[QPoly]) {
    for (n, (e, a)) in expected.iter().zip(actual).enumerate() {
        if parity.is_some_and(|p| n % 2 != p) {
            continue;
        }
        if !probe.eq(|| format!("{name}_{n}(q)"), e, a) {
            return;
        }
    }
}

fn q_recurrence(ctx: &Context, id: &str, parity: usize) -> VerificationReport {
    let n_max = ctx.bounds().trig_order;
    let mut probe = Probe::default();
    let series = &ctx.qtan().all_a()[..=n_max];
    check_list(&mut probe, "A", Some(parity), series, &q_tangent_by_recurrence(n_max));
    probe.report(id, &[("n", n_max)])
}

fn eq_7_6(ctx: &Context) -> VerificationReport {
    let n_max = ctx.bounds().trig_order;
    let mut probe = Probe::default();
    let rec = q_secant_big_by_recurrence(&q_tangent_by_recurrence(n_max));
    check_list(&mut probe, "A^Sec", None, &ctx.qtan().all_a_sec()[..=n_max], &rec);
    probe.report("7.6", &[("n", n_max)])
}

fn eq_7_combined(ctx: &Context) -> VerificationReport {
    let n_max = ctx.bounds().trig_order;
    let mut probe = Probe::default();
    check_list(&mut probe, "A", None, &ctx.qtan().all_a()[..=n_max], &q_tangent_by_combined_recurrence(n_max));
    probe.report("7.combined", &[("n", n_max)])
}

fn reciprocity(ctx: &Context, id: &str, odd: bool) -> VerificationReport {
    let n_max = ctx.bounds().trig_order;
    let mut probe = Probe::default();
    let q = ctx.qtan();
    for n in (0..=n_max).filter(|n| (n % 2 == 1) == odd) {
        let d = n * n.saturating_sub(1) / 2;
        let target = if odd { q.a(n) } else { q.a_sec(n) };
        let label = || format!("q^{d} A_{n}(1/q)");
        let ok = match q.a(n).reverse(d) {
            Ok(r) => probe.eq(label, target, &r),
            Err(e) => {
                probe.fail(label(), target.to_string(), e.to_string());
                false
            }
        };
        if !ok {
            break;
        }
    }
    probe.report(id, &[("n", n_max)])
}

fn alternating_sum(perms: impl Iterator<Item = Permutation>, stat: fn(&Stats) -> usize) -> QPoly {
    perms.map(|p| QPoly::q_pow(stat(&Stats::of(p.values())))).sum()
}

fn thm_7_1(ctx: &Context) -> VerificationReport {
    let len = ctx.bounds().alt_len;
    let mut probe = Probe::default();
    let q = ctx.qtan();
    let stats: [(&str, fn(&Stats) -> usize, usize); 2] = [
        ("inv", |s| s.inv, len),
        ("imaj", |s| s.imaj, len.saturating_sub(1)),
    ];
    'outer: for (name, stat, max) in stats {
        for n in 0..=max {
            let ra = alternating_sum(permstats::enumerate_ra(n), stat);
            let fa = alternating_sum(permstats::enumerate_fa(n), stat);
            let fa_target = if n % 2 == 1 { q.a(n) } else { q.a_sec(n) };
            let ok = probe.eq(|| format!("Σ_RA_{n} q^{name}"), q.a(n), &ra)
                && probe.eq(|| format!("Σ_FA_{n} q^{name}"), fa_target, &fa);
            if !ok {
                break 'outer;
            }
        }
    }
    probe.report("thm7.1", &[("inv_len", len), ("imaj_len", len.saturating_sub(1))])
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "2.3",
            description: "D_q tan_q = 1 + tan_q(u) tan_q(qu)",
            run: eq_2_3,
        },
        Check {
            id: "2.4",
            description: "D_q sec_q = sec_q(qu) tan_q(u)",
            run: eq_2_4,
        },
        Check {
            id: "2.5",
            description: "D_q Sec_q = Sec_q(u) tan_q(qu)",
            run: eq_2_5,
        },
        Check {
            id: "1.9",
            description: "D_q^n tan_q expanded with A_{n,k,a,b}",
            run: eq_1_9,
        },
        Check {
            id: "1.11",
            description: "D_q^n sec_q expanded with B_{n,k,a,b}",
            run: eq_1_11,
        },
        Check {
            id: "1.12",
            description: "D_q^n Sec_q expanded with reversed B_{n,k,a,b}",
            run: eq_1_12,
        },
        Check {
            id: "1.14",
            description: "D_q^n tan_q expanded with A_{n,c}",
            run: eq_1_14,
        },
        Check {
            id: "1.15",
            description: "D_q^n sec_q expanded with A_{n,c} over s-compositions",
            run: eq_1_15,
        },
        Check {
            id: "1.16",
            description: "D_q^n Sec_q expanded with reversed A_{n,c} and mirrored compositions",
            run: eq_1_16,
        },
        Check {
            id: "1.19",
            description: "generating function of A_n(x,q)",
            run: eq_1_19,
        },
        Check {
            id: "1.20",
            description: "generating function of B_n(x,q)",
            run: eq_1_20,
        },
        Check {
            id: "1.6",
            description: "(x + tan u)/(1 - x tan u) generates A_n(x)",
            run: |ctx| hoffman(ctx, "1.6", true),
        },
        Check {
            id: "1.7",
            description: "1/(cos u - x sin u) generates B_n(x)",
            run: |ctx| hoffman(ctx, "1.7", false),
        },
        Check {
            id: "7.4",
            description: "A_{2n+1}(q) by its convolution recurrence",
            run: |ctx| q_recurrence(ctx, "7.4", 1),
        },
        Check {
            id: "7.5",
            description: "A_{2n}(q) by its convolution recurrence",
            run: |ctx| q_recurrence(ctx, "7.5", 0),
        },
        Check {
            id: "7.6",
            description: "A^Sec_{2n}(q) by its convolution recurrence",
            run: eq_7_6,
        },
        Check {
            id: "7.combined",
            description: "A_n(q) by the single combined recurrence",
            run: eq_7_combined,
        },
        Check {
            id: "7.11",
            description: "A_{2n+1}(q) is self-reciprocal",
            run: |ctx| reciprocity(ctx, "7.11", true),
        },
        Check {
            id: "7.12",
            description: "the reversal of A_{2n}(q) is A^Sec_{2n}(q)",
            run: |ctx| reciprocity(ctx, "7.12", false),
        },
        Check {
            id: "thm7.1",
            description: "A_n(q) and A^Sec_n(q) as inv and imaj sums over alternating permutations",
            run: thm_7_1,
        },
    ]
}
