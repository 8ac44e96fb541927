//! Named verification suites. Each returns one result per sub-check; checks
//! that enumerate permutations are capped at the oracle's limit.

use std::fmt;

use clap::ValueEnum;
use num_bigint::BigInt;

use super::report::{ResultEntry, Status};
use crate::check::{ensure, Check, Witness};
use crate::divisibility::{
    build_ev, check_gn_ev, check_pochhammer_orders, check_q_power_divisibility,
    check_q_power_recursion, check_thm42_on, factor_alt, odd_quotient, one_plus_divides,
    thm411_bijection_check, verify_conj410, Construction,
};
use crate::error::Result;
use crate::gamma::{
    cd_index_check, down_up_simsun_count, q_gamma_extract, simsun_relation_check, two_sided_extract,
};
use crate::oracle::Oracle;
use crate::poly::{gamma_expand, is_log_concave, is_palindromic, is_unimodal, IntPoly};
use crate::recurrences::{
    chebikin_check_with, egf_check, euler_numbers, faa_di_bruno_altmaj, five_term_table,
    gamma_rec_table, quadratic_tq_table, simsun_table, SimsunMethod,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "thm2.1")]
    Thm21,
    #[value(name = "eq1")]
    Eq1,
    #[value(name = "thm3.1")]
    Thm31,
    #[value(name = "thm3.2")]
    Thm32,
    #[value(name = "cor3.3")]
    Cor33,
    #[value(name = "prop3.4")]
    Prop34,
    #[value(name = "cor3.5")]
    Cor35,
    #[value(name = "thm4.2")]
    Thm42,
    #[value(name = "thm4.5")]
    Thm45,
    #[value(name = "thm4.6")]
    Thm46,
    #[value(name = "thm4.11")]
    Thm411,
    #[value(name = "eq2")]
    Eq2,
    #[value(name = "eq-fn0")]
    EqFn0,
    #[value(name = "conj4.10")]
    Conj410,
    #[value(name = "conj5.1")]
    Conj51,
    #[value(name = "conj5.2")]
    Conj52,
    #[value(name = "conj5.3")]
    Conj53,
    #[value(name = "equidist")]
    Equidist,
    #[value(name = "double-count")]
    DoubleCount,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

/// First `n` in `range` where `f` fails, as a single check.
fn each(
    range: impl IntoIterator<Item = usize>,
    mut f: impl FnMut(usize) -> Result<Check>,
) -> Result<Check> {
    for n in range {
        if let Err(w) = f(n)? {
            return Ok(Err(w));
        }
    }
    Ok(Ok(()))
}

fn poly_eq(n: usize, what: &str, left: &IntPoly, right: &IntPoly) -> Check {
    ensure(left == right, || {
        format!(
            "n = {n}: {what}: {} != {}",
            left.display('x'),
            right.display('x')
        )
    })
}

pub fn run_suite(suite: Suite, max_n: usize, oracle: &Oracle) -> Result<Vec<ResultEntry>> {
    let big = max_n.max(1);
    let brute = max_n.min(oracle.brute_max());
    let mut out = Vec::new();
    match suite {
        Suite::Thm21 => {
            let table = five_term_table(big)?;
            out.push(ResultEntry::check(
                format!("five-term recurrence is integral (n <= {big})"),
                Ok(()),
            ));
            out.push(ResultEntry::check(
                format!("five_term = brute_alt_eulerian (n <= {brute})"),
                each(1..=brute, |n| {
                    Ok(poly_eq(
                        n,
                        "five_term vs brute force",
                        &table[n],
                        &oracle.brute_alt_eulerian(n)?,
                    ))
                })?,
            ));
            out.push(ResultEntry::check(
                format!(
                    "insertions build S_(n+1) twice (n <= {})",
                    brute.saturating_sub(1)
                ),
                each(0..brute, |n| oracle.double_count_check(n))?,
            ));
        }
        Suite::Eq1 => {
            let table = five_term_table(big)?;
            out.push(ResultEntry::check(
                format!("convolution identity (n <= {big})"),
                each(1..=big, |n| Ok(chebikin_check_with(&table, n)))?,
            ));
        }
        Suite::Thm31 => {
            let table = five_term_table(big)?;
            out.push(ResultEntry::check(
                format!("palindromic and unimodal (n <= {big})"),
                each(1..=big, |n| {
                    let h = table[n].coeffs();
                    Ok(ensure(is_palindromic(h) && is_unimodal(h), || {
                        format!("n = {n}: {}", table[n].display('t'))
                    }))
                })?,
            ));
        }
        Suite::Thm32 => {
            let table = five_term_table(big)?;
            let gammas = gamma_rec_table(big);
            out.push(ResultEntry::check(
                format!("gamma_expand(five_term) = gamma_rec (n <= {big})"),
                each(1..=big, |n| {
                    let g = gamma_expand(&table[n], n)?;
                    Ok(poly_eq(n, "gamma vector", &g.as_poly(), &gammas[n]))
                })?,
            ));
            out.push(ResultEntry::check(
                format!("a_n(x) = R_(n-1)(x+1) (n <= {big})"),
                each(1..=big, simsun_relation_check)?,
            ));
            let euler = euler_numbers(big + 1);
            out.push(ResultEntry::check(
                format!("a(n,1) = n E_n - E_(n+1) (3 <= n <= {big})"),
                each(3..=big, |n| {
                    let want = BigInt::from(n) * &euler[n] - &euler[n + 1];
                    let got = gammas[n].coeff(1);
                    Ok(ensure(got == want, || format!("n = {n}: {got} != {want}")))
                })?,
            ));
            for method in [SimsunMethod::Derivative, SimsunMethod::Quadratic] {
                let rs = simsun_table(brute, method);
                out.push(ResultEntry::check(
                    format!("simsun_rec({method:?}) = brute_simsun (n <= {brute})"),
                    each(1..=brute, |n| {
                        Ok(poly_eq(
                            n,
                            "Simsun descents",
                            &rs[n],
                            &oracle.brute_simsun(n)?,
                        ))
                    })?,
                ));
            }
        }
        Suite::Cor33 => {
            let table = five_term_table(big)?;
            let euler = euler_numbers(big + 1);
            out.push(ResultEntry::check(
                format!("Â_(2k+1)(-1) = E_(2k+1) (2k+1 <= {big})"),
                each((1..=big).step_by(2), |n| {
                    let v = table[n].eval_i64(-1);
                    Ok(ensure(v == euler[n], || {
                        format!("n = {n}: {v} != {}", euler[n])
                    }))
                })?,
            ));
            out.push(ResultEntry::check(
                format!("down-up Simsun count = E_(2k+1)/2^k (2k <= {brute})"),
                each((2..=brute).step_by(2), |n2| {
                    let got = BigInt::from(down_up_simsun_count(n2, oracle)?);
                    let want = &euler[n2 + 1] >> (n2 / 2);
                    Ok(ensure(got == want, || {
                        format!("length {n2}: {got} != {want}")
                    }))
                })?,
            ));
        }
        Suite::Prop34 => {
            let table = five_term_table(brute.max(1))?;
            out.push(ResultEntry::check(
                format!("ab-index identities and cd specializations (n <= {brute})"),
                each(1..=brute, |n| {
                    Ok(cd_index_check(n, &oracle.brute_cd_index(n)?, &table[n]))
                })?,
            ));
        }
        Suite::Cor35 => {
            let derivative = simsun_table(big, SimsunMethod::Derivative);
            let quadratic = simsun_table(big, SimsunMethod::Quadratic);
            out.push(ResultEntry::check(
                format!("quadratic Simsun recursion = derivative form (n <= {big})"),
                each(0..=big, |n| {
                    Ok(poly_eq(n, "R_n", &quadratic[n], &derivative[n]))
                })?,
            ));
            let alt = five_term_table(big)?;
            let tq = quadratic_tq_table(big)?;
            out.push(ResultEntry::check(
                format!("quadratic_tq at q = 1 equals five_term (n <= {big})"),
                each(1..=big, |n| {
                    Ok(poly_eq(n, "Â_n(t, 1)", &tq[n].at_q_one(), &alt[n]))
                })?,
            ));
        }
        Suite::Thm42 => {
            out.push(ResultEntry::check(
                format!("(1+q^m)^(n/2m) divides Â_n(1,q) (2 <= n <= {big})"),
                each(2..=big, |n| Ok(check_thm42_on(n, &faa_di_bruno_altmaj(n)?)))?,
            ));
            out.push(ResultEntry::check(
                format!("1+q^m | 1+q^n iff n/m is odd (m, n <= {big})"),
                each(1..=big, |m| {
                    each(1..=big, |n| {
                        Ok(ensure(one_plus_divides(m, n) == odd_quotient(m, n), || {
                            format!("m = {m}, n = {n}")
                        }))
                    })
                })?,
            ));
            out.push(ResultEntry::check(
                format!("order of 1+q^m in (q;q)_n is n/2m (n <= {big})"),
                each(1..=big, |n| Ok(check_pochhammer_orders(n)))?,
            ));
            out.push(ResultEntry::check(
                format!("G_n product = cyclotomic form, G_2k = G_2k+1 = prod Ev (n <= {big})"),
                each(0..=big, |n| Ok(check_gn_ev(n)))?,
            ));
            out.push(ResultEntry::check(
                format!("Ev_k product = cyclotomic form (k <= {big})"),
                each(1..=big, |k| {
                    Ok(ensure(
                        build_ev(k, Construction::Product) == build_ev(k, Construction::Cyclotomic),
                        || format!("k = {k}"),
                    ))
                })?,
            ));
        }
        Suite::Thm45 | Suite::Thm46 => {
            let max_j = 4;
            let table = quadratic_tq_table(big)?;
            if suite == Suite::Thm45 {
                out.push(ResultEntry::check(
                    format!("(1+q)-order of Â_n(q^j,q) by substitution (n <= {big}, j <= {max_j})"),
                    check_q_power_divisibility(&table, big, max_j),
                ));
            } else {
                out.push(ResultEntry::check(
                    format!("(1+q)-order of Â_n(q^j,q) by the specialized recursion (n <= {big}, j <= {max_j})"),
                    check_q_power_recursion(&table, big, max_j)?,
                ));
            }
        }
        Suite::Thm411 => {
            out.push(ResultEntry::check(
                format!("prefix reversal shifts altmaj by m mod 2m (n <= {brute}, all m)"),
                each(2..=brute, |n| {
                    each(1..=n / 2, |m| thm411_bijection_check(n, m, oracle))
                })?,
            ));
        }
        Suite::Eq2 => {
            out.push(ResultEntry::check(
                format!("exponential generating function through z^{big}"),
                egf_check(big)?,
            ));
        }
        Suite::EqFn0 => {
            let tq = quadratic_tq_table(big)?;
            let mut fdb = vec![IntPoly::one()];
            for n in 1..=big {
                fdb.push(faa_di_bruno_altmaj(n)?);
            }
            out.push(ResultEntry::check(
                format!("F^(n)(0) (q;q)_n = quadratic_tq at t = 1 (n <= {big})"),
                each(1..=big, |n| {
                    Ok(poly_eq(n, "Â_n(1,q)", &fdb[n], &tq[n].at_t_one()))
                })?,
            ));
            out.push(ResultEntry::check(
                format!("F^(n)(0) (q;q)_n = brute force (n <= {brute})"),
                each(1..=brute, |n| {
                    Ok(poly_eq(
                        n,
                        "Â_n(1,q)",
                        &fdb[n],
                        &oracle.brute_qalt(n)?.at_t_one(),
                    ))
                })?,
            ));
            out.push(ResultEntry::check(
                format!("Ê_n palindromic with constant term E_n (2 <= n <= {big})"),
                each(2..=big, |n| {
                    let f = factor_alt(n, &fdb[n])?;
                    Ok(ensure(
                        f.verdicts.e_hat_palindromic && f.verdicts.constant_term_is_euler,
                        || format!("n = {n}: {:?}", f.verdicts),
                    ))
                })?,
            ));
        }
        Suite::Conj410 => {
            for n in 2..=brute {
                let report = verify_conj410(n, oracle)?;
                let mut entry =
                    ResultEntry::verdict(format!("binomial criterion, n = {n}"), report.outcome());
                if report.rows.iter().any(|r| !r.sound()) {
                    entry.status = Status::Fail;
                }
                out.push(entry);
            }
        }
        Suite::Conj51 => {
            let table = five_term_table(big)?;
            out.push(ResultEntry::verdict(
                format!("Â_n(t) is log-concave (n <= {big})"),
                each(1..=big, |n| {
                    Ok(ensure(is_log_concave(table[n].coeffs()), || {
                        format!("n = {n}")
                    }))
                })?,
            ));
        }
        Suite::Conj52 => {
            let tq = quadratic_tq_table(big)?;
            let gammas = gamma_rec_table(big);
            let mut extraction: Check = Ok(());
            let mut verdicts: Check = Ok(());
            for n in 1..=big {
                let g = match q_gamma_extract(&tq[n], n) {
                    Ok(g) => g,
                    Err(e) => {
                        extraction = Err(Witness(e.to_string()));
                        break;
                    }
                };
                if g.reconstruct() != tq[n] {
                    extraction = Err(Witness(format!("n = {n}: reconstruction differs")));
                    break;
                }
                for (k, gk) in g.gammas.iter().enumerate() {
                    let want = &gammas[n].coeff(k) << k;
                    if gk.total() != want {
                        extraction = Err(Witness(format!(
                            "n = {n}, k = {k}: γ̂(1) = {} but 2^k a(n,k) = {want}",
                            gk.total()
                        )));
                    }
                }
                if extraction.is_err() {
                    break;
                }
                if verdicts.is_ok() {
                    verdicts = g.verdict();
                }
            }
            out.push(ResultEntry::check(
                format!(
                    "q-gamma expansion exists and reconstructs, γ̂(1) = 2^k a(n,k) (n <= {big})"
                ),
                extraction,
            ));
            out.push(ResultEntry::verdict(
                format!("γ̂_(n,k)(q) nonnegative with (1+q)^k as a divisor (n <= {big})"),
                verdicts,
            ));
            out.push(ResultEntry::check(
                format!("Θ involution moves (altdes, altmaj) as required (n <= {brute})"),
                each(1..=brute, |n| oracle.theta_check(n))?,
            ));
        }
        Suite::Conj53 => {
            let alt = five_term_table(brute.max(1))?;
            let mut extraction: Check = Ok(());
            let mut verdicts: Check = Ok(());
            for n in 1..=brute {
                let a = oracle.brute_two_sided(n)?;
                let g = match two_sided_extract(&a, n) {
                    Ok(g) => g,
                    Err(e) => {
                        extraction = Err(Witness(e.to_string()));
                        break;
                    }
                };
                if g.reconstruct() != a {
                    extraction = Err(Witness(format!("n = {n}: reconstruction differs")));
                    break;
                }
                let at_s_one = a.at_t_one();
                if at_s_one != alt[n] {
                    extraction = Err(Witness(format!("n = {n}: Ã_n(1, t) != Â_n(t)")));
                    break;
                }
                if verdicts.is_ok() {
                    verdicts = g.verdict();
                }
            }
            out.push(ResultEntry::check(
                format!(
                    "two-sided expansion exists and reconstructs, Ã_n(1,t) = Â_n(t) (n <= {brute})"
                ),
                extraction,
            ));
            out.push(ResultEntry::verdict(
                format!("two-sided gamma coefficients nonnegative (n <= {brute})"),
                verdicts,
            ));
        }
        Suite::Equidist => {
            let top = brute.saturating_sub(1);
            out.push(ResultEntry::check(
                format!("altdes on S_n ~ des3 on S_(n+1) with π_1 = 1 (n <= {top})"),
                each(1..=top, |n| oracle.equidistribution_check(n))?,
            ));
        }
        Suite::DoubleCount => {
            let top = brute.saturating_sub(1);
            out.push(ResultEntry::check(
                format!("insertions build S_(n+1) twice with the four altdes moves (n <= {top})"),
                each(0..=top, |n| oracle.double_count_check(n))?,
            ));
        }
    }
    Ok(out)
}
