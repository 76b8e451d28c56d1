use super::{Check, Identity};
use crate::context::Engine;
use crate::derivation::{complete_h, VectorFieldData, VectorId};
use crate::error::Result;
use crate::expr::{Degree, ExprSum, Expression, Generator, Polynomial};
use crate::genus2::{A1Arg, CdPath, F2Route, PredictionRoute};
use crate::rational::Rat;

type E = Expression;

fn q(n: i64, d: i64) -> E {
    E::frac(n, d)
}

fn prod(fs: &[&E]) -> E {
    fs.iter().fold(E::one(), |acc, f| &acc * *f)
}

fn sum<I: IntoIterator<Item = E>>(it: I) -> E {
    let mut acc = ExprSum::new();
    for x in it {
        acc.add(&x);
    }
    acc.finish()
}

fn try_sum<I: IntoIterator<Item = Result<E>>>(it: I) -> Result<E> {
    let mut acc = ExprSum::new();
    for x in it {
        acc.add(&x?);
    }
    Ok(acc.finish())
}

fn idx(e: &Engine) -> std::ops::RangeInclusive<usize> {
    e.ctx().indices()
}

/// Ordered pairs `i != j`.
fn off_pairs(e: &Engine) -> Vec<(usize, usize)> {
    idx(e).flat_map(|i| idx(e).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

/// Generators up to t-level 2.
fn low_generators(e: &Engine) -> Vec<E> {
    let mut out = Vec::new();
    for i in idx(e) {
        out.extend([E::u(i), E::s(i), E::t(2, i)]);
        for j in i..=e.n() {
            out.push(E::r(i, j));
        }
    }
    out
}

/// The part of `x` whose numerator terms satisfy `keep`.
fn filter_terms(x: &E, keep: impl Fn(&crate::expr::Monomial) -> bool) -> E {
    let terms = x.numerator().terms().iter().filter(|(m, _)| keep(m)).cloned();
    E::from_parts(Polynomial::from_terms(terms), *x.denominator())
}

fn degree_check(label: String, x: &E, d: i64) -> Check {
    let ok = matches!(x.degree(), Degree::Any) || x.degree() == Degree::Homogeneous(d);
    Check::holds(format!("{label}: degree {d}"), ok, x.clone())
}

/// Sorted index tuples of length `k` over `1..=n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 1, &mut Vec::new(), &mut out);
    out
}

/// All index tuples of length `k` over `1..=n`.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|t| (1..=n).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

fn label(name: &str, ix: &[usize]) -> String {
    let s: String = ix.iter().map(|i| i.to_string()).collect();
    format!("{name}_{s}")
}

fn theta_sym(e: &Engine) -> Result<Vec<Check>> {
    off_pairs(e)
        .into_iter()
        .map(|(i, j)| {
            let rhs = -sum(idx(e).map(|k| &E::r(i, k) * &E::r(j, k)));
            Ok(Check::equal(label("theta", &[i, j]), &e.theta(i, j)? + &e.theta(j, i)?, rhs))
        })
        .collect()
}

fn omega_sym(e: &Engine) -> Result<Vec<Check>> {
    off_pairs(e)
        .into_iter()
        .filter(|(i, j)| i < j)
        .map(|(i, j)| Ok(Check::equal(label("omega", &[i, j]), e.omega(i, j)?, e.omega(j, i)?)))
        .collect()
}

fn lambda_sym(e: &Engine) -> Result<Vec<Check>> {
    off_pairs(e)
        .into_iter()
        .filter(|(i, j)| i < j)
        .map(|(i, j)| {
            let rhs =
                try_sum(idx(e).map(|k| Ok(&e.theta_ext(i, k)? * &e.theta_ext(j, k)?)))?;
            Ok(Check::equal(label("lambda", &[i, j]), &e.lambda(i, j)? + &e.lambda(j, i)?, rhs))
        })
        .collect()
}

fn idem_commute(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for x in low_generators(e) {
        for (i, j) in off_pairs(e).into_iter().filter(|(i, j)| i < j) {
            let lhs = e.derive(i, &e.derive(j, &x)?)?;
            let rhs = e.derive(j, &e.derive(i, &x)?)?;
            out.push(Check::equal(format!("[E{i},E{j}] {x}"), lhs, rhs));
        }
    }
    Ok(out)
}

fn theta_derivative(e: &Engine) -> Result<Vec<Check>> {
    off_pairs(e)
        .into_iter()
        .map(|(i, j)| {
            let th = e.theta(i, j)?;
            let coeff = &E::r(j, j) - &(&E::s_ratio(j, i) * &E::r(i, j));
            let rhs = &(&coeff * &th) - &e.omega(i, j)?;
            Ok(Check::equal(format!("E{j} theta_{i}{j}"), e.derive(j, &th)?, rhs))
        })
        .collect()
}

fn omega_derivative(e: &Engine) -> Result<Vec<Check>> {
    off_pairs(e)
        .into_iter()
        .map(|(i, j)| {
            let mut br = ExprSum::new();
            for k in idx(e) {
                br.add(&E::r(i, k).pow(2));
                if k != i {
                    br.add(&(&E::s_ratio(k, i) * &e.theta(k, i)?));
                }
            }
            br.add(&(&E::s_ratio(i, j) * &e.theta(i, j)?));
            let rhs = &(&e.theta(j, i)? * &br.finish()) + &e.lambda(i, j)?;
            Ok(Check::equal(format!("E{i} Omega_{i}{j}"), e.derive(i, &e.omega(i, j)?)?, rhs))
        })
        .collect()
}

fn lambda_pole_order(e: &Engine) -> Result<Vec<Check>> {
    off_pairs(e)
        .into_iter()
        .map(|(i, j)| {
            let x = &E::delta(i.min(j), i.max(j)) * &e.lambda(j, i)?;
            let m = x.delta_multiplicity(i.min(j), i.max(j));
            Ok(Check::holds(format!("(u{i}-u{j}) Lambda_{j}{i}: pole order {m}"), m <= 2, x))
        })
        .collect()
}

fn corr_symmetry(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (genus, arities) in [(1u8, 1..=4usize), (0u8, 4..=7usize)] {
        for k in arities {
            for t in tuples(e.n(), k) {
                let mut sorted = t.clone();
                sorted.sort_unstable();
                if sorted == t {
                    continue;
                }
                let name = if genus == 0 { "z" } else { "phi" };
                out.push(Check::equal(
                    label(name, &t),
                    e.correlator_exact(genus, &t)?,
                    e.correlator_exact(genus, &sorted)?,
                ));
            }
        }
    }
    Ok(out)
}

fn phi2_closed(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for i in idx(e) {
        for j in idx(e) {
            out.push(Check::equal(label("phi", &[i, j]), e.correlator_exact(1, &[i, j])?, e.phi_closed(&[i, j])?));
        }
    }
    Ok(out)
}

fn lmrec_closed(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for i in idx(e) {
        for m in 0..=2 {
            let max_level = if m <= 1 { 4 } else { 2 };
            for k in 0..=max_level {
                out.push(Check::equal(
                    format!("<tau^{k} L{m}, E{i}>"),
                    e.lm_recursive(m, k, i)?,
                    e.pairing(VectorId::L(m), k, i)?,
                ));
            }
        }
    }
    Ok(out)
}

fn tau_vlf(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for i in idx(e) {
        for k in -1i32..=3 {
            let mut rhs = ExprSum::new();
            for j in idx(e) {
                rhs.add_product(&E::u_pow(j, (k + 1) as u32), &e.z(&[j, j, j, i])?, &Rat::ONE);
            }
            if k >= 0 {
                rhs.add_product(&E::u_pow(i, k as u32), &E::g(i), &Rat::new(-3 * (k as i64 + 1), 2));
            }
            out.push(Check::equal(format!("<tau L{k}, E{i}>"), e.pairing(VectorId::L(k), 1, i)?, rhs.finish()));
        }
    }
    Ok(out)
}

/// `[L_a, L_b] = (a - b) L_{a+b}` on the generators. `L_{-1}` only moves the
/// coordinates, so `t` is checked for `a, b >= 0` only.
fn virasoro_bracket(e: &Engine) -> Result<Vec<Check>> {
    let mut gens = Vec::new();
    for i in idx(e) {
        gens.push((format!("u{i}"), E::u(i), true));
        gens.push((format!("s{i}"), E::s(i), true));
        gens.push((format!("t2_{i}"), E::t(2, i), false));
        for j in idx(e).filter(|&j| j >= i) {
            gens.push((format!("r{i}{j}"), E::r(i, j), true));
        }
    }
    let mut out = Vec::new();
    for a in -1i32..=1 {
        for b in (a + 1)..=2 {
            for (name, x, with_translation) in &gens {
                if a < 0 && !with_translation {
                    continue;
                }
                let lhs = &e.act_l(a, &e.act_l(b, x)?)? - &e.act_l(b, &e.act_l(a, x)?)?;
                let rhs = e.act_l(a + b, x)?.scale(&Rat::int((a - b) as i64));
                out.push(Check::equal(format!("[L{a},L{b}] {name}"), lhs, rhs));
            }
        }
    }
    Ok(out)
}

/// The stated action of `L_m` on `u`, `g` and `r`.
/// The `r_ii` line only holds for `m <= 1`.
pub fn stated_lm_action(e: &Engine, m: i32, x: &E) -> Option<E> {
    let up = |i: usize, k: i32| if k < 0 { E::zero() } else { E::u_pow(i, k as u32) };
    let gens: Vec<Generator> = x.generators().into_iter().collect();
    let single = x.numerator().len() == 1 && x.denominator().is_one();
    if !single {
        return None;
    }
    let n = e.n();
    match gens.as_slice() {
        [Generator::U(i)] if *x == E::u(*i as usize) => Some(-up(*i as usize, m + 1)),
        [Generator::S(i)] if *x == E::g(*i as usize) => {
            let i = *i as usize;
            Some(prod(&[&up(i, m), &E::g(i), &E::int(3 * (m as i64 + 1))]))
        }
        [Generator::R(i, j)] if i != j => {
            let (i, j) = (*i as usize, *j as usize);
            let h = complete_h(i, j, m);
            let mut acc = &E::r(i, j) * &h;
            for k in 1..=n {
                let br = &(&up(j, m + 1) - &up(k, m + 1)) + &(&(&E::u(k) - &E::u(j)) * &h);
                acc = &acc + &prod(&[&E::r(i, k), &E::r(j, k), &br]);
            }
            Some(acc)
        }
        [Generator::R(i, _)] => {
            let i = *i as usize;
            let mut acc = &up(i, m - 1) * &q(m as i64 * (11 * m as i64 + 19), 8);
            acc = &acc + &prod(&[&up(i, m), &E::r(i, i), &E::int(m as i64 + 1)]);
            for k in 1..=n {
                let mut lin = &up(i, m) * &E::int(2 * m as i64);
                for p in 1..=m {
                    lin = &lin - &prod(&[&E::int(2), &up(i, p), &up(k, m - p)]);
                }
                acc = &acc + &prod(&[&E::r(i, k), &E::s_ratio(k, i), &lin]);
                let quad = &(&prod(&[&E::int(m as i64 + 1), &up(i, m), &E::u(k)]) - &(&up(i, m + 1) * &E::int(m as i64)))
                    - &up(k, m + 1);
                acc = &acc + &(&E::r(i, k).pow(2) * &quad);
            }
            Some(acc)
        }
        _ => None,
    }
}

/// The stated closed form of `<τ₋²L_m, E_i>`. Holds for `m <= 1` only; see
/// [`Engine::pairing`] for the form that follows from the recursion.
pub fn stated_tau2_lm(e: &Engine, m: i32, i: usize) -> Result<E> {
    let up = |i: usize, k: i32| if k < 0 { E::zero() } else { E::u_pow(i, k as u32) };
    let ml = m as i64;
    let mut acc = ExprSum::new();
    acc.add_product(&up(i, m + 1), &e.t(2, i)?, &Rat::int(-1));
    acc.add_product(&up(i, m - 1), &E::g(i), &Rat::new(-ml * (11 * ml + 19), 8));
    for j in idx(e) {
        let rss = prod(&[&E::r(i, j), &E::s(i), &E::s(j)]);
        let br = &(&(&up(i, m) * &E::int(2 * ml)) + &(&up(j, m) * &q(3 * ml + 7, 2))) - &complete_h(i, j, m);
        acc.add_product(&rss, &br, &Rat::int(-1));
        for k in idx(e) {
            let c = prod(&[&e.v(i, j), &E::r(j, k), &E::s(i), &E::s(k)]);
            acc.add_product(&c, &complete_h(i, k, m), &Rat::int(-1));
        }
    }
    Ok(acc.finish())
}

/// The simpler form of the `L₁` action.
fn reduced_l1(e: &Engine, x: &E) -> Option<E> {
    let gens: Vec<Generator> = x.generators().into_iter().collect();
    match gens.as_slice() {
        [Generator::U(i)] => Some(-E::u(*i as usize).pow(2)),
        [Generator::S(i)] => {
            let i = *i as usize;
            Some(prod(&[&E::int(6), &E::u(i), &E::g(i)]))
        }
        [Generator::R(i, j)] => {
            let (i, j) = (*i as usize, *j as usize);
            let mut acc = &(&E::u(i) + &E::u(j)) * &E::r(i, j);
            if i == j {
                acc = &acc + &q(15, 4);
            }
            Some(&acc - &sum(idx(e).map(|k| &e.v(i, k) * &e.v(j, k))))
        }
        _ => None,
    }
}

fn actlm(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut xs = Vec::new();
    for i in idx(e) {
        xs.extend([E::u(i), E::g(i)]);
        for j in i..=e.n() {
            xs.push(E::r(i, j));
        }
    }
    // the rule against the general vector field built from the recursion alone
    for m in 0..=3 {
        let lvl = |k: usize| -> Result<Vec<E>> { idx(e).map(|i| e.lm_recursive(m, k, i)).collect() };
        let data = VectorFieldData { a: lvl(0)?, b: lvl(1)?, c: lvl(2)? };
        for x in &xs {
            out.push(Check::equal(format!("L{m} {x} (recursion)"), e.act_l(m, x)?, e.act_vector_field(&data, x)?));
        }
    }
    for x in &xs {
        for m in 0..=1 {
            if let Some(rhs) = stated_lm_action(e, m, x) {
                out.push(Check::equal(format!("L{m} {x}"), e.act_l(m, x)?, rhs));
            }
        }
        if let (Some(general), Some(special)) = (stated_lm_action(e, 1, x), reduced_l1(e, x)) {
            out.push(Check::equal(format!("L1 forms agree on {x}"), general, special));
        }
    }
    Ok(out)
}

fn vector_field_cross(e: &Engine) -> Result<Vec<Check>> {
    let gens: Vec<E> = low_generators(e).into_iter().filter(|x| x.tau_levels().is_empty()).collect();
    let mut out = Vec::new();
    for m in -1..=3 {
        let lvl = |k: usize| -> Result<Vec<E>> { idx(e).map(|i| e.pairing(VectorId::L(m), k, i)).collect() };
        let data = VectorFieldData { a: lvl(0)?, b: lvl(1)?, c: lvl(2)? };
        for x in &gens {
            out.push(Check::equal(format!("W(L{m}) {x}"), e.act_vector_field(&data, x)?, e.act_l(m, x)?));
        }
    }
    for k in idx(e) {
        let data = VectorFieldData {
            a: idx(e).map(|i| if i == k { E::g(i) } else { E::zero() }).collect(),
            b: vec![E::zero(); e.n()],
            c: vec![E::zero(); e.n()],
        };
        for x in &gens {
            out.push(Check::equal(format!("W(E{k}) {x}"), e.act_vector_field(&data, x)?, e.derive(k, x)?));
        }
    }
    Ok(out)
}

fn l1_derived(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let v = |i, j| e.v(i, j);
    let r = E::r;
    for (i, j) in off_pairs(e) {
        let rhs = &(&E::u(i) - &E::u(j)) * &sum(idx(e).map(|k| &v(i, k) * &v(j, k)));
        out.push(Check::equal(format!("L1 v_{i}{j}"), e.act_l(1, &v(i, j))?, rhs));

        let th = e.theta(i, j)?;
        let mut rhs = ExprSum::new();
        rhs.add_product(&(&E::u(i).scale(&Rat::int(3)) + &E::u(j)), &th, &Rat::ONE);
        rhs.add_scaled(&r(i, j), &Rat::new(-11, 4));
        for k in idx(e) {
            for l in idx(e) {
                rhs.add(&prod(&[&r(i, k), &v(j, l), &v(k, l)]));
            }
        }
        out.push(Check::equal(format!("L1 theta_{i}{j}"), e.act_l(1, &th)?, rhs.finish()));

        let om = e.omega(i, j)?;
        let rr = sum(idx(e).map(|k| &r(i, k) * &r(j, k)));
        let mut quartic = ExprSum::new();
        for k in idx(e) {
            for l in idx(e) {
                for p in idx(e) {
                    quartic.add(&prod(&[&r(i, l), &r(j, k), &v(k, p), &v(l, p)]));
                }
            }
        }
        let quartic = quartic.finish();
        let rhs = &(&(&(&E::u(i) + &E::u(j)) * &om).scale(&Rat::int(3)) - &rr.scale(&Rat::new(11, 4))) + &quartic;
        out.push(Check::equal(format!("L1 Omega_{i}{j}"), e.act_l(1, &om)?, rhs));

        // the second-order pole combination of F₂
        let w = &E::s_pow(i, -1) * &E::s_pow(j, -1);
        let w = &w - &(&E::s(i) * &E::s_pow(j, -3));
        let bracket = &(&e.theta(i, j)? - &e.theta(j, i)?)
            + &sum(idx(e).flat_map(|k| idx(e).map(move |l| (k, l))).map(|(k, l)| prod(&[&r(i, l), &r(j, k), &v(k, l)])));
        let rhs = &(&bracket * &(&E::s(i) * &E::s_pow(j, -3))).scale(&Rat::int(6))
            + &(&(&quartic - &rr.scale(&Rat::new(11, 4))) * &w);
        out.push(Check::equal(format!("L1 second-order pole {i}{j}"), e.act_l(1, &(&om * &w))?, rhs));
    }
    Ok(out)
}

fn l1_tau(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let p = |k: i32, i: usize| e.s_pairing(k, i);
    for i in idx(e) {
        for m in 1..=3i32 {
            let mut rhs = ExprSum::new();
            rhs.add_product(&E::u(i), &p(m, i)?, &Rat::int(2 * (m as i64 + 3)));
            rhs.add_scaled(&p(m - 1, i)?, &(&Rat::int(((m + 1) * (m + 1)) as i64) - &Rat::new(1, 4)));
            for j in idx(e) {
                rhs.add_product(&(&e.v(i, j) * &E::s_ratio(i, j)), &p(m - 1, j)?, &Rat::int(2 * (m as i64 + 1)));
                for k in idx(e) {
                    rhs.add_product(&prod(&[&e.v(i, j), &e.v(j, k), &E::s_ratio(i, k)]), &p(m - 1, k)?, &Rat::ONE);
                }
            }
            out.push(Check::equal(format!("L1 <tau^{m} S, E{i}>"), e.act_l(1, &p(m, i)?)?, rhs.finish()));
        }

        let mut rhs = ExprSum::new();
        rhs.add_product(&E::u(i), &E::t(2, i), &Rat::int(10));
        for j in idx(e) {
            let sij = &E::s(i) * &E::s(j);
            rhs.add_product(&E::r(i, j), &sij, &Rat::new(35, 4));
            for k in idx(e) {
                let sik = &E::s(i) * &E::s(k);
                rhs.add_product(&(&e.v(i, j) * &E::r(j, k)), &sik, &Rat::int(6));
                for l in idx(e) {
                    rhs.add(&prod(&[&e.v(i, j), &e.v(j, k), &E::r(k, l), &E::s(i), &E::s(l)]));
                }
            }
        }
        out.push(Check::equal(format!("L1 t2_{i}"), e.act_l(1, &E::t(2, i))?, rhs.finish()));

        let mut rhs = ExprSum::new();
        rhs.add_product(&E::inv_g(i).pow(2), &E::t(2, i), &Rat::new(63, 4));
        for j in idx(e) {
            let w = prod(&[&e.v(i, j), &E::s_pow(i, -3), &E::s_pow(j, -1)]);
            rhs.add_product(&w, &E::t(2, j), &Rat::int(8));
            for k in idx(e) {
                let w = prod(&[&e.v(i, j), &e.v(j, k), &E::s_pow(i, -3), &E::s_pow(k, -1)]);
                rhs.add_product(&w, &E::t(2, k), &Rat::ONE);
            }
        }
        let lhs = e.act_l(1, &(&E::t(3, i) * &E::inv_g(i).pow(2)))?;
        out.push(Check::equal(format!("L1 t3_{i}/g_{i}^2"), lhs, rhs.finish()));
    }
    Ok(out)
}

fn l_tau_rule(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for i in idx(e) {
        for m in 0..=2i32 {
            for k in 2..=3usize {
                let mut rhs = ExprSum::new();
                rhs.sub(&e.lm_recursive(m, k + 1, i)?);
                rhs.add_product(&E::u_pow(i, (m + 1) as u32), &E::t(k + 1, i), &Rat::int(-1));
                rhs.add_product(&E::u_pow(i, m as u32), &E::t(k, i), &Rat::new(3 * (m as i64 + 1), 2));
                for j in idx(e) {
                    let c = &(&E::u_pow(i, (m + 1) as u32) - &E::u_pow(j, (m + 1) as u32)) * &E::r(i, j);
                    rhs.add_product(&(&c * &E::s_ratio(i, j)), &E::t(k, j), &Rat::ONE);
                }
                out.push(Check::equal(format!("L{m} t{k}_{i}"), e.act_l(m, &E::t(k, i))?, rhs.finish()));
            }
        }
    }
    Ok(out)
}

fn t_xbar_corr(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (genus, arities) in [(1u8, 1..=4usize), (0u8, 4..=7usize)] {
        for k in arities {
            for key in multisets(e.n(), k) {
                let c = e.correlator(genus, &key)?;
                let name = if genus == 0 { "T z" } else { "T phi" };
                out.push(Check::equal(label(name, &key), e.t_xbar_on_correlator(genus, &key)?, e.act_t_xbar(&c)?));
            }
        }
    }
    Ok(out)
}

fn t_xbar_pairings(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for i in idx(e) {
        for k in 1..=3 {
            let p = e.s_pairing(k, i)?;
            out.push(Check::equal(format!("T <tau^{k} S, E{i}>"), e.act_t_xbar(&p)?, -(&E::u(i) * &p)));
        }
        for k in 2..=4 {
            let p = e.pairing(VectorId::L(0), k, i)?;
            out.push(Check::equal(format!("T <tau^{k} L0, E{i}>"), e.act_t_xbar(&p)?, -(&E::u(i) * &p)));
        }
        out.push(Check::equal(format!("T g{i}"), e.act_t_xbar(&E::g(i))?, prod(&[&E::int(-2), &E::u(i), &E::g(i)])));
    }
    Ok(out)
}

fn gstar_inner(e: &Engine) -> Result<Vec<Check>> {
    let rows: Vec<Vec<E>> = idx(e).map(|i| e.gstar(i)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in idx(e) {
        for j in idx(e) {
            let lhs = &(&rows[i - 1][j - 1] * &E::g(j)) + &(&rows[j - 1][i - 1] * &E::g(i));
            let rhs = if i == j { E::g(i) } else { E::zero() };
            out.push(Check::equal(format!("<G*E{i},E{j}> + <E{i},G*E{j}>"), lhs, rhs));
        }
    }
    Ok(out)
}

fn f2_equivalence(e: &Engine) -> Result<Vec<Check>> {
    Ok(vec![Check::equal("assembled = rotation", e.f2(F2Route::Assembled)?, e.f2(F2Route::Rotation)?)])
}

fn f2_structure(e: &Engine) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for route in [F2Route::Rotation, F2Route::Assembled] {
        let f = e.f2(route)?;
        let levels = f.tau_levels();
        let bad = filter_terms(&f, |m| m.factors().any(|(g, _)| matches!(g.tau_level(), Some(k) if k > 3)));
        out.push(Check::holds(format!("{route:?}: t-levels {levels:?} within {{2, 3}}"), levels.iter().all(|k| (2..=3).contains(k)), bad));
        let m = f.max_delta_multiplicity();
        out.push(Check::holds(format!("{route:?}: pole order {m} <= 2"), m <= 2, f.clone()));
    }
    // the t₄ terms of A₁(τ₋²L₀) and of B cancel inside the assembly
    let a1 = e.a1_of(A1Arg::Tau2L0)?;
    for i in idx(e) {
        let t4 = Generator::t(4, i);
        let b = e.b_diag(i)?;
        out.push(Check::equal(format!("t4_{i} in B_{i}"), b.coefficient_of(t4, 1), &E::s_pow(i, -4) * &q(-1, 576)));
        let from_a = a1.coefficient_of(t4, 1).scale(&Rat::new(1, 3));
        let from_b = (&E::u(i) * &b.coefficient_of(t4, 1)).scale(&Rat::new(1, 6));
        out.push(Check::equal(format!("t4_{i} cancels"), from_a, from_b));
    }
    Ok(out)
}

fn l1_consistency(e: &Engine) -> Result<Vec<Check>> {
    let f2 = e.f2(F2Route::Rotation)?;
    Ok(vec![Check::equal("L1 F2 = closed form", e.act_l(1, &f2)?, e.l1f2_target()?)])
}

fn l1f2_structure(e: &Engine) -> Result<Vec<Check>> {
    let t = e.l1f2_target()?;
    let levels = t.tau_levels();
    let m = t.max_delta_multiplicity();
    Ok(vec![
        Check::holds(format!("t-levels {levels:?} exclude 3"), !levels.contains(&3), t.clone()),
        Check::holds(format!("pole order {m} <= 1"), m <= 1, t.clone()),
    ])
}

fn virasoro_main(e: &Engine) -> Result<Vec<Check>> {
    Ok(vec![Check::equal("L1 F2 = prediction", e.l1f2_target()?, e.prediction(PredictionRoute::Rotation)?)])
}

fn prediction_paths(e: &Engine) -> Result<Vec<Check>> {
    Ok(vec![Check::equal(
        "rotation = G*",
        e.prediction(PredictionRoute::Rotation)?,
        e.prediction(PredictionRoute::GStar)?,
    )])
}

fn appendix_route(e: &Engine) -> Result<Vec<Check>> {
    let (la, lb) = e.appendix_decomposition()?;
    let total = &la + &lb;
    let mut out = vec![Check::equal("L_A + L_B = L1 F2", total.clone(), e.act_l(1, &e.f2(F2Route::Rotation)?)?)];
    for k in [3usize, 4] {
        let present = |x: &E| x.tau_levels().contains(&k);
        out.push(Check::holds(format!("t{k} present in L_A and L_B"), present(&la) && present(&lb), E::zero()));
        let left = filter_terms(&total, |m| m.factors().any(|(g, _)| g.tau_level() == Some(k)));
        out.push(Check::holds(format!("t{k} cancels in L_A + L_B"), left.is_zero(), left));
    }
    Ok(out)
}

fn appendix_definitions(e: &Engine) -> Result<Vec<Check>> {
    let mut out = vec![
        Check::equal("L_A expanded = definition", e.l_a()?, e.l_a_definition()?),
        Check::equal("L_B expanded = definition", e.l_b()?, e.l_b_definition()?),
    ];
    for i in idx(e) {
        for k in 2..=4 {
            out.push(Check::equal(
                format!("d_{i};{k}"),
                e.appendix_d(i, k, CdPath::Definition)?,
                e.appendix_d(i, k, CdPath::Expanded)?,
            ));
            for j in idx(e) {
                out.push(Check::equal(
                    format!("c_{i}{j};{k}"),
                    e.appendix_c(i, j, k, CdPath::Definition)?,
                    e.appendix_c(i, j, k, CdPath::Expanded)?,
                ));
            }
        }
    }
    Ok(out)
}

fn homogeneity(e: &Engine) -> Result<Vec<Check>> {
    // Above N = 3 the A₁/B tensors and φ₄ are too large; F₂ is graded
    // through its rotation form there.
    let full = e.n() <= 3;
    let mut out = Vec::new();
    out.push(degree_check("F2 rotation".into(), &e.f2(F2Route::Rotation)?, 3));
    out.push(degree_check("L1 F2".into(), &e.l1f2_target()?, 2));
    out.push(degree_check("prediction".into(), &e.prediction(PredictionRoute::Rotation)?, 2));
    if full {
        out.push(degree_check("F2 assembled".into(), &e.f2(F2Route::Assembled)?, 3));
        for w in [A1Arg::TauS, A1Arg::Tau2L0] {
            out.push(degree_check(format!("A1({w:?})"), &e.a1_of(w)?, 3));
        }
        let (la, lb) = e.appendix_decomposition()?;
        out.push(degree_check("L_A".into(), &la, 2));
        out.push(degree_check("L_B".into(), &lb, 2));
        for i in idx(e) {
            out.push(degree_check(format!("B_{i}"), &e.b_diag(i)?, 4));
            for k in 2..=4 {
                out.push(degree_check(format!("d_{i};{k}"), &e.appendix_d(i, k, CdPath::Definition)?, k as i64 - 1));
                for j in idx(e) {
                    out.push(degree_check(
                        format!("c_{i}{j};{k}"),
                        &e.appendix_c(i, j, k, CdPath::Definition)?,
                        k as i64 - 2,
                    ));
                }
            }
        }
    }
    for (i, j) in off_pairs(e) {
        out.push(degree_check(format!("v_{i}{j}"), &e.v(i, j), 0));
        out.push(degree_check(format!("theta_{i}{j}"), &e.theta(i, j)?, 2));
        out.push(degree_check(format!("Omega_{i}{j}"), &e.omega(i, j)?, 3));
        out.push(degree_check(format!("Lambda_{i}{j}"), &e.lambda(i, j)?, 4));
    }
    for k in 4..=7 {
        for key in multisets(e.n(), k) {
            out.push(degree_check(label("z", &key), &e.z(&key)?, k as i64 - 3));
        }
    }
    for k in 1..=if full { 4 } else { 3 } {
        for key in multisets(e.n(), k) {
            out.push(degree_check(label("phi", &key), &e.phi(&key)?, k as i64));
        }
    }
    Ok(out)
}

macro_rules! identity {
    ($id:expr, $anchor:expr, ($lo:expr, $hi:expr), $default:expr, $build:expr) => {
        Identity { id: $id, anchor: $anchor, support: ($lo, $hi), default_n: $default, build: $build }
    };
}

static REGISTRY: &[Identity] = &[
    identity!("theta-sym", "θ_ij + θ_ji = −Σ_k r_ik r_jk", (2, 4), &[2, 3, 4], theta_sym),
    identity!("omega-sym", "Ω_ij = Ω_ji", (2, 4), &[2, 3, 4], omega_sym),
    identity!("lambda-sym", "Λ_ij + Λ_ji = Σ_k θ_ik θ_jk", (2, 4), &[2, 3, 4], lambda_sym),
    identity!("idem-commute", "E_i E_j x = E_j E_i x for x in u, s, r, t₂", (2, 4), &[2, 3], idem_commute),
    identity!("theta-derivative", "E_j θ_ij = (r_jj − √(g_j/g_i) r_ij) θ_ij − Ω_ij", (2, 4), &[2, 3], theta_derivative),
    identity!(
        "omega-derivative",
        "E_i Ω_ij = θ_ji (Σ_k r_ik² + √(g_i/g_j) θ_ij + Σ_{k≠i} √(g_k/g_i) θ_ki) + Λ_ij",
        (2, 4),
        &[2, 3],
        omega_derivative
    ),
    identity!("lambda-pole-order", "(u_i − u_j) Λ_ji has poles of order at most 2", (2, 4), &[2, 3], lambda_pole_order),
    identity!("corr-symmetry", "z and φ are symmetric in their indices", (1, 3), &[2, 3], corr_symmetry),
    identity!("phi2-closed", "raised φ_ij = closed two-point forms", (1, 4), &[1, 2, 3], phi2_closed),
    identity!("lmrec-closed", "<τ₋ᵏL_m, E_i> recursion = closed forms", (1, 4), &[1, 2, 3], lmrec_closed),
    identity!("tau-vlf", "<τ₋L_k, E_i> = Σ_j u_j^{k+1} z_jjji − (3/2)(k+1) u_i^k g_i", (1, 4), &[1, 2, 3], tau_vlf),
    identity!("actlm", "L_m on u, g, r; the m = 1 case in its reduced form", (1, 4), &[1, 2, 3], actlm),
    identity!("virasoro-bracket", "[L_a, L_b] = (a − b) L_{a+b} on u, s, r, t₂", (1, 3), &[1, 2], virasoro_bracket),
    identity!("vector-field-cross", "L_m and E_k through their pairings alone", (1, 4), &[1, 2, 3], vector_field_cross),
    identity!("l1-derived", "L₁ on v_ij, θ_ij, Ω_ij and the double-pole combination", (2, 4), &[2, 3], l1_derived),
    identity!("l1-tau", "L₁ on <τ₋ᵐS, E_i>, t₂ and t₃/g²", (1, 4), &[1, 2, 3], l1_tau),
    identity!("l-tau-rule", "L_m <τ₋ᵏS, E_i> via the pairing recursion", (1, 4), &[1, 2, 3], l_tau_rule),
    identity!("t-xbar-corr", "T(X̄) on z and φ = combinatorial formulas", (1, 3), &[2], t_xbar_corr),
    identity!("t-xbar-pairings", "T(X̄) <τ₋ᵏS, E_i> = −u_i <τ₋ᵏS, E_i>, same for L₀", (1, 4), &[1, 2, 3], t_xbar_pairings),
    identity!("gstar-inner", "<G*W, V> + <W, G*V> = <W, V>", (1, 4), &[1, 2, 3], gstar_inner),
    identity!("f2-equivalence", "½A₁(τ₋S) + ⅓A₁(τ₋²L₀) − ⅙Σu_i B_i = 5760⁻¹(rotation form)", (1, 3), &[1, 2, 3], f2_equivalence),
    identity!("f2-structure", "F₂ has t-levels 2, 3 only and poles of order ≤ 2", (1, 3), &[1, 2, 3], f2_structure),
    identity!("l1-consistency", "L₁ F₂ = 1152⁻¹(closed form)", (1, 3), &[1, 2, 3], l1_consistency),
    identity!("l1f2-structure", "L₁ F₂ has no t₃ and only simple poles", (1, 4), &[1, 2, 3], l1f2_structure),
    identity!("virasoro-main", "L₁ F₂ = −½Σ_i g_i⁻¹{¼(φ_ii + φ_i²) + Σ v_ij v_ik g_i (g_j g_k)^{-½}(φ_jk + φ_jφ_k)}", (1, 4), &[1, 2, 3], virasoro_main),
    identity!("prediction-paths", "G* form of the prediction = rotation form", (1, 4), &[1, 2, 3], prediction_paths),
    identity!("appendix-route", "L_A + L_B = L₁ F₂; t₃, t₄ cancel between the parts", (1, 3), &[1, 2], appendix_route),
    identity!("appendix-definitions", "expanded L_A, L_B, c, d = their definitions", (1, 3), &[1, 2], appendix_definitions),
    identity!("homogeneity", "deg F₂ = 3, deg B_i = 4, deg L₁F₂ = 2, deg z_k = k − 3, deg φ_k = k", (1, 4), &[1, 2, 3, 4], homogeneity),
];

pub fn registry() -> &'static [Identity] {
    REGISTRY
}
