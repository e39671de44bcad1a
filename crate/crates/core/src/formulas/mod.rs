//! Closed-form Ramsey and Gallai-Ramsey evaluators.
//!
//! Every evaluator guards its parameters with the hypotheses of the result it
//! encodes. Parameters outside every stated range are errors, and results
//! known only as bounds come back as intervals.

use std::fmt;

use crate::error::{domain, Error, Result};

/// An exact value or a closed interval `[lo, hi]`; `hi` may be [`ValueOrInterval::UNBOUNDED`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ValueOrInterval {
    pub lo: i64,
    pub hi: i64,
}

impl ValueOrInterval {
    pub const UNBOUNDED: i64 = i64::MAX;

    pub fn exact(v: i64) -> Self {
        ValueOrInterval { lo: v, hi: v }
    }

    pub fn interval(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        ValueOrInterval { lo, hi }
    }

    pub fn at_least(lo: i64) -> Self {
        Self::interval(lo, Self::UNBOUNDED)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn value(&self) -> Option<i64> {
        self.is_exact().then_some(self.lo)
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl fmt::Display for ValueOrInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            return write!(f, "exact {}", self.lo);
        }
        if self.hi == Self::UNBOUNDED {
            write!(f, "interval {} inf", self.lo)
        } else {
            write!(f, "interval {} {}", self.lo, self.hi)
        }
    }
}

/// A formula result plus an optional caveat line for the reader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: ValueOrInterval,
    pub caveat: Option<String>,
}

impl From<ValueOrInterval> for Evaluation {
    fn from(value: ValueOrInterval) -> Self {
        Evaluation { value, caveat: None }
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        domain(msg())
    }
}

/// `r(P_n, P_m)` for `2 <= m <= n`.
pub fn r_path_path(n: i64, m: i64) -> Result<ValueOrInterval> {
    need(2 <= m && m <= n, || format!("r(P_n,P_m) needs 2 <= m <= n, got n={n}, m={m}"))?;
    Ok(ValueOrInterval::exact(n + m / 2 - 1))
}

fn check_forest(size: i64, odd: i64, which: u8) -> Result<()> {
    need(size >= 2, || format!("L{which}: a linear forest with components of order >= 2 has at least 2 vertices"))?;
    need(odd >= 0 && 3 * odd <= size, || {
        format!("L{which}: {odd} odd components do not fit in {size} vertices (each needs >= 3)")
    })?;
    need((size - odd) % 2 == 0, || format!("L{which}: order {size} and {odd} odd components have mismatched parity"))
}

/// `r(L_1, L_2)` for 2-linear forests with `|L_i|` vertices and `j_i` odd components.
pub fn r_linear_forests(size1: i64, odd1: i64, size2: i64, odd2: i64) -> Result<ValueOrInterval> {
    check_forest(size1, odd1, 1)?;
    check_forest(size2, odd2, 2)?;
    let a = size1 + (size2 - odd2).div_euclid(2) - 1;
    let b = size2 + (size1 - odd1).div_euclid(2) - 1;
    Ok(ValueOrInterval::exact(a.max(b)))
}

/// `r(P_m, K_{1,n})`. The published condition separating the two cases holds for
/// every `n >= 2`, so without `trust` only the bracketing interval is returned.
pub fn r_path_star(m: i64, n: i64, trust: bool) -> Result<Evaluation> {
    need(m >= 2 && n >= 2, || format!("r(P_m,K_1n) needs m, n >= 2, got m={m}, n={n}"))?;
    if trust {
        return Ok(Evaluation {
            value: ValueOrInterval::exact(m + n - 1),
            caveat: Some("exact value taken on trust: the case condition is n = 1 (mod n-1), true for all n".into()),
        });
    }
    Ok(Evaluation {
        value: ValueOrInterval::interval(m + n - 2, m + n - 1),
        caveat: Some(
            "case condition n = 1 (mod n-1) holds for every n >= 2, so the two stated cases conflict; \
             reporting both candidates"
                .into(),
        ),
    })
}

/// `r(K_{1,n}, K_{1,m})`.
pub fn r_star_star(n: i64, m: i64) -> Result<ValueOrInterval> {
    need(m >= 2 && n >= 2, || format!("r(K_1n,K_1m) needs m, n >= 2, got n={n}, m={m}"))?;
    let both_even = n % 2 == 0 && m % 2 == 0;
    Ok(ValueOrInterval::exact(m + n - i64::from(both_even)))
}

/// `r(P_n, kipas_m)`.
pub fn r_path_kipas(n: i64, m: i64) -> Result<ValueOrInterval> {
    need(m >= 2 && n >= 2, || format!("r(P_n,kipas_m) needs m, n >= 2, got n={n}, m={m}"))?;
    if m < 2 * n {
        let v = (2 * n - 1).max(ceil_div(3 * m, 2) - 1).max(2 * (m / 2) + n - 2);
        return Ok(ValueOrInterval::exact(v));
    }
    if n >= 4 {
        return Ok(ValueOrInterval::interval(2 * n - 1, m + n - 1));
    }
    domain(format!("r(P_n,kipas_m) with m >= 2n and n < 4 (n={n}, m={m}) is covered by no known result"))
}

/// `r(K_{1,n}, kipas_m)`.
pub fn r_star_kipas(n: i64, m: i64) -> Result<ValueOrInterval> {
    need(m >= 2 && n >= 2, || format!("r(K_1n,kipas_m) needs m, n >= 2, got n={n}, m={m}"))?;
    let v = if m >= 2 * n {
        m + n - i64::from(m % 2 == 0 && n % 2 == 0)
    } else {
        let h = m / 2;
        2 * n + h - i64::from(m % 2 == 0 && h % 2 == 0)
    };
    Ok(ValueOrInterval::exact(v))
}

/// `r(kipas_n, L)` where `L` is the family of linear forests with at least `m` edges
/// whose components have at least `min_component` vertices.
pub fn r_kipas_linear_family(n: i64, m: i64, min_component: i64) -> Result<ValueOrInterval> {
    let low = match min_component {
        2 => 2,
        3 => 6,
        other => return domain(format!("minimum component order must be 2 or 3, got {other}")),
    };
    need(low <= m && 2 * m <= n, || {
        format!("needs {low} <= m <= n/2 for minimum component order {min_component}, got n={n}, m={m}")
    })?;
    Ok(ValueOrInterval::exact(n + ceil_div(m, 2)))
}

/// `b_k(P_n)`.
pub fn bk_path(k: i64, n: i64) -> Result<ValueOrInterval> {
    need(k >= 3, || format!("b_k(P_n) needs k >= 3, got k={k}"))?;
    need(n >= 2 * (k - 1), || format!("b_k(P_n) needs n >= 2(k-1) = {}, got n={n}", 2 * (k - 1)))?;
    Ok(ValueOrInterval::exact(if n <= 4 * (k - 2) + 1 { n } else { ceil_div(3 * n - 3, 2) }))
}

/// `t(P_n)`.
pub fn t_path(n: i64) -> Result<ValueOrInterval> {
    need(n >= 3, || format!("t(P_n) needs n >= 3, got n={n}"))?;
    Ok(ValueOrInterval::exact(if n % 2 == 0 { 3 * n / 2 - 1 } else { (3 * n - 1) / 2 }))
}

fn gr_path_domain(name: &str, k: i64, n: i64) -> Result<()> {
    need(k >= 4, || format!("{name} needs k >= 4, got k={k}"))?;
    need(n >= k, || format!("{name} needs n >= k, got k={k}, n={n}"))?;
    need(n >= 2 * (k - 1), || {
        format!("{name}: the range {k} <= n < {} is not assigned a value (got n={n})", 2 * (k - 1))
    })
}

/// `gr_k(P_5 : P_n)`.
pub fn gr_p5_path(k: i64, n: i64) -> Result<ValueOrInterval> {
    gr_path_domain("gr_k(P5:P_n)", k, n)?;
    Ok(ValueOrInterval::exact(if n <= 4 * (k - 2) + 1 { n + 1 } else { ceil_div(3 * n - 3, 2) }))
}

/// `gr_k(P_4^+ : P_n)`.
pub fn gr_p4plus_path(k: i64, n: i64) -> Result<ValueOrInterval> {
    gr_path_domain("gr_k(P4+:P_n)", k, n)?;
    let small = n <= 4 * (k - 2) + 1;
    Ok(ValueOrInterval::exact(match (k, small) {
        (4, true) => n + 2,
        (_, true) => n,
        _ => ceil_div(3 * n - 3, 2),
    }))
}

/// `gr_k(K_{1,3} : P_n)`, computed from its displayed piecewise form.
pub fn gr_k13_path(k: i64, n: i64) -> Result<ValueOrInterval> {
    if k == 3 {
        need(n >= 4, || format!("gr_3(K13:P_n) needs n >= 4, got n={n}"))?;
        let v = if n % 2 == 0 { 3 * n / 2 - 1 } else { (3 * n - 1) / 2 };
        return Ok(ValueOrInterval::exact(v));
    }
    need(k >= 4, || format!("gr_k(K13:P_n) needs k >= 3, got k={k}"))?;
    need(n >= 2 * (k - 1), || format!("gr_k(K13:P_n) needs n >= 2(k-1) = {}, got n={n}", 2 * (k - 1)))?;
    Ok(ValueOrInterval::exact(if n <= 4 * (k - 2) + 1 { n } else { ceil_div(3 * n - 3, 2) }))
}

fn five_halves(n: i64) -> i64 {
    5 * n / 2
}

/// `b_3(kipas_n)`.
pub fn b3_kipas(n: i64) -> Result<ValueOrInterval> {
    kipas_three_colors("b_3(kipas_n)", n)
}

/// `gr_3(K_{1,3} : kipas_n)`.
pub fn gr3_k13_kipas(n: i64) -> Result<ValueOrInterval> {
    kipas_three_colors("gr_3(K13:kipas_n)", n)
}

fn kipas_three_colors(name: &str, n: i64) -> Result<ValueOrInterval> {
    match n {
        2 | 3 => Ok(ValueOrInterval::exact(five_halves(n))),
        n if n >= 5 && n % 2 == 1 => Ok(ValueOrInterval::exact(five_halves(n))),
        n if n >= 5 => Ok(ValueOrInterval::interval(five_halves(n) - 1, five_halves(n))),
        _ => domain(format!("{name} is only known for n in {{2, 3}} or n >= 5, got n={n}")),
    }
}

/// Upper bound on `t(kipas_n)`; no lower bound beyond the trivial one is known.
pub fn t_kipas_upper(n: i64) -> Result<ValueOrInterval> {
    need(n >= 5, || format!("t(kipas_n) bound needs n >= 5, got n={n}"))?;
    Ok(ValueOrInterval::interval(1, five_halves(n) - i64::from(n % 2 == 0)))
}

/// Arguments for registry dispatch. Unused fields are ignored; missing required ones are errors.
#[derive(Clone, Debug, Default)]
pub struct FormulaArgs {
    pub k: Option<i64>,
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub j1: Option<i64>,
    pub j2: Option<i64>,
    pub min_component: Option<i64>,
    pub trust: bool,
}

impl FormulaArgs {
    fn get(&self, v: Option<i64>, name: &str, id: &str) -> Result<i64> {
        v.ok_or_else(|| Error::Domain(format!("formula {id} requires --{name}")))
    }
    pub fn k(&self, id: &str) -> Result<i64> {
        self.get(self.k, "k", id)
    }
    pub fn n(&self, id: &str) -> Result<i64> {
        self.get(self.n, "n", id)
    }
    pub fn m(&self, id: &str) -> Result<i64> {
        self.get(self.m, "m", id)
    }
}

/// A named closed-form evaluator.
pub trait Formula: Sync {
    fn id(&self) -> &'static str;
    /// One-line description of the parameters.
    fn signature(&self) -> &'static str;
    fn evaluate(&self, args: &FormulaArgs) -> Result<Evaluation>;
}

struct Entry {
    id: &'static str,
    signature: &'static str,
    eval: fn(&FormulaArgs) -> Result<Evaluation>,
}

impl Formula for Entry {
    fn id(&self) -> &'static str {
        self.id
    }
    fn signature(&self) -> &'static str {
        self.signature
    }
    fn evaluate(&self, a: &FormulaArgs) -> Result<Evaluation> {
        (self.eval)(a)
    }
}

macro_rules! entry {
    ($id:literal, $sig:literal, |$a:ident| $body:expr) => {
        Entry {
            id: $id,
            signature: $sig,
            eval: |$a: &FormulaArgs| -> Result<Evaluation> { Ok(Evaluation::from($body?)) },
        }
    };
}

static FORMULAS: &[Entry] = &[
    entry!("r-path-path", "r(P_n, P_m); --n --m with 2 <= m <= n", |a| r_path_path(
        a.n("r-path-path")?,
        a.m("r-path-path")?
    )),
    entry!("r-linear-forests", "r(L1, L2); --n |L1| --j1 --m |L2| --j2", |a| r_linear_forests(
        a.n("r-linear-forests")?,
        a.j1.unwrap_or(0),
        a.m("r-linear-forests")?,
        a.j2.unwrap_or(0)
    )),
    Entry {
        id: "r-path-star",
        signature: "r(P_m, K_1n); --m --n [--trust]",
        eval: |a| r_path_star(a.m("r-path-star")?, a.n("r-path-star")?, a.trust),
    },
    entry!("r-star-star", "r(K_1n, K_1m); --n --m", |a| r_star_star(a.n("r-star-star")?, a.m("r-star-star")?)),
    entry!("r-path-kipas", "r(P_n, kipas_m); --n --m", |a| r_path_kipas(a.n("r-path-kipas")?, a.m("r-path-kipas")?)),
    entry!("r-star-kipas", "r(K_1n, kipas_m); --n --m", |a| r_star_kipas(a.n("r-star-kipas")?, a.m("r-star-kipas")?)),
    entry!("r-kipas-linear", "r(kipas_n, linear forests of size >= m); --n --m [--min-component 2|3]", |a| {
        r_kipas_linear_family(a.n("r-kipas-linear")?, a.m("r-kipas-linear")?, a.min_component.unwrap_or(2))
    }),
    entry!("bk-path", "b_k(P_n); --k --n", |a| bk_path(a.k("bk-path")?, a.n("bk-path")?)),
    entry!("t-path", "t(P_n); --n", |a| t_path(a.n("t-path")?)),
    entry!("gr-p5-path", "gr_k(P5 : P_n); --k --n", |a| gr_p5_path(a.k("gr-p5-path")?, a.n("gr-p5-path")?)),
    entry!("gr-p4plus-path", "gr_k(P4+ : P_n); --k --n", |a| gr_p4plus_path(
        a.k("gr-p4plus-path")?,
        a.n("gr-p4plus-path")?
    )),
    entry!("gr-k13-path", "gr_k(K13 : P_n); --k --n", |a| gr_k13_path(a.k("gr-k13-path")?, a.n("gr-k13-path")?)),
    entry!("b3-kipas", "b_3(kipas_n); --n", |a| b3_kipas(a.n("b3-kipas")?)),
    entry!("gr3-k13-kipas", "gr_3(K13 : kipas_n); --n", |a| gr3_k13_kipas(a.n("gr3-k13-kipas")?)),
    entry!("t-kipas-upper", "upper bound on t(kipas_n); --n", |a| t_kipas_upper(a.n("t-kipas-upper")?)),
];

pub fn formulas() -> impl Iterator<Item = &'static dyn Formula> {
    FORMULAS.iter().map(|e| e as &dyn Formula)
}

pub fn formula_by_id(id: &str) -> Result<&'static dyn Formula> {
    formulas().find(|f| f.id() == id).ok_or_else(|| {
        let known: Vec<_> = formulas().map(|f| f.id()).collect();
        Error::Syntax(format!("unknown formula id {id:?}; known: {}", known.join(", ")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(v: Result<ValueOrInterval>) -> i64 {
        v.unwrap().value().unwrap()
    }

    #[test]
    fn path_path() {
        assert_eq!(ex(r_path_path(3, 3)), 3);
        assert_eq!(ex(r_path_path(5, 4)), 6);
        assert_eq!(ex(r_path_path(2, 2)), 2);
        assert!(r_path_path(3, 4).is_err());
        assert!(r_path_path(3, 1).is_err());
    }

    #[test]
    fn linear_forests() {
        assert_eq!(ex(r_linear_forests(6, 0, 3, 1)), 6);
        assert_eq!(ex(r_linear_forests(3, 1, 3, 1)), 3);
        for n in 2..30 {
            for m in 2..=n {
                assert_eq!(r_linear_forests(n, n % 2, m, m % 2).unwrap(), r_path_path(n, m).unwrap());
            }
        }
        assert!(r_linear_forests(3, 2, 3, 1).is_err());
        assert!(r_linear_forests(4, 1, 3, 1).is_err());
    }

    #[test]
    fn path_star_is_interval() {
        let e = r_path_star(4, 3, false).unwrap();
        assert_eq!(e.value, ValueOrInterval::interval(5, 6));
        assert!(e.caveat.is_some());
        assert_eq!(r_path_star(2, 2, false).unwrap().value, ValueOrInterval::interval(2, 3));
        assert_eq!(r_path_star(3, 2, false).unwrap().value, ValueOrInterval::interval(3, 4));
        assert_eq!(r_path_star(4, 3, true).unwrap().value, ValueOrInterval::exact(6));
    }

    #[test]
    fn star_star_and_kipas() {
        assert_eq!(ex(r_star_star(4, 4)), 7);
        assert_eq!(ex(r_star_star(3, 3)), 6);
        assert_eq!(ex(r_star_star(2, 3)), 5);
        assert_eq!(ex(r_path_kipas(5, 6)), 9);
        assert_eq!(ex(r_path_kipas(4, 2)), 7);
        assert_eq!(r_path_kipas(4, 8).unwrap(), ValueOrInterval::interval(7, 11));
        assert!(r_path_kipas(3, 6).is_err());
        assert_eq!(ex(r_star_kipas(2, 4)), 5);
        assert_eq!(ex(r_star_kipas(3, 7)), 10);
        assert_eq!(ex(r_star_kipas(4, 4)), 9);
    }

    #[test]
    fn kipas_linear() {
        assert_eq!(ex(r_kipas_linear_family(4, 2, 2)), 5);
        assert_eq!(ex(r_kipas_linear_family(12, 6, 3)), 15);
        assert_eq!(ex(r_kipas_linear_family(6, 3, 2)), 8);
        assert!(r_kipas_linear_family(6, 4, 2).is_err());
        assert!(r_kipas_linear_family(12, 5, 3).is_err());
        assert!(r_kipas_linear_family(12, 6, 4).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(ex(bk_path(3, 4)), 4);
        assert_eq!(ex(bk_path(3, 6)), 8);
        assert_eq!(ex(bk_path(4, 12)), 17);
        assert!(bk_path(4, 5).is_err());
        assert_eq!(ex(t_path(4)), 5);
        assert_eq!(ex(t_path(5)), 7);
        assert_eq!(ex(t_path(3)), 4);
        assert!(t_path(2).is_err());
    }

    #[test]
    fn gallai_ramsey_paths() {
        assert_eq!(ex(gr_p5_path(4, 6)), 7);
        assert_eq!(ex(gr_p4plus_path(4, 6)), 8);
        assert_eq!(ex(gr_p4plus_path(5, 8)), 8);
        assert_eq!(ex(gr_k13_path(3, 6)), 8);
        assert_eq!(ex(gr_k13_path(4, 6)), 6);
        assert!(gr_p5_path(5, 6).is_err());
        assert!(gr_p4plus_path(3, 6).is_err());
        assert!(gr_k13_path(3, 3).is_err());
    }

    #[test]
    fn kipas_three_colors() {
        assert_eq!(ex(gr3_k13_kipas(5)), 12);
        assert_eq!(gr3_k13_kipas(6).unwrap(), ValueOrInterval::interval(14, 15));
        assert_eq!(ex(gr3_k13_kipas(3)), 7);
        assert_eq!(ex(b3_kipas(2)), 5);
        assert!(b3_kipas(4).is_err());
        assert_eq!(t_kipas_upper(5).unwrap().hi, 12);
        assert_eq!(t_kipas_upper(6).unwrap().hi, 14);
        assert!(t_kipas_upper(4).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(ValueOrInterval::exact(8).to_string(), "exact 8");
        assert_eq!(ValueOrInterval::interval(7, 11).to_string(), "interval 7 11");
        assert_eq!(ValueOrInterval::at_least(10).to_string(), "interval 10 inf");
    }

    #[test]
    fn registry() {
        assert_eq!(formulas().count(), 15);
        let args = FormulaArgs { k: Some(3), n: Some(6), ..Default::default() };
        assert_eq!(formula_by_id("bk-path").unwrap().evaluate(&args).unwrap().value, ValueOrInterval::exact(8));
        assert!(formula_by_id("nope").is_err());
        assert!(formula_by_id("r-path-path").unwrap().evaluate(&args).is_err());
    }
}
