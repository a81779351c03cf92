//! Term oracles for the sequences under study. Every sequence has a slow,
//! directly-defined oracle and at least one fast path; callers compare them
//! with [`cross_check`].

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{digit_sum, Prime};
use crate::series::catalog::Equation;
use crate::series::{comp_inverse_ref, newton_root, PowerSeries};

/// Which sequence a block of terms belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Base-p digit sum mod p.
    Thue(Prime),
    /// Rudin–Shapiro over `F_2`, `r_0 = 1`.
    Rudin,
    /// `r` with the first term set to 0.
    RudinZeroed,
    /// `r` delayed by one place with 0 in front.
    RudinShifted,
    /// Coefficients of `S_p = X(1 - C_p)`.
    S(Prime),
    /// Coefficients of `W_p = S_p(X^p) - S_p(X) - 1`.
    W(Prime),
    /// Coefficients of `C_p`, the compositional inverse of the digit-sum series.
    C(Prime),
    /// Compositional inverse of the zeroed Rudin series.
    U,
    /// Compositional inverse of the delayed Rudin series.
    V,
}

impl SequenceId {
    pub fn modulus(self) -> Prime {
        match self {
            SequenceId::Thue(p) | SequenceId::S(p) | SequenceId::W(p) | SequenceId::C(p) => p,
            _ => Prime::new(2).expect("2 is prime"),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceId::Thue(p) => write!(f, "t{}", p.get()),
            SequenceId::Rudin => write!(f, "r"),
            SequenceId::RudinZeroed => write!(f, "r1"),
            SequenceId::RudinShifted => write!(f, "r2"),
            SequenceId::S(p) => write!(f, "s{}", p.get()),
            SequenceId::W(p) => write!(f, "w{}", p.get()),
            SequenceId::C(p) => write!(f, "c{}", p.get()),
            SequenceId::U => write!(f, "u"),
            SequenceId::V => write!(f, "v"),
        }
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    /// Accepts `t3`, `c5`, `s3`, `w3`, `r`, `r1` (or `r'`), `r2` (or `r''`),
    /// `u`, `v`; `d` is an alias for `c5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownSequence(s.to_string());
        match s {
            "r" => return Ok(SequenceId::Rudin),
            "r1" | "r'" => return Ok(SequenceId::RudinZeroed),
            "r2" | "r''" => return Ok(SequenceId::RudinShifted),
            "u" => return Ok(SequenceId::U),
            "v" => return Ok(SequenceId::V),
            "d" => return Ok(SequenceId::C(Prime::new(5)?)),
            _ => {}
        }
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(unknown)?;
        let p: u64 = chars.as_str().parse().map_err(|_| unknown())?;
        let p = Prime::new(p)?;
        match tag {
            't' => Ok(SequenceId::Thue(p)),
            's' => Ok(SequenceId::S(p)),
            'w' => Ok(SequenceId::W(p)),
            'c' => Ok(SequenceId::C(p)),
            _ => Err(unknown()),
        }
    }
}

/// How a block of terms was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Recurrence,
    Newton,
    ReferenceInverse,
    DigitDefinition,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Recurrence => "recurrence",
            Method::Newton => "newton",
            Method::ReferenceInverse => "reference-inverse",
            Method::DigitDefinition => "digit-definition",
        };
        f.write_str(s)
    }
}

/// The first `values.len()` terms of a sequence, reduced mod its prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermBlock {
    pub id: SequenceId,
    pub method: Method,
    pub values: Vec<u32>,
}

impl TermBlock {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn modulus(&self) -> Prime {
        self.id.modulus()
    }

    pub fn to_series(&self) -> PowerSeries {
        PowerSeries::new(self.modulus(), self.values.clone())
    }

    /// `n value` per line.
    pub fn to_bfile(&self) -> String {
        let mut s = String::new();
        for (n, v) in self.values.iter().enumerate() {
            let _ = writeln!(s, "{n} {v}");
        }
        s
    }
}

/// First index where two blocks disagree, as an error.
pub fn cross_check(a: &TermBlock, b: &TermBlock) -> Result<()> {
    let n = a.len().min(b.len());
    match (0..n).find(|&i| a.values[i] != b.values[i]) {
        None => Ok(()),
        Some(i) => Err(Error::OracleMismatch {
            what: format!("{} ({} vs {})", a.id, a.method, b.method),
            index: i,
            left: a.values[i],
            right: b.values[i],
        }),
    }
}

/// `t_0 = 0, t_{pn+i} = t_n + i`.
pub fn thue_terms(p: Prime, count: usize) -> TermBlock {
    let pu = p.get() as usize;
    let mut values = vec![0u32; count];
    for n in 1..count {
        values[n] = p.add(values[n / pu], (n % pu) as u32);
    }
    TermBlock { id: SequenceId::Thue(p), method: Method::Recurrence, values }
}

/// Digit sums computed number by number.
pub fn thue_terms_by_digits(p: Prime, count: usize) -> TermBlock {
    let values = (0..count).map(|n| digit_sum(n as u128, p).value()).collect();
    TermBlock { id: SequenceId::Thue(p), method: Method::DigitDefinition, values }
}

/// Rudin–Shapiro variants by `r_0 = 1, r_{2n} = r_{4n+1} = r_n, r_{4n+3} = 1 + r_{2n+1}`.
pub fn rudin_terms(id: SequenceId, count: usize) -> Result<TermBlock> {
    let base_len = match id {
        SequenceId::Rudin | SequenceId::RudinZeroed => count,
        SequenceId::RudinShifted => count.saturating_sub(1),
        other => return Err(Error::UnknownSequence(format!("{other} is not a Rudin variant"))),
    };
    let mut r = vec![0u32; base_len];
    for n in 0..base_len {
        r[n] = if n == 0 {
            1
        } else if n % 2 == 0 {
            r[n / 2]
        } else if n % 4 == 1 {
            r[n / 4]
        } else {
            1 ^ r[n / 2]
        };
    }
    Ok(TermBlock { id, method: Method::Recurrence, values: rudin_variant(id, r, count) })
}

/// Rudin–Shapiro variants from the parity of overlapping `11` blocks in binary.
pub fn rudin_terms_by_digits(id: SequenceId, count: usize) -> Result<TermBlock> {
    if !matches!(id, SequenceId::Rudin | SequenceId::RudinZeroed | SequenceId::RudinShifted) {
        return Err(Error::UnknownSequence(format!("{id} is not a Rudin variant")));
    }
    let r = (0..count as u64).map(|n| 1 ^ ((n & (n >> 1)).count_ones() & 1)).collect();
    Ok(TermBlock { id, method: Method::DigitDefinition, values: rudin_variant(id, r, count) })
}

fn rudin_variant(id: SequenceId, mut r: Vec<u32>, count: usize) -> Vec<u32> {
    match id {
        SequenceId::RudinZeroed => {
            if let Some(first) = r.first_mut() {
                *first = 0;
            }
        }
        SequenceId::RudinShifted => {
            r.insert(0, 0);
        }
        _ => {}
    }
    r.truncate(count);
    r
}

/// `s` and `w` by the joint quadratic recurrence
/// `s_n = Σ_{i=1}^{n-1} s_i w_{n-i}`, `w_0 = -1`,
/// `w_n = -s_n (+ s_{n/p} when p | n)`.
pub fn sw_terms(p: Prime, count: usize) -> (TermBlock, TermBlock) {
    let pm = p.get() as u64;
    let mut s = vec![0u32; count];
    let mut w = vec![0u32; count];
    if count > 0 {
        w[0] = p.neg(1);
    }
    for n in 1..count {
        s[n] = if n == 1 {
            1
        } else {
            let mut acc = 0u64;
            for i in 1..n {
                acc += s[i] as u64 * w[n - i] as u64;
                if i % 4096 == 0 {
                    acc %= pm;
                }
            }
            (acc % pm) as u32
        };
        w[n] = p.neg(s[n]);
        if n % p.get() as usize == 0 {
            w[n] = p.add(w[n], s[n / p.get() as usize]);
        }
    }
    (
        TermBlock { id: SequenceId::S(p), method: Method::Recurrence, values: s },
        TermBlock { id: SequenceId::W(p), method: Method::Recurrence, values: w },
    )
}

/// `s` by Newton lifting of `Y^(p+1) - Y^2 - Y + X = 0`.
pub fn s_terms_newton(p: Prime, count: usize) -> Result<TermBlock> {
    let eq = Equation::Shifted(p);
    let s = newton_root(&eq.poly(), &eq.seed(), count)?;
    Ok(TermBlock { id: SequenceId::S(p), method: Method::Newton, values: s.into_coeffs() })
}

fn c_from_s(p: Prime, s: &[u32], count: usize) -> Vec<u32> {
    (0..count)
        .map(|n| match n {
            0 => 0,
            1 => 1,
            _ => p.neg(s[n + 1]),
        })
        .collect()
}

/// `c_0 = 0, c_1 = 1, c_n = -s_{n+1}`, with `s` from `method`
/// ([`Method::Recurrence`] or [`Method::Newton`]).
pub fn c_terms(p: Prime, count: usize, method: Method) -> Result<TermBlock> {
    let s = match method {
        Method::Recurrence => sw_terms(p, count + 1).0,
        Method::Newton => s_terms_newton(p, count + 1)?,
        other => return Err(Error::Invalid(format!("c terms are not produced by {other}"))),
    };
    Ok(TermBlock { id: SequenceId::C(p), method, values: c_from_s(p, &s.values, count) })
}

/// `u` or `v` either by inverting the Rudin variant
/// ([`Method::ReferenceInverse`]) or by Newton lifting of its own equation.
pub fn inverse_terms(id: SequenceId, count: usize, method: Method) -> Result<TermBlock> {
    let (source, eq) = match id {
        SequenceId::U => (SequenceId::RudinZeroed, Equation::InverseZeroed),
        SequenceId::V => (SequenceId::RudinShifted, Equation::InverseShifted),
        other => return Err(Error::UnknownSequence(format!("{other} is not an inverse sequence"))),
    };
    let series = match method {
        Method::ReferenceInverse => {
            let r = rudin_terms(source, count.max(2))?;
            comp_inverse_ref(&r.to_series())?.truncate(count)
        }
        Method::Newton => newton_root(&eq.poly(), &eq.seed(), count)?,
        other => return Err(Error::Invalid(format!("{id} terms are not produced by {other}"))),
    };
    Ok(TermBlock { id, method, values: series.into_coeffs() })
}

/// Fast terms for any sequence.
pub fn terms(id: SequenceId, count: usize) -> Result<TermBlock> {
    match id {
        SequenceId::Thue(p) => Ok(thue_terms(p, count)),
        SequenceId::Rudin | SequenceId::RudinZeroed | SequenceId::RudinShifted => rudin_terms(id, count),
        SequenceId::S(p) => s_terms_newton(p, count),
        SequenceId::W(p) => {
            let s = PowerSeries::new(p, s_terms_newton(p, count)?.values);
            let w = s.substitute_power(p.get() as usize).sub(&s)?.sub(&PowerSeries::one(p, count))?;
            Ok(TermBlock { id, method: Method::Newton, values: w.into_coeffs() })
        }
        SequenceId::C(p) => c_terms(p, count, Method::Newton),
        SequenceId::U | SequenceId::V => inverse_terms(id, count, Method::Newton),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn thue_examples() {
        assert_eq!(thue_terms(prime(2), 8).values, [0, 1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(thue_terms(prime(3), 9).values, [0, 1, 2, 1, 2, 0, 2, 0, 1]);
        for p in [2, 3, 5, 7] {
            cross_check(&thue_terms(prime(p), 20_000), &thue_terms_by_digits(prime(p), 20_000)).unwrap();
        }
    }

    #[test]
    fn rudin_examples() {
        let r = rudin_terms(SequenceId::Rudin, 16).unwrap();
        assert_eq!(r.values, [1, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1, 0]);
        assert_eq!(rudin_terms(SequenceId::RudinZeroed, 4).unwrap().values, [0, 1, 1, 0]);
        assert_eq!(rudin_terms(SequenceId::RudinShifted, 4).unwrap().values, [0, 1, 1, 1]);
        for id in [SequenceId::Rudin, SequenceId::RudinZeroed, SequenceId::RudinShifted] {
            cross_check(&rudin_terms(id, 50_000).unwrap(), &rudin_terms_by_digits(id, 50_000).unwrap()).unwrap();
        }
    }

    #[test]
    fn s_and_w_examples() {
        let (s, w) = sw_terms(prime(3), 10);
        assert_eq!(s.values, [0, 1, 2, 2, 2, 2, 1, 1, 0, 1]);
        assert_eq!(&w.values[..6], &[2, 2, 1, 2, 1, 1]);
        for p in [2, 3, 5, 7] {
            let (s, _) = sw_terms(prime(p), 2);
            assert_eq!(s.values, [0, 1]);
        }
    }

    #[test]
    fn c_examples() {
        let c = c_terms(prime(3), 20, Method::Recurrence).unwrap();
        assert_eq!(c.values, [0, 1, 1, 1, 1, 2, 2, 0, 2, 1, 2, 0, 2, 1, 2, 2, 0, 2, 1, 1]);
        for p in [2, 3, 5, 7, 11] {
            let a = c_terms(prime(p), 800, Method::Recurrence).unwrap();
            let b = c_terms(prime(p), 800, Method::Newton).unwrap();
            cross_check(&a, &b).unwrap();
            assert_eq!(a.values[1], 1);
        }
    }

    #[test]
    fn w_fast_path_matches_recurrence() {
        let p = prime(5);
        let (_, w) = sw_terms(p, 600);
        cross_check(&w, &terms(SequenceId::W(p), 600).unwrap()).unwrap();
    }

    #[test]
    fn inverse_examples() {
        let uref = inverse_terms(SequenceId::U, 24, Method::ReferenceInverse).unwrap();
        let unew = inverse_terms(SequenceId::U, 24, Method::Newton).unwrap();
        assert_eq!(uref.values, [0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1]);
        cross_check(&uref, &unew).unwrap();
        let vref = inverse_terms(SequenceId::V, 24, Method::ReferenceInverse).unwrap();
        let vnew = inverse_terms(SequenceId::V, 24, Method::Newton).unwrap();
        assert_eq!(vref.values, [0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 1]);
        cross_check(&vref, &vnew).unwrap();
    }

    #[test]
    fn cross_check_reports_first_mismatch() {
        let a = thue_terms(prime(3), 10);
        let mut b = a.clone();
        b.values[6] = 1;
        match cross_check(&a, &b) {
            Err(Error::OracleMismatch { index, .. }) => assert_eq!(index, 6),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn spot_facts() {
        let c = c_terms(prime(3), 9 * 10_000 + 8, Method::Newton).unwrap();
        assert!((0..10_000).all(|n| c.values[9 * n + 7] == 0));
        let v = inverse_terms(SequenceId::V, 4 * 10_000 + 6, Method::Newton).unwrap();
        assert!((0..10_000).all(|n| (2..6).any(|k| v.values[4 * n + k] == 0)));
        let t = thue_terms(prime(3), 3usize.pow(9));
        for m in 1..=9u32 {
            let upto = &t.values[..3usize.pow(m)];
            for letter in 0..3 {
                assert_eq!(upto.iter().filter(|&&x| x == letter).count(), 3usize.pow(m - 1));
            }
        }
    }

    #[test]
    fn ids_round_trip() {
        for s in ["t3", "r", "r1", "r2", "s5", "w3", "c7", "u", "v"] {
            assert_eq!(s.parse::<SequenceId>().unwrap().to_string(), s);
        }
        assert_eq!("r''".parse::<SequenceId>().unwrap(), SequenceId::RudinShifted);
        assert!("c4".parse::<SequenceId>().is_err());
        assert!("x".parse::<SequenceId>().is_err());
    }

    #[test]
    fn bfile_format() {
        assert_eq!(thue_terms(prime(2), 3).to_bfile(), "0 0\n1 1\n2 1\n");
    }
}
