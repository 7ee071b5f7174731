//! Parameter selection and the recursive sequences over F_q.
//!
//! The parameter `a` is the encoding-smallest element for which λ² + aλ + 1
//! is irreducible and the matrix û(a)·ŝ has order q+1 in SL₂(q). For odd q
//! the parameter `b` defaults to 1 when 1 avoids the a-sequence, else -1;
//! an override is validated against the same exclusion rule.
//!
//! Index conventions, fixed once here and respected by every accessor:
//! `a_seq` is 1-based (a_1..a_{t-1}), `b_seq` is 0-based (b_0..b_{t-1}), and
//! α, β, γ start at -1.

use std::collections::HashMap;

use crate::error::Error;
use crate::gf::{Field, FieldElement};
use crate::psl2::sl2_order_of_us;
use crate::report::{Check, Counterexample, Outcome};

/// Selected parameters for one field: a, optional b (odd q only), and
/// t = (q+1)/gcd(2, q+1).
#[derive(Debug, Clone)]
pub struct OgsParams {
    field: Field,
    a: FieldElement,
    b: Option<FieldElement>,
    t: u64,
}

impl OgsParams {
    /// t = (q+1)/gcd(2, q+1): q+1 in characteristic 2, (q+1)/2 for odd q.
    pub fn t_for(field: &Field) -> u64 {
        let q = field.q();
        let gcd = if q.is_multiple_of(2) { 1 } else { 2 };
        (q + 1) / gcd
    }

    /// Default parameters: smallest valid a, then b = 1 or -1.
    pub fn select(field: &Field) -> Result<OgsParams, Error> {
        OgsParams::select_with(field, None, None)
    }

    /// Parameters with optional overrides, validated before use.
    pub fn select_with(
        field: &Field,
        a_override: Option<u64>,
        b_override: Option<u64>,
    ) -> Result<OgsParams, Error> {
        let a = match a_override {
            Some(n) => {
                let a = field.decode(n).map_err(|_| Error::InvalidA(n))?;
                validate_a(&a)?;
                a
            }
            None => select_a(field)?,
        };
        let mut params = OgsParams {
            field: *field,
            a,
            b: None,
            t: OgsParams::t_for(field),
        };
        if field.char_two() {
            if b_override.is_some() {
                return Err(Error::NotOddCharacteristic);
            }
        } else {
            let a_seq = a_sequence(&params)?;
            params.b = Some(select_b(field, &a_seq, b_override)?);
        }
        Ok(params)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> Option<&FieldElement> {
        self.b.as_ref()
    }

    pub fn t(&self) -> u64 {
        self.t
    }
}

/// Smallest a by integer encoding with λ² + aλ + 1 irreducible and
/// û(a)·ŝ of order q+1 in SL₂(q).
pub fn select_a(field: &Field) -> Result<FieldElement, Error> {
    field
        .elements()
        .find(|a| validate_a(a).is_ok())
        .ok_or(Error::NoValidA(field.q()))
}

/// Both selection conditions for a candidate a.
pub fn validate_a(a: &FieldElement) -> Result<(), Error> {
    let field = a.field();
    if field.quadratic_is_irreducible(a) && sl2_order_of_us(a) == field.q() + 1 {
        Ok(())
    } else {
        Err(Error::InvalidA(a.encode()))
    }
}

/// Default b (1 if it avoids the a-sequence, else -1), or a validated
/// override. Only defined for odd q.
pub fn select_b(
    field: &Field,
    a_seq: &[FieldElement],
    b_override: Option<u64>,
) -> Result<FieldElement, Error> {
    if field.char_two() {
        return Err(Error::NotOddCharacteristic);
    }
    let excluded: std::collections::HashSet<u64> = a_seq.iter().map(|e| e.encode()).collect();
    match b_override {
        Some(n) => {
            let b = field.decode(n).map_err(|_| Error::InvalidB(n))?;
            if excluded.contains(&b.encode()) {
                return Err(Error::InvalidB(n));
            }
            Ok(b)
        }
        None => {
            let one = field.one();
            if !excluded.contains(&one.encode()) {
                return Ok(one);
            }
            let neg_one = field.from_int(-1);
            if !excluded.contains(&neg_one.encode()) {
                return Ok(neg_one);
            }
            Err(Error::InternalInvariantViolation(
                "both 1 and -1 collide with the a-sequence".into(),
            ))
        }
    }
}

/// a_1 = a, a_{k+1} = a - a_k⁻¹, for k up to t-1. No term before the last
/// may vanish, and the last must vanish.
pub fn a_sequence(params: &OgsParams) -> Result<Vec<FieldElement>, Error> {
    let t = params.t;
    let a = &params.a;
    let mut seq = Vec::with_capacity((t - 1) as usize);
    seq.push(*a);
    for k in 2..t {
        let prev = seq.last().expect("nonempty");
        let inv = prev.inv().map_err(|_| {
            Error::InternalInvariantViolation(format!("a_{} = 0 before the final term", k - 1))
        })?;
        seq.push(a - inv);
    }
    if !seq.last().expect("t >= 2").is_zero() {
        return Err(Error::InternalInvariantViolation(format!(
            "a_{} = {} instead of 0",
            t - 1,
            seq.last().unwrap()
        )));
    }
    Ok(seq)
}

/// b_0 = b, b_{ℓ+1} = a - b_ℓ⁻¹, closing up with b_0 = a - b_{t-1}⁻¹.
pub fn b_sequence(params: &OgsParams) -> Result<Vec<FieldElement>, Error> {
    let b = params.b().ok_or(Error::NotOddCharacteristic)?;
    let a = &params.a;
    let t = params.t;
    let mut seq = Vec::with_capacity(t as usize);
    seq.push(*b);
    for l in 1..t {
        let prev = seq.last().expect("nonempty");
        let inv = prev
            .inv()
            .map_err(|_| Error::InternalInvariantViolation(format!("b_{} = 0", l - 1)))?;
        seq.push(a - inv);
    }
    let wrap_inv = seq
        .last()
        .expect("nonempty")
        .inv()
        .map_err(|_| Error::InternalInvariantViolation(format!("b_{} = 0", t - 1)))?;
    if &(a - wrap_inv) != b {
        return Err(Error::InternalInvariantViolation(
            "b-sequence fails to wrap to b_0".into(),
        ));
    }
    Ok(seq)
}

/// α_{-1} = 0, α_0 = 1, α_{k+1} = a·α_k - α_{k-1}; α_{t-1} must vanish.
/// Returned vector holds α_{-1}..α_{t-1}, so index r+1 addresses α_r.
pub fn alpha_recursive(params: &OgsParams) -> Result<Vec<FieldElement>, Error> {
    let field = &params.field;
    let a = &params.a;
    let t = params.t as usize;
    let mut alpha = Vec::with_capacity(t + 1);
    alpha.push(field.zero());
    alpha.push(field.one());
    for _ in 1..t {
        let last = &alpha[alpha.len() - 1];
        let prev = &alpha[alpha.len() - 2];
        alpha.push((a * last) - prev);
    }
    if !alpha.last().expect("nonempty").is_zero() {
        return Err(Error::InternalInvariantViolation(format!(
            "alpha_{} = {} instead of 0",
            t - 1,
            alpha.last().unwrap()
        )));
    }
    Ok(alpha)
}

/// α_k evaluated through the alternating binomial sums
/// Σ_{i=0}^{⌊k/2⌋} (-1)^i C(k-i, i) a^{k-2i}, independent of the recurrence.
/// Binomial residues come from the Pascal recurrence mod p, which is exact
/// integer arithmetic with no factorial inversion.
pub fn alpha_closed_form(params: &OgsParams, k: i64) -> FieldElement {
    assert!(
        -1 <= k && k < params.t as i64,
        "k={k} outside -1..={}",
        params.t - 1
    );
    let field = &params.field;
    if k == -1 {
        return field.zero();
    }
    let k = k as u64;
    let r = k / 2;
    let p = field.p();

    // Pascal row n holds C(n, j) mod p; the sum needs C(k-i, i) for i ≤ ⌊k/2⌋.
    let mut needed = vec![0u64; (r + 1) as usize];
    let mut row: Vec<u64> = vec![1];
    for n in 0..=k {
        if n > 0 {
            row.push(1);
            for j in (1..row.len() - 1).rev() {
                row[j] = (row[j] + row[j - 1]) % p;
            }
        }
        let i = k - n;
        if i <= r {
            needed[i as usize] = row[i as usize] % p;
        }
    }

    let a = &params.a;
    let mut acc = field.zero();
    for i in 0..=r {
        let term = a.pow(k - 2 * i) * field.from_int(needed[i as usize] as i64);
        acc = if i % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// α_k as the degree-k value of the second-kind Chebyshev recurrence
/// U_{j+1}(z) = 2z·U_j(z) - U_{j-1}(z) at z = 2⁻¹·a. Odd q only.
pub fn alpha_chebyshev(params: &OgsParams, k: i64) -> Result<FieldElement, Error> {
    let field = &params.field;
    if field.char_two() {
        return Err(Error::EvenCharacteristic);
    }
    assert!(
        -1 <= k && k < params.t as i64,
        "k={k} outside -1..={}",
        params.t - 1
    );
    let two = field.from_int(2);
    let z = params.a * two.inv().expect("2 is a unit in odd characteristic");
    let mut prev = field.zero(); // U_{-1}
    let mut cur = field.one(); // U_0
    for _ in 0..(k + 1) {
        let next = ((two * z) * cur) - prev;
        prev = cur;
        cur = next;
    }
    // After k+1 steps `prev` holds U_k (handles k = -1 as U_{-1} = 0).
    Ok(prev)
}

/// β_{-1} = 1 by definition, β_k = b·α_k - α_{k-1} for k ≥ 0;
/// γ_r = α_r + b·β_r throughout. Both vectors are offset like `alpha`.
pub fn beta_gamma(
    params: &OgsParams,
    alpha: &[FieldElement],
) -> Result<(Vec<FieldElement>, Vec<FieldElement>), Error> {
    let b = params.b().ok_or(Error::NotOddCharacteristic)?;
    let t = params.t as usize;
    debug_assert_eq!(alpha.len(), t + 1);
    let mut beta = Vec::with_capacity(t + 1);
    beta.push(params.field.one());
    for k in 0..t {
        // alpha[k+1] = α_k, alpha[k] = α_{k-1}
        beta.push((b * alpha[k + 1]) - alpha[k]);
    }
    let gamma: Vec<FieldElement> = alpha
        .iter()
        .zip(beta.iter())
        .map(|(al, be)| al + (b * be))
        .collect();
    Ok((beta, gamma))
}

/// Which branch of the coset labels an element of F_q lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// a_k with 1 ≤ k ≤ t-1.
    A(u64),
    /// b_ℓ with 0 ≤ ℓ ≤ t-1 (odd q only).
    B(u64),
}

/// All sequences for one parameter choice, plus the label → slot map used
/// by the conversions.
#[derive(Debug, Clone)]
pub struct SeqTables {
    params: OgsParams,
    a_seq: Vec<FieldElement>,
    b_seq: Option<Vec<FieldElement>>,
    alpha: Vec<FieldElement>,
    beta: Option<Vec<FieldElement>>,
    gamma: Option<Vec<FieldElement>>,
    slots: HashMap<u64, Slot>,
}

impl SeqTables {
    pub fn build(params: OgsParams) -> Result<SeqTables, Error> {
        let a_seq = a_sequence(&params)?;
        let alpha = alpha_recursive(&params)?;
        let (b_seq, beta, gamma) = if params.field.char_two() {
            (None, None, None)
        } else {
            let b_seq = b_sequence(&params)?;
            let (beta, gamma) = beta_gamma(&params, &alpha)?;
            (Some(b_seq), Some(beta), Some(gamma))
        };

        let mut slots = HashMap::new();
        for (i, e) in a_seq.iter().enumerate() {
            if slots.insert(e.encode(), Slot::A(i as u64 + 1)).is_some() {
                return Err(Error::InternalInvariantViolation(format!(
                    "duplicate coset label {e}"
                )));
            }
        }
        if let Some(b_seq) = &b_seq {
            for (i, e) in b_seq.iter().enumerate() {
                if slots.insert(e.encode(), Slot::B(i as u64)).is_some() {
                    return Err(Error::InternalInvariantViolation(format!(
                        "duplicate coset label {e}"
                    )));
                }
            }
        }
        if slots.len() != params.field.q() as usize {
            return Err(Error::InternalInvariantViolation(format!(
                "coset labels cover {} of {} field elements",
                slots.len(),
                params.field.q()
            )));
        }

        Ok(SeqTables {
            params,
            a_seq,
            b_seq,
            alpha,
            beta,
            gamma,
            slots,
        })
    }

    pub fn params(&self) -> &OgsParams {
        &self.params
    }

    pub fn field(&self) -> &Field {
        &self.params.field
    }

    pub fn t(&self) -> u64 {
        self.params.t
    }

    /// a_k for 1 ≤ k ≤ t-1.
    pub fn a_k(&self, k: u64) -> &FieldElement {
        assert!(1 <= k && k < self.params.t, "a_{k} out of range");
        &self.a_seq[(k - 1) as usize]
    }

    /// b_ℓ for 0 ≤ ℓ ≤ t-1; odd q only.
    pub fn b_l(&self, l: u64) -> &FieldElement {
        assert!(l < self.params.t, "b_{l} out of range");
        &self
            .b_seq
            .as_ref()
            .expect("no b-sequence in characteristic 2")[l as usize]
    }

    /// α_r for -1 ≤ r ≤ t-1.
    pub fn alpha(&self, r: i64) -> &FieldElement {
        assert!(
            -1 <= r && r < self.params.t as i64,
            "alpha_{r} out of range"
        );
        &self.alpha[(r + 1) as usize]
    }

    /// β_r for -1 ≤ r ≤ t-1; odd q only.
    pub fn beta(&self, r: i64) -> &FieldElement {
        assert!(-1 <= r && r < self.params.t as i64, "beta_{r} out of range");
        &self.beta.as_ref().expect("no beta in characteristic 2")[(r + 1) as usize]
    }

    /// γ_r for -1 ≤ r ≤ t-1; odd q only.
    pub fn gamma(&self, r: i64) -> &FieldElement {
        assert!(
            -1 <= r && r < self.params.t as i64,
            "gamma_{r} out of range"
        );
        &self.gamma.as_ref().expect("no gamma in characteristic 2")[(r + 1) as usize]
    }

    pub fn a_seq(&self) -> &[FieldElement] {
        &self.a_seq
    }

    pub fn b_seq(&self) -> Option<&[FieldElement]> {
        self.b_seq.as_deref()
    }

    pub fn alpha_seq(&self) -> &[FieldElement] {
        &self.alpha
    }

    pub fn beta_seq(&self) -> Option<&[FieldElement]> {
        self.beta.as_deref()
    }

    pub fn gamma_seq(&self) -> Option<&[FieldElement]> {
        self.gamma.as_deref()
    }

    /// Coset slot of a field element given by encoding, if the tables are
    /// complete (they always are; None would mean a broken build).
    pub fn slot_of(&self, encoding: u64) -> Option<Slot> {
        self.slots.get(&encoding).copied()
    }

    /// The four product/ratio identities tying the sequences together, each
    /// reported with its first counterexample.
    pub fn product_formulas(&self) -> Vec<Check> {
        vec![
            Check::run("a-from-alpha-ratio", || self.check_a_ratio()),
            Check::run("b-from-beta-ratio", || self.check_b_ratio()),
            Check::run("alpha-as-prefix-product", || self.check_alpha_prefix()),
            Check::run("beta-as-prefix-product", || self.check_beta_prefix()),
        ]
    }

    /// a_k = α_k · α_{k-1}⁻¹ for 1 ≤ k ≤ t-1.
    pub(crate) fn check_a_ratio(&self) -> Outcome {
        for k in 1..self.t() {
            let expected = self.a_k(k);
            let ratio = self.alpha(k as i64)
                * self
                    .alpha(k as i64 - 1)
                    .inv()
                    .expect("alpha vanishes only at -1 and t-1");
            if &ratio != expected {
                return Outcome::Fail(Counterexample::new(
                    format!("k={k}"),
                    format!("a_{k} = {expected}"),
                    format!("{ratio}"),
                ));
            }
        }
        Outcome::Pass
    }

    /// b_ℓ = β_ℓ · β_{ℓ-1}⁻¹ for 0 ≤ ℓ ≤ t-1.
    pub(crate) fn check_b_ratio(&self) -> Outcome {
        if self.field().char_two() {
            return Outcome::Skip("no b-sequence in characteristic 2".into());
        }
        for l in 0..self.t() {
            let expected = self.b_l(l);
            let ratio =
                self.beta(l as i64) * self.beta(l as i64 - 1).inv().expect("beta never vanishes");
            if &ratio != expected {
                return Outcome::Fail(Counterexample::new(
                    format!("l={l}"),
                    format!("b_{l} = {expected}"),
                    format!("{ratio}"),
                ));
            }
        }
        Outcome::Pass
    }

    /// α_k = Π_{i=1..k} a_i for 1 ≤ k ≤ t-1.
    pub(crate) fn check_alpha_prefix(&self) -> Outcome {
        let mut prod = self.field().one();
        for k in 1..self.t() {
            prod = prod * self.a_k(k);
            if &prod != self.alpha(k as i64) {
                return Outcome::Fail(Counterexample::new(
                    format!("k={k}"),
                    format!("alpha_{k} = {}", self.alpha(k as i64)),
                    format!("{prod}"),
                ));
            }
        }
        Outcome::Pass
    }

    /// β_ℓ = Π_{i=0..ℓ} b_i for 0 ≤ ℓ ≤ t-1.
    pub(crate) fn check_beta_prefix(&self) -> Outcome {
        if self.field().char_two() {
            return Outcome::Skip("no b-sequence in characteristic 2".into());
        }
        let mut prod = self.field().one();
        for l in 0..self.t() {
            prod = prod * self.b_l(l);
            if &prod != self.beta(l as i64) {
                return Outcome::Fail(Counterexample::new(
                    format!("l={l}"),
                    format!("beta_{l} = {}", self.beta(l as i64)),
                    format!("{prod}"),
                ));
            }
        }
        Outcome::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    fn tables(q: u64) -> SeqTables {
        SeqTables::build(OgsParams::select(&gf(q)).unwrap()).unwrap()
    }

    fn encodings(seq: &[FieldElement]) -> Vec<u64> {
        seq.iter().map(|e| e.encode()).collect()
    }

    #[test]
    fn smallest_valid_a_over_gf29() {
        let f = gf(29);
        // Oracle scan: every candidate below 4 must fail one of the two
        // selection conditions.
        for n in 0..4 {
            assert!(validate_a(&f.decode(n).unwrap()).is_err(), "a={n}");
        }
        assert_eq!(select_a(&f).unwrap().encode(), 4);
    }

    #[test]
    fn smallest_valid_a_over_gf4_and_gf3() {
        let f4 = gf(4);
        // a = 1 is rejected: z² + z + 1 has the two non-subfield elements
        // of GF(4) as roots.
        let one = f4.one();
        assert!(!f4.quadratic_is_irreducible(&one));
        assert_eq!(select_a(&f4).unwrap().encode(), 2);

        assert_eq!(select_a(&gf(3)).unwrap().encode(), 0);
    }

    #[test]
    fn t_values() {
        assert_eq!(OgsParams::t_for(&gf(29)), 15);
        assert_eq!(OgsParams::t_for(&gf(4)), 5);
        assert_eq!(OgsParams::t_for(&gf(3)), 2);
        assert_eq!(OgsParams::t_for(&gf(2)), 3);
    }

    #[test]
    fn a_sequence_gf29_matches_reference_table() {
        let t = tables(29);
        assert_eq!(
            encodings(t.a_seq()),
            vec![4, 11, 25, 26, 14, 6, 28, 5, 27, 19, 7, 8, 22, 0]
        );
        assert!(t.a_seq().last().unwrap().is_zero());
    }

    #[test]
    fn a_sequence_small_fields() {
        let t2 = tables(2);
        assert_eq!(encodings(t2.a_seq()), vec![1, 0]);
        let t4 = tables(4);
        assert_eq!(t4.a_seq().len(), 4);
        assert!(t4.a_seq().last().unwrap().is_zero());
        let t3 = tables(3);
        assert_eq!(encodings(t3.a_seq()), vec![0]);
    }

    #[test]
    fn b_sequence_gf29_matches_reference_table() {
        let t = tables(29);
        assert_eq!(
            encodings(t.b_seq().unwrap()),
            vec![1, 3, 23, 9, 20, 17, 21, 15, 2, 18, 12, 16, 13, 24, 10]
        );
        // Wrap: 4 - 10⁻¹ = 1.
        let f = *t.field();
        let last = t.b_l(14);
        assert_eq!(t.params().a() - last.inv().unwrap(), f.decode(1).unwrap());
    }

    #[test]
    fn b_sequence_gf5() {
        let t = tables(5);
        assert_eq!(t.t(), 3);
        assert_eq!(encodings(t.b_seq().unwrap()), vec![1, 3, 2]);
    }

    #[test]
    fn default_b_choices() {
        assert_eq!(tables(29).params().b().unwrap().encode(), 1);
        // For q = 13 the default lands on 1 or -1, validated against the
        // a-sequence.
        let t13 = tables(13);
        let b = t13.params().b().unwrap().encode();
        assert!(b == 1 || b == 12);
        assert!(t13.a_seq().iter().all(|a| a.encode() != b));
    }

    #[test]
    fn b_rejections() {
        let f4 = gf(4);
        let params = OgsParams::select(&f4).unwrap();
        assert!(params.b().is_none());
        assert_eq!(select_b(&f4, &[], None), Err(Error::NotOddCharacteristic));
        // b has no meaning in characteristic 2.
        assert_eq!(
            OgsParams::select_with(&gf(4), None, Some(1)).unwrap_err(),
            Error::NotOddCharacteristic
        );
        // a_2 = 11 over GF(29), so b = 11 collides.
        assert_eq!(
            OgsParams::select_with(&gf(29), None, Some(11)).unwrap_err(),
            Error::InvalidB(11)
        );
        // b = 0 collides with a_{t-1}.
        assert_eq!(
            OgsParams::select_with(&gf(29), None, Some(0)).unwrap_err(),
            Error::InvalidB(0)
        );
    }

    #[test]
    fn a_override_validation() {
        assert!(OgsParams::select_with(&gf(29), Some(4), Some(1)).is_ok());
        assert_eq!(
            OgsParams::select_with(&gf(29), Some(2), None).unwrap_err(),
            Error::InvalidA(2)
        );
        // Irreducible but root of order 3, not q+1.
        assert_eq!(
            OgsParams::select_with(&gf(29), Some(1), None).unwrap_err(),
            Error::InvalidA(1)
        );
    }

    #[test]
    fn alpha_gf29_matches_reference_table() {
        let t = tables(29);
        assert_eq!(
            encodings(t.alpha_seq()),
            vec![0, 1, 4, 15, 27, 6, 26, 11, 18, 3, 23, 2, 14, 25, 28, 0]
        );
        assert_eq!(t.alpha(1), t.params().a());
        // α_{t-2} is 1 or -1.
        let near_last = t.alpha(t.t() as i64 - 2).encode();
        assert!(near_last == 1 || near_last == 28);
    }

    #[test]
    fn alpha_closed_form_values() {
        let t = tables(29);
        let p = t.params();
        assert_eq!(alpha_closed_form(p, 2).encode(), 15);
        assert_eq!(alpha_closed_form(p, 0).encode(), 1);
        assert_eq!(alpha_closed_form(p, 5).encode(), 26);
        assert!(alpha_closed_form(p, -1).is_zero());
    }

    #[test]
    fn alpha_three_way_agreement() {
        for q in [4u64, 9, 29] {
            let t = tables(q);
            let p = t.params();
            for k in -1..t.t() as i64 {
                assert_eq!(&alpha_closed_form(p, k), t.alpha(k), "closed q={q} k={k}");
                if !t.field().char_two() {
                    assert_eq!(
                        &alpha_chebyshev(p, k).unwrap(),
                        t.alpha(k),
                        "chebyshev q={q} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn chebyshev_values_and_char2_rejection() {
        let t29 = tables(29);
        assert_eq!(alpha_chebyshev(t29.params(), 3).unwrap().encode(), 27);
        assert_eq!(alpha_chebyshev(t29.params(), 0).unwrap().encode(), 1);
        let t4 = tables(4);
        assert_eq!(
            alpha_chebyshev(t4.params(), 1),
            Err(Error::EvenCharacteristic)
        );
    }

    #[test]
    fn beta_gamma_gf29() {
        let t = tables(29);
        assert_eq!(
            encodings(t.beta_seq().unwrap()),
            vec![1, 1, 3, 11, 12, 8, 20, 14, 7, 14, 20, 8, 12, 11, 3, 1]
        );
        // β_0 = b and γ_{-1} = b.
        assert_eq!(t.beta(0), t.params().b().unwrap());
        assert_eq!(t.gamma(-1), t.params().b().unwrap());
    }

    #[test]
    fn product_formulas_pass() {
        for q in [13u64, 29, 4] {
            let t = tables(q);
            for check in t.product_formulas() {
                assert!(check.pass, "q={q} {}", check.name);
            }
        }
        // Spot value: α_8 = 3 = a_1···a_8 over GF(29).
        let t = tables(29);
        let prod = (1..=8).fold(t.field().one(), |acc, k| acc * t.a_k(k));
        assert_eq!(prod.encode(), 3);
        assert_eq!(t.alpha(8).encode(), 3);
    }

    #[test]
    fn coset_labels_cover_the_field() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 29] {
            let t = tables(q);
            for n in 0..q {
                assert!(t.slot_of(n).is_some(), "q={q} n={n}");
            }
        }
        let t = tables(29);
        assert_eq!(t.slot_of(11), Some(Slot::A(2)));
        assert_eq!(t.slot_of(10), Some(Slot::B(14)));
    }
}
