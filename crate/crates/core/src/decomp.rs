//! The two canonical presentations of a PSL₂(q) element and the
//! conversions between them and raw matrices.
//!
//! A [`BnForm`] writes an element as u(x)·h(y) inside the upper-triangular
//! subgroup or u(ã)·s·u(x)·h(y) outside it. An [`OgsForm`] writes it as
//! [u(a)s]^k · [u(b)s·u(-b)]^ℓ · u(x)·h(y) with 0 ≤ k < t and ℓ ∈ {0, 1}
//! (ℓ = 0 in characteristic 2). Since h(y) = h(-y) for odd q, every stored
//! y is the sign-canonical representative of {y, -y}; x is unaffected by
//! the flip.

use crate::error::Error;
use crate::gf::FieldElement;
use crate::psl2::{gen_h, gen_s, gen_u, ProjMatrix};
use crate::seq::{SeqTables, Slot};

/// Representative of {y, -y} with the smaller encoding (odd q); y itself in
/// characteristic 2.
pub fn canonical_y(y: &FieldElement) -> FieldElement {
    if y.field().char_two() {
        return *y;
    }
    let neg = -y;
    if neg.encode() < y.encode() {
        neg
    } else {
        *y
    }
}

pub fn is_canonical_y(y: &FieldElement) -> bool {
    y.field().char_two() || y.encode() <= (-y).encode()
}

/// Canonical triangular-coset form of an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BnForm {
    /// u(x)·h(y): the element lies in the upper-triangular subgroup.
    InB { x: FieldElement, y: FieldElement },
    /// u(ã)·s·u(x)·h(y): the element lies outside it.
    OutB {
        a_tilde: FieldElement,
        x: FieldElement,
        y: FieldElement,
    },
}

impl BnForm {
    pub fn in_b(x: FieldElement, y: FieldElement) -> Result<BnForm, Error> {
        x.field().ensure_same(y.field())?;
        if y.is_zero() {
            return Err(Error::DivisionByZero(y.field().q()));
        }
        Ok(BnForm::InB {
            x,
            y: canonical_y(&y),
        })
    }

    pub fn out_b(a_tilde: FieldElement, x: FieldElement, y: FieldElement) -> Result<BnForm, Error> {
        a_tilde.field().ensure_same(x.field())?;
        a_tilde.field().ensure_same(y.field())?;
        if y.is_zero() {
            return Err(Error::DivisionByZero(y.field().q()));
        }
        Ok(BnForm::OutB {
            a_tilde,
            x,
            y: canonical_y(&y),
        })
    }

    pub fn x(&self) -> &FieldElement {
        match self {
            BnForm::InB { x, .. } | BnForm::OutB { x, .. } => x,
        }
    }

    pub fn y(&self) -> &FieldElement {
        match self {
            BnForm::InB { y, .. } | BnForm::OutB { y, .. } => y,
        }
    }

    pub fn a_tilde(&self) -> Option<&FieldElement> {
        match self {
            BnForm::InB { .. } => None,
            BnForm::OutB { a_tilde, .. } => Some(a_tilde),
        }
    }

    /// The matrix this form denotes, built from the generators.
    pub fn realize(&self) -> ProjMatrix {
        match self {
            BnForm::InB { x, y } => gen_u(x).pmul(&gen_h(y).expect("y is nonzero")),
            BnForm::OutB { a_tilde, x, y } => gen_u(a_tilde)
                .pmul(&gen_s(x.field()))
                .pmul(&gen_u(x))
                .pmul(&gen_h(y).expect("y is nonzero")),
        }
    }
}

/// Total decomposition of a canonical matrix [[A,B],[C,D]]: C = 0 gives
/// u(B·A)·h(A); otherwise u(A·C⁻¹)·s·u(D·C)·h(-C).
pub fn bn_decompose(m: &ProjMatrix) -> BnForm {
    let (a, b, c, d) = (m.m11(), m.m12(), m.m21(), m.m22());
    if c.is_zero() {
        BnForm::InB {
            x: b * a,
            y: canonical_y(a),
        }
    } else {
        let c_inv = c.inv().expect("nonzero");
        BnForm::OutB {
            a_tilde: a * c_inv,
            x: d * c,
            y: canonical_y(&-c),
        }
    }
}

/// Canonical power-word form (k, ℓ, x, y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OgsForm {
    k: u64,
    ell: u8,
    x: FieldElement,
    y: FieldElement,
}

impl OgsForm {
    pub fn new(
        tables: &SeqTables,
        k: u64,
        ell: u8,
        x: FieldElement,
        y: FieldElement,
    ) -> Result<OgsForm, Error> {
        tables.field().ensure_same(x.field())?;
        tables.field().ensure_same(y.field())?;
        check_indices(tables, k, ell)?;
        if y.is_zero() {
            return Err(Error::DivisionByZero(y.field().q()));
        }
        Ok(OgsForm {
            k,
            ell,
            x,
            y: canonical_y(&y),
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn ell(&self) -> u8 {
        self.ell
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn y(&self) -> &FieldElement {
        &self.y
    }
}

fn check_indices(tables: &SeqTables, k: u64, ell: u8) -> Result<(), Error> {
    let t = tables.t();
    if k >= t {
        return Err(Error::IndexOutOfRange(format!("k={k} outside 0..{t}")));
    }
    match ell {
        0 => Ok(()),
        1 if !tables.field().char_two() => Ok(()),
        1 => Err(Error::IndexOutOfRange(
            "ell=1 does not exist in characteristic 2".into(),
        )),
        _ => Err(Error::IndexOutOfRange(format!("ell={ell} outside 0..=1"))),
    }
}

/// Closed-form shift of the trailing u(x)·h(y) past the power word:
///
/// - ℓ = 0, k = 0: u(x)·h(y) stays in the subgroup;
/// - ℓ = 0, k ≥ 1: u(a_k)·s·u(α²_{k-1}(x + a_k - a))·h(α_{k-1}·y);
/// - ℓ = 1:       u(b_k)·s·u(β_{k-1}(β_{k-1}·x - γ_{k-1}))·h(β_{k-1}·y).
pub fn ogs_to_bn(tables: &SeqTables, form: &OgsForm) -> Result<BnForm, Error> {
    tables.field().ensure_same(form.x.field())?;
    check_indices(tables, form.k, form.ell)?;
    let a = tables.params().a();
    match (form.k, form.ell) {
        (0, 0) => BnForm::in_b(form.x, form.y),
        (k, 0) => {
            let a_k = tables.a_k(k);
            let al = tables.alpha(k as i64 - 1);
            let x = (al * al) * ((form.x + a_k) - a);
            BnForm::out_b(*a_k, x, al * form.y)
        }
        (k, _) => {
            let b_k = tables.b_l(k);
            let be = tables.beta(k as i64 - 1);
            let ga = tables.gamma(k as i64 - 1);
            let x = be * ((be * form.x) - ga);
            BnForm::out_b(*b_k, x, be * form.y)
        }
    }
}

/// Inverse of [`ogs_to_bn`]: the branch and k come from the ã slot lookup,
/// then the shift is undone.
pub fn bn_to_ogs(tables: &SeqTables, form: &BnForm) -> Result<OgsForm, Error> {
    tables.field().ensure_same(form.y().field())?;
    match form {
        BnForm::InB { x, y } => OgsForm::new(tables, 0, 0, *x, *y),
        BnForm::OutB { a_tilde, x, y } => match tables.slot_of(a_tilde.encode()) {
            Some(Slot::A(k)) => {
                let al_inv = tables
                    .alpha(k as i64 - 1)
                    .inv()
                    .expect("alpha vanishes only at -1 and t-1");
                let a = tables.params().a();
                let x0 = ((x * (al_inv * al_inv)) + a) - tables.a_k(k);
                OgsForm::new(tables, k, 0, x0, y * al_inv)
            }
            Some(Slot::B(l)) => {
                let be_inv = tables
                    .beta(l as i64 - 1)
                    .inv()
                    .expect("beta never vanishes");
                let x0 = ((x * be_inv) + tables.gamma(l as i64 - 1)) * be_inv;
                OgsForm::new(tables, l, 1, x0, y * be_inv)
            }
            None => Err(Error::InternalInvariantViolation(format!(
                "coset label {a_tilde} missing from the tables"
            ))),
        },
    }
}

/// Literal product [u(a)s]^k · [u(b)·s·u(-b)]^ℓ · u(x) · h(y) through the
/// matrix generators; the oracle path, independent of the sequence shifts.
pub fn ogs_compose(tables: &SeqTables, form: &OgsForm) -> Result<ProjMatrix, Error> {
    tables.field().ensure_same(form.x.field())?;
    check_indices(tables, form.k, form.ell)?;
    let field = tables.field();
    let s = gen_s(field);
    let mut m = gen_u(tables.params().a()).pmul(&s).ppow(form.k);
    if form.ell == 1 {
        let b = tables.params().b().expect("ell=1 implies odd q");
        m = m.pmul(&gen_u(b)).pmul(&s).pmul(&gen_u(&-b));
    }
    Ok(m.pmul(&gen_u(&form.x))
        .pmul(&gen_h(&form.y).expect("y is nonzero")))
}

/// Total conversion matrix → OGS, as decomposition followed by slot lookup.
pub fn matrix_to_ogs(tables: &SeqTables, m: &ProjMatrix) -> Result<OgsForm, Error> {
    bn_to_ogs(tables, &bn_decompose(m))
}

/// Closed-form coset data of the power words.
#[derive(Debug, Clone)]
pub struct PowerBnForms {
    /// Entry k-1 is the form of [u(a)s]^k, for 1 ≤ k ≤ t-1:
    /// u(a_k)·s·u(-α_{k-2}·α_{k-1})·h(α_{k-1}).
    pub us_powers: Vec<BnForm>,
    /// Entry k is the form of [u(a)s]^k·[u(b)·s·u(-b)], for 0 ≤ k ≤ t-1:
    /// u(b_k)·s·u(-β_{k-1}·γ_{k-1})·h(β_{k-1}). Odd q only.
    pub usb_powers: Option<Vec<BnForm>>,
}

pub fn power_bn_forms(tables: &SeqTables) -> PowerBnForms {
    let t = tables.t();
    let us_powers = (1..t)
        .map(|k| {
            let al_prev = tables.alpha(k as i64 - 2);
            let al = tables.alpha(k as i64 - 1);
            BnForm::out_b(*tables.a_k(k), -&(al_prev * al), *al)
                .expect("alpha_{k-1} is nonzero for these k")
        })
        .collect();
    let usb_powers = if tables.field().char_two() {
        None
    } else {
        Some(
            (0..t)
                .map(|k| {
                    let be = tables.beta(k as i64 - 1);
                    let ga = tables.gamma(k as i64 - 1);
                    BnForm::out_b(*tables.b_l(k), -&(be * ga), *be).expect("beta never vanishes")
                })
                .collect(),
        )
    };
    PowerBnForms {
        us_powers,
        usb_powers,
    }
}

/// Every legal canonical form, in (k, ℓ, x, y) lexicographic order. For odd
/// q the y coordinate ranges over sign-canonical representatives only.
pub fn enumerate_forms(tables: &SeqTables) -> Vec<OgsForm> {
    let field = tables.field();
    let max_ell = if field.char_two() { 0 } else { 1 };
    let mut out = Vec::new();
    for k in 0..tables.t() {
        for ell in 0..=max_ell {
            for x in field.elements() {
                for y in field.elements() {
                    if y.is_zero() || !is_canonical_y(&y) {
                        continue;
                    }
                    out.push(OgsForm::new(tables, k, ell, x, y).expect("legal form"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::psl2::psl2_group_order;
    use crate::seq::OgsParams;

    fn tables(q: u64) -> SeqTables {
        let field = Field::from_order(q).unwrap();
        SeqTables::build(OgsParams::select(&field).unwrap()).unwrap()
    }

    fn out_b(tables: &SeqTables, a: u64, x: u64, y: u64) -> BnForm {
        let f = tables.field();
        BnForm::out_b(
            f.decode(a).unwrap(),
            f.decode(x).unwrap(),
            f.decode(y).unwrap(),
        )
        .unwrap()
    }

    fn form(tables: &SeqTables, k: u64, ell: u8, x: u64, y: u64) -> OgsForm {
        let f = tables.field();
        OgsForm::new(tables, k, ell, f.decode(x).unwrap(), f.decode(y).unwrap()).unwrap()
    }

    #[test]
    fn y_sign_canonicalization() {
        let f = Field::from_order(29).unwrap();
        assert_eq!(canonical_y(&f.decode(25).unwrap()).encode(), 4);
        assert_eq!(canonical_y(&f.decode(4).unwrap()).encode(), 4);
        let f4 = Field::from_order(4).unwrap();
        assert_eq!(canonical_y(&f4.decode(3).unwrap()).encode(), 3);
    }

    #[test]
    fn decompose_reference_matrix() {
        // u(14)·s·u(3)·h(4) over GF(29) has canonical entries [2,26,25,21].
        let t = tables(29);
        let m = ProjMatrix::from_encodings(t.field(), [2, 26, 25, 21]).unwrap();
        assert_eq!(bn_decompose(&m), out_b(&t, 14, 3, 4));
        assert_eq!(bn_decompose(&m).realize(), m);
    }

    #[test]
    fn decompose_identity() {
        let t = tables(29);
        let id = ProjMatrix::identity(t.field());
        let form = bn_decompose(&id);
        assert_eq!(
            form,
            BnForm::in_b(t.field().zero(), t.field().one()).unwrap()
        );
    }

    #[test]
    fn decompose_antidiagonal_corner() {
        // [[r1, -r2⁻¹], [r2, 0]] → ã = r1·r2⁻¹, x = 0, y ~ r2.
        // Instance: u(6)·s·h(9) over GF(29) is [[4,13],[20,0]].
        let t = tables(29);
        let m = ProjMatrix::from_encodings(t.field(), [4, 13, 20, 0]).unwrap();
        assert_eq!(bn_decompose(&m), out_b(&t, 6, 0, 9));
    }

    #[test]
    fn reference_conversions_forward() {
        let t = tables(29);
        let cases = [
            ((5, 0, 7, 9), (14, 3, 4)),
            ((6, 0, 27, 3), (6, 0, 9)),
            ((7, 1, 10, 3), (15, 15, 13)),
            ((7, 1, 8, 5), (15, 0, 12)),
        ];
        for ((k, ell, x, y), (ba, bx, by)) in cases {
            let got = ogs_to_bn(&t, &form(&t, k, ell as u8, x, y)).unwrap();
            assert_eq!(got, out_b(&t, ba, bx, by), "k={k} ell={ell}");
        }
    }

    #[test]
    fn reference_conversions_backward() {
        let t = tables(29);
        let cases = [
            ((14, 3, 4), (5, 0, 7, 9)),
            ((6, 0, 9), (6, 0, 27, 3)),
            ((15, 15, 13), (7, 1, 10, 3)),
            ((15, 0, 12), (7, 1, 8, 5)),
        ];
        for ((ba, bx, by), (k, ell, x, y)) in cases {
            let got = bn_to_ogs(&t, &out_b(&t, ba, bx, by)).unwrap();
            assert_eq!(got, form(&t, k, ell as u8, x, y), "a~={ba}");
        }
    }

    #[test]
    fn in_b_round_trip() {
        let t = tables(29);
        let f = t.field();
        let bn = BnForm::in_b(f.decode(7).unwrap(), f.decode(9).unwrap()).unwrap();
        let ogs = bn_to_ogs(&t, &bn).unwrap();
        assert_eq!((ogs.k(), ogs.ell()), (0, 0));
        assert_eq!(ogs_to_bn(&t, &ogs).unwrap(), bn);
    }

    #[test]
    fn compose_basics() {
        let t = tables(29);
        assert_eq!(
            ogs_compose(&t, &form(&t, 0, 0, 0, 1)).unwrap(),
            ProjMatrix::identity(t.field())
        );
        assert_eq!(
            ogs_compose(&t, &form(&t, 5, 0, 7, 9)).unwrap(),
            ProjMatrix::from_encodings(t.field(), [2, 26, 25, 21]).unwrap()
        );
    }

    #[test]
    fn final_power_is_s_times_u_minus_a() {
        // [u(a)s]^{t-1} = s·u(-a), whose coset label ã is 0 and whose
        // power-word form is (t-1, 0, 0, 1).
        let t = tables(29);
        let f = t.field();
        let s_u = gen_s(f).pmul(&gen_u(&-t.params().a()));
        let composed = ogs_compose(&t, &form(&t, t.t() - 1, 0, 0, 1)).unwrap();
        assert_eq!(composed, s_u);
        let bn = bn_decompose(&s_u);
        assert!(bn.a_tilde().unwrap().is_zero());
        assert_eq!(
            matrix_to_ogs(&t, &s_u).unwrap(),
            form(&t, t.t() - 1, 0, 0, 1)
        );
    }

    #[test]
    fn matrix_round_trip_exhaustive_gf7() {
        let t = tables(7);
        let forms = enumerate_forms(&t);
        assert_eq!(forms.len() as u64, psl2_group_order(7));
        let mut seen = std::collections::HashSet::new();
        for form in &forms {
            let m = ogs_compose(&t, form).unwrap();
            assert!(seen.insert(m.encodings()), "collision at {form:?}");
            assert_eq!(&matrix_to_ogs(&t, &m).unwrap(), form);
        }
    }

    #[test]
    fn power_forms_closed_expressions() {
        let t = tables(29);
        let powers = power_bn_forms(&t);
        // k=1: x_1 = -α_{-1}·α_0 = 0, y_1 = α_0 = 1.
        assert_eq!(powers.us_powers[0], out_b(&t, 4, 0, 1));
        // k=5: y_5 = α_4 = 6.
        assert_eq!(powers.us_powers[4].y().encode(), 6);
        // k=7, involution branch: y'_7 = β_6 = 14.
        assert_eq!(powers.usb_powers.as_ref().unwrap()[7].y().encode(), 14);
    }

    #[test]
    fn index_validation() {
        let t = tables(29);
        let f = t.field();
        let x = f.decode(1).unwrap();
        let y = f.decode(1).unwrap();
        assert!(matches!(
            OgsForm::new(&t, 15, 0, x, y),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            OgsForm::new(&t, 0, 2, x, y),
            Err(Error::IndexOutOfRange(_))
        ));
        let t4 = tables(4);
        let f4 = t4.field();
        assert!(matches!(
            OgsForm::new(&t4, 0, 1, f4.one(), f4.one()),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            OgsForm::new(&t, 0, 0, x, f.zero()),
            Err(Error::DivisionByZero(29))
        ));
    }
}
