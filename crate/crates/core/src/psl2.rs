//! Elements of PSL₂(q) as canonical projective matrices.
//!
//! A [`ProjMatrix`] is a determinant-1 matrix identified with its negation.
//! For odd q the stored representative is the one of {M, -M} whose first
//! nonzero entry in row-major order has the smaller integer encoding; in
//! characteristic 2 the matrix is stored as-is. All operations return the
//! canonical representative, so `==` and hashing are projective equality.

use std::fmt;

use crate::error::Error;
use crate::gf::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct ProjMatrix {
    m: [FieldElement; 4],
}

impl fmt::Debug for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.encodings();
        write!(
            f,
            "[[{},{}],[{},{}]]∈PSL2({})",
            e[0],
            e[1],
            e[2],
            e[3],
            self.field().q()
        )
    }
}

impl std::hash::Hash for ProjMatrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field().q().hash(state);
        self.encodings().hash(state);
    }
}

impl ProjMatrix {
    /// Canonical representative of a determinant-1 matrix.
    pub fn new(
        m11: FieldElement,
        m12: FieldElement,
        m21: FieldElement,
        m22: FieldElement,
    ) -> Result<ProjMatrix, Error> {
        let field = *m11.field();
        for e in [&m12, &m21, &m22] {
            field.ensure_same(e.field())?;
        }
        let det = (m11 * m22) - (m12 * m21);
        if !det.is_one() {
            return Err(Error::DetNotOne);
        }
        Ok(ProjMatrix::canonical([m11, m12, m21, m22]))
    }

    pub fn from_encodings(field: &Field, enc: [u64; 4]) -> Result<ProjMatrix, Error> {
        let decode = |n| field.decode(n);
        ProjMatrix::new(
            decode(enc[0])?,
            decode(enc[1])?,
            decode(enc[2])?,
            decode(enc[3])?,
        )
    }

    /// Internal constructor for products whose determinant is 1 by
    /// construction.
    fn canonical(mut m: [FieldElement; 4]) -> ProjMatrix {
        let field = *m[0].field();
        debug_assert!(
            ((m[0] * m[3]) - (m[1] * m[2])).is_one(),
            "determinant drifted from 1"
        );
        if !field.char_two() {
            if let Some(first) = m.iter().find(|e| !e.is_zero()) {
                if (-first).encode() < first.encode() {
                    for e in m.iter_mut() {
                        *e = -&*e;
                    }
                }
            }
        }
        ProjMatrix { m }
    }

    pub fn identity(field: &Field) -> ProjMatrix {
        ProjMatrix {
            m: [field.one(), field.zero(), field.zero(), field.one()],
        }
    }

    pub fn field(&self) -> &Field {
        self.m[0].field()
    }

    pub fn m11(&self) -> &FieldElement {
        &self.m[0]
    }

    pub fn m12(&self) -> &FieldElement {
        &self.m[1]
    }

    pub fn m21(&self) -> &FieldElement {
        &self.m[2]
    }

    pub fn m22(&self) -> &FieldElement {
        &self.m[3]
    }

    /// Entry encodings in row-major order, the serialized wire form.
    pub fn encodings(&self) -> [u64; 4] {
        [
            self.m[0].encode(),
            self.m[1].encode(),
            self.m[2].encode(),
            self.m[3].encode(),
        ]
    }

    /// Canonical representative of the product. Panics if the operands live
    /// in different fields.
    pub fn pmul(&self, rhs: &ProjMatrix) -> ProjMatrix {
        assert!(self.field() == rhs.field(), "{}", Error::FieldMismatch);
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &rhs.m;
        ProjMatrix::canonical([
            (a * e) + (b * g),
            (a * f) + (b * h),
            (c * e) + (d * g),
            (c * f) + (d * h),
        ])
    }

    /// A^n by square-and-multiply; A^0 is the identity.
    pub fn ppow(&self, mut n: u64) -> ProjMatrix {
        let mut result = ProjMatrix::identity(self.field());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.pmul(&base);
            }
            base = base.pmul(&base);
            n >>= 1;
        }
        result
    }

    /// Inverse of [[a,b],[c,d]] with det 1 is [[d,-b],[-c,a]].
    pub fn inverse(&self) -> ProjMatrix {
        let [a, b, c, d] = &self.m;
        ProjMatrix::canonical([*d, -b, -c, *a])
    }

    /// Smallest n ≥ 1 with A^n = identity, by iterated multiplication.
    pub fn element_order(&self) -> u64 {
        let identity = ProjMatrix::identity(self.field());
        let cap = psl2_group_order(self.field().q());
        let mut acc = self.clone();
        let mut n = 1;
        while acc != identity {
            acc = acc.pmul(self);
            n += 1;
            assert!(n <= cap, "order exceeds the group order");
        }
        n
    }

    /// Membership in the upper-triangular subgroup: m21 = 0.
    pub fn in_borel(&self) -> bool {
        self.m[2].is_zero()
    }
}

impl std::ops::Mul<&ProjMatrix> for &ProjMatrix {
    type Output = ProjMatrix;
    fn mul(self, rhs: &ProjMatrix) -> ProjMatrix {
        self.pmul(rhs)
    }
}

/// û(x) = [[1, x], [0, 1]].
pub fn gen_u(x: &FieldElement) -> ProjMatrix {
    let field = x.field();
    ProjMatrix::canonical([field.one(), *x, field.zero(), field.one()])
}

/// ĥ(y) = [[y, 0], [0, y⁻¹]]; rejects y = 0.
pub fn gen_h(y: &FieldElement) -> Result<ProjMatrix, Error> {
    let field = y.field();
    let y_inv = y.inv()?;
    Ok(ProjMatrix::canonical([
        *y,
        field.zero(),
        field.zero(),
        y_inv,
    ]))
}

/// ŝ = [[0, 1], [-1, 0]].
pub fn gen_s(field: &Field) -> ProjMatrix {
    ProjMatrix::canonical([field.zero(), field.one(), -field.one(), field.zero()])
}

/// |PSL₂(q)| = q(q²-1)/gcd(2, q-1).
pub fn psl2_group_order(q: u64) -> u64 {
    q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 }
}

/// Order of the matrix û(a)·ŝ = [[-a, 1], [-1, 0]] in SL₂(q), with no
/// projective identification. This equals the multiplicative order of a
/// root of λ² + aλ + 1 over the quadratic extension, without constructing
/// that extension.
pub fn sl2_order_of_us(a: &FieldElement) -> u64 {
    let field = a.field();
    let start = [-a, field.one(), -field.one(), field.zero()];
    let mut acc = start;
    // Order divides q+1 (irreducible case), q-1 (split case), or 2p
    // (repeated-root case).
    let cap = (field.q() + 1).max(2 * field.p());
    let mut n = 1;
    while !(acc[0].is_one() && acc[1].is_zero() && acc[2].is_zero() && acc[3].is_one()) {
        acc = [
            (acc[0] * start[0]) + (acc[1] * start[2]),
            (acc[0] * start[1]) + (acc[1] * start[3]),
            (acc[2] * start[0]) + (acc[3] * start[2]),
            (acc[2] * start[1]) + (acc[3] * start[3]),
        ];
        n += 1;
        assert!(n <= cap, "order exceeds every admissible bound");
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    fn us(field: &Field, a: u64) -> ProjMatrix {
        gen_u(&field.decode(a).unwrap()).pmul(&gen_s(field))
    }

    #[test]
    fn u_of_zero_is_identity() {
        let f = gf(29);
        assert_eq!(gen_u(&f.zero()), ProjMatrix::identity(&f));
    }

    #[test]
    fn h_is_projectively_even() {
        let f = gf(29);
        for n in 1..29 {
            let y = f.decode(n).unwrap();
            assert_eq!(gen_h(&y).unwrap(), gen_h(&-&y).unwrap());
        }
    }

    #[test]
    fn h_of_zero_rejected() {
        let f = gf(25);
        assert_eq!(gen_h(&f.zero()), Err(Error::DivisionByZero(25)));
    }

    #[test]
    fn s_squares_to_identity() {
        for q in [4u64, 29] {
            let f = gf(q);
            let s = gen_s(&f);
            assert_eq!(s.pmul(&s), ProjMatrix::identity(&f));
        }
    }

    #[test]
    fn generator_relations_hold_on_gf29() {
        let f = gf(29);
        let s = gen_s(&f);
        for xn in 0..29 {
            let x = f.decode(xn).unwrap();
            for yn in 1..29 {
                let y = f.decode(yn).unwrap();
                // h(y)·u(x) = u(x·y²)·h(y)
                let lhs = gen_h(&y).unwrap().pmul(&gen_u(&x));
                let rhs = gen_u(&(x * (y * y))).pmul(&gen_h(&y).unwrap());
                assert_eq!(lhs, rhs);
                // s·h(y) = h(y⁻¹)·s
                assert_eq!(
                    s.pmul(&gen_h(&y).unwrap()),
                    gen_h(&y.inv().unwrap()).unwrap().pmul(&s)
                );
            }
            if xn > 0 {
                // s·u(x)·s = u(-x⁻¹)·s·u(-x)·h(x)
                let lhs = s.pmul(&gen_u(&x)).pmul(&s);
                let rhs = gen_u(&-&x.inv().unwrap())
                    .pmul(&s)
                    .pmul(&gen_u(&-&x))
                    .pmul(&gen_h(&x).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn unipotent_products_add() {
        let f = gf(9);
        for n1 in 0..9 {
            for n2 in 0..9 {
                let x1 = f.decode(n1).unwrap();
                let x2 = f.decode(n2).unwrap();
                assert_eq!(gen_u(&x1).pmul(&gen_u(&x2)), gen_u(&(x1 + x2)));
            }
        }
    }

    #[test]
    fn ppow_basics() {
        let f = gf(29);
        let m = us(&f, 4);
        assert_eq!(m.ppow(0), ProjMatrix::identity(&f));
        assert_eq!(m.ppow(2), m.pmul(&m));
        assert_eq!(m.ppow(15), ProjMatrix::identity(&f));
    }

    #[test]
    fn element_orders() {
        let f29 = gf(29);
        assert_eq!(ProjMatrix::identity(&f29).element_order(), 1);
        assert_eq!(us(&f29, 4).element_order(), 15);

        let f4 = gf(4);
        let m = us(&f4, 2);
        assert_eq!(m.element_order(), 5);
        // Minimality double-check by direct powers.
        for k in 1..5 {
            assert_ne!(m.ppow(k), ProjMatrix::identity(&f4));
        }
    }

    #[test]
    fn sl2_orders_of_us() {
        let f29 = gf(29);
        assert_eq!(sl2_order_of_us(&f29.decode(4).unwrap()), 30);
        assert_eq!(sl2_order_of_us(&f29.decode(1).unwrap()), 3);
        let f4 = gf(4);
        assert_eq!(sl2_order_of_us(&f4.decode(2).unwrap()), 5);
    }

    #[test]
    fn borel_membership() {
        let f = gf(29);
        assert!(gen_u(&f.decode(5).unwrap()).in_borel());
        assert!(!gen_s(&f).in_borel());
        // u(14)·s·u(3)·h(4), worked out over GF(29).
        let g = gen_u(&f.decode(14).unwrap())
            .pmul(&gen_s(&f))
            .pmul(&gen_u(&f.decode(3).unwrap()))
            .pmul(&gen_h(&f.decode(4).unwrap()).unwrap());
        assert_eq!(g.encodings(), [2, 26, 25, 21]);
        assert!(!g.in_borel());
    }

    #[test]
    fn non_unit_determinant_rejected() {
        let f = gf(29);
        assert_eq!(
            ProjMatrix::from_encodings(&f, [1, 0, 0, 2]),
            Err(Error::DetNotOne)
        );
    }

    #[test]
    fn canonicalization_identifies_negation() {
        let f = gf(29);
        let m = ProjMatrix::from_encodings(&f, [2, 26, 25, 21]).unwrap();
        let neg = ProjMatrix::from_encodings(&f, [27, 3, 4, 8]).unwrap();
        assert_eq!(m, neg);
        // First nonzero entry carries the smaller encoding of the pair.
        assert!(m.encodings()[0] <= 29 - m.encodings()[0]);
    }

    #[test]
    fn inverse_law() {
        let f = gf(27);
        let m = us(&f, 5).pmul(&gen_u(&f.decode(7).unwrap()));
        assert_eq!(m.pmul(&m.inverse()), ProjMatrix::identity(&f));
        assert_eq!(m.inverse().pmul(&m), ProjMatrix::identity(&f));
    }

    #[test]
    fn group_order_formula() {
        assert_eq!(psl2_group_order(7), 168);
        assert_eq!(psl2_group_order(4), 60);
        assert_eq!(psl2_group_order(29), 12180);
    }
}
