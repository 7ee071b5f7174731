//! Property tests over randomly drawn field orders and inputs. These cover
//! the structural invariants (round trips, canonicalization, algebraic
//! laws); the exhaustive per-order scans live in the verify suites.

use proptest::prelude::*;

use psl2_ogs::decomp::{bn_decompose, is_canonical_y, matrix_to_ogs, ogs_compose, OgsForm};
use psl2_ogs::{gen_h, gen_s, gen_u, Field, OgsParams, ProjMatrix, SeqTables};

const QS: &[u64] = &[
    2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
];

fn field(qi: usize) -> Field {
    Field::from_order(QS[qi % QS.len()]).unwrap()
}

fn word(f: &Field, steps: &[(u8, u64)]) -> ProjMatrix {
    let mut m = ProjMatrix::identity(f);
    for &(kind, raw) in steps {
        let g = match kind % 3 {
            0 => gen_u(&f.decode(raw % f.q()).unwrap()),
            1 => gen_h(&f.decode(1 + raw % (f.q() - 1)).unwrap()).unwrap(),
            _ => gen_s(f),
        };
        m = m.pmul(&g);
    }
    m
}

proptest! {
    #[test]
    fn encode_decode_round_trip(qi in 0usize..18, n in any::<u64>()) {
        let f = field(qi);
        let n = n % f.q();
        prop_assert_eq!(f.decode(n).unwrap().encode(), n);
    }

    #[test]
    fn field_axioms_on_random_triples(qi in 0usize..18, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(qi);
        let u = f.decode(a % f.q()).unwrap();
        let v = f.decode(b % f.q()).unwrap();
        let w = f.decode(c % f.q()).unwrap();
        prop_assert_eq!((u + v) + w, u + (v + w));
        prop_assert_eq!((u * v) * w, u * (v * w));
        prop_assert_eq!(u * v, v * u);
        prop_assert_eq!(u * (v + w), (u * v) + (u * w));
        prop_assert!((u + (-&u)).is_zero());
        if !u.is_zero() {
            prop_assert!((u * u.inv().unwrap()).is_one());
            prop_assert_eq!(u.inv().unwrap(), u.pow(f.q() - 2));
        }
    }

    #[test]
    fn canonical_form_is_stable_and_projective(qi in 0usize..18, steps in prop::collection::vec((any::<u8>(), any::<u64>()), 1..8)) {
        let f = field(qi);
        let m = word(&f, &steps);
        // Idempotent under rebuilding, constant on {M, -M}.
        let rebuilt = ProjMatrix::from_encodings(&f, m.encodings()).unwrap();
        prop_assert_eq!(&rebuilt, &m);
        let negated = ProjMatrix::new(-m.m11(), -m.m12(), -m.m21(), -m.m22()).unwrap();
        prop_assert_eq!(&negated, &m);
    }

    #[test]
    fn products_associate(qi in 0usize..18,
                          s1 in prop::collection::vec((any::<u8>(), any::<u64>()), 1..5),
                          s2 in prop::collection::vec((any::<u8>(), any::<u64>()), 1..5),
                          s3 in prop::collection::vec((any::<u8>(), any::<u64>()), 1..5)) {
        let f = field(qi);
        let (a, b, c) = (word(&f, &s1), word(&f, &s2), word(&f, &s3));
        prop_assert_eq!(a.pmul(&b).pmul(&c), a.pmul(&b.pmul(&c)));
        prop_assert_eq!(a.pmul(&a.inverse()), ProjMatrix::identity(&f));
    }

    #[test]
    fn decomposition_round_trips_any_word(qi in 0usize..18, steps in prop::collection::vec((any::<u8>(), any::<u64>()), 1..10)) {
        let f = field(qi);
        let m = word(&f, &steps);
        prop_assert_eq!(bn_decompose(&m).realize(), m.clone());
        let tables = SeqTables::build(OgsParams::select(&f).unwrap()).unwrap();
        let form = matrix_to_ogs(&tables, &m).unwrap();
        prop_assert!(is_canonical_y(form.y()));
        prop_assert_eq!(ogs_compose(&tables, &form).unwrap(), m);
    }

    #[test]
    fn trailing_pair_is_insensitive_to_y_sign(qi in 0usize..18, k_raw in any::<u64>(), ell_raw in any::<u8>(), x_raw in any::<u64>(), y_raw in any::<u64>()) {
        let f = field(qi);
        let tables = SeqTables::build(OgsParams::select(&f).unwrap()).unwrap();
        let k = k_raw % tables.t();
        let ell = if f.char_two() { 0 } else { ell_raw % 2 };
        let x = f.decode(x_raw % f.q()).unwrap();
        let y = f.decode(1 + y_raw % (f.q() - 1)).unwrap();
        let plus = OgsForm::new(&tables, k, ell, x, y).unwrap();
        let minus = OgsForm::new(&tables, k, ell, x, -&y).unwrap();
        // h(y) = h(-y) projectively, so both forms are the same element and
        // the same canonical tuple, with x untouched.
        prop_assert_eq!(&plus, &minus);
        prop_assert_eq!(
            ogs_compose(&tables, &plus).unwrap(),
            ogs_compose(&tables, &minus).unwrap()
        );
    }
}
