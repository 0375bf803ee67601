//! Property tests for the algebraic invariants that hold on all inputs:
//! multiplicativity of square classes, Hilbert symbol laws, span membership
//! in class spaces, and field axioms in nested towers.

use proptest::prelude::*;

use quadtower::exactfield::rational::{rat_int, Rational};
use quadtower::funcfield::{self, ConstantField};
use quadtower::sqclass::{SquareClassSpace, SquareClassVector};
use quadtower::symbols::{hilbert_symbol, relevant_places};
use quadtower::tower::{QuadTower, TowerElem};

fn nonzero_coeff() -> impl Strategy<Value = i64> {
    prop_oneof![(-9i64..=-1), (1i64..=9)]
}

fn small_poly() -> impl Strategy<Value = (i64, i64, i64)> {
    (nonzero_coeff(), -9i64..=9, -9i64..=9)
}

fn poly_from(
    field: &quadtower::exactfield::MultiquadField,
    (a, b, c): (i64, i64, i64),
) -> funcfield::Poly {
    let coeffs = vec![
        field.from_rational(rat_int(c)),
        field.from_rational(rat_int(b)),
        field.from_rational(rat_int(a)),
    ];
    funcfield::Poly::new(field, coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn square_class_is_multiplicative((p, q) in (small_poly(), small_poly())) {
        let field = ConstantField::rationals();
        let f = poly_from(field.inner(), p);
        let g = poly_from(field.inner(), q);
        let lhs = funcfield::square_class_of_poly(&f.mul(&g)).unwrap();
        let rhs = funcfield::square_class_of_poly(&f)
            .unwrap()
            .add(&funcfield::square_class_of_poly(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squares_have_trivial_class(p in small_poly()) {
        let field = ConstantField::rationals();
        let f = poly_from(field.inner(), p);
        let class = funcfield::square_class_of_poly(&f.mul(&f)).unwrap();
        prop_assert!(class.support().next().is_none());
    }

    #[test]
    fn hilbert_symbol_laws(
        a in prop_oneof![(-30i64..=-1), (1i64..=30)],
        b in prop_oneof![(-30i64..=-1), (1i64..=30)],
    ) {
        let (ra, rb) = (rat_int(a), rat_int(b));
        let mut product = 1;
        for v in relevant_places(&ra, &rb).unwrap() {
            let s = hilbert_symbol(&ra, &rb, v).unwrap();
            // symmetry
            prop_assert_eq!(s, hilbert_symbol(&rb, &ra, v).unwrap());
            product *= s;
        }
        // global product formula
        prop_assert_eq!(product, 1);
        // (a, -a) is always split
        for v in relevant_places(&ra, &rat_int(-a)).unwrap() {
            prop_assert_eq!(hilbert_symbol(&ra, &rat_int(-a), v).unwrap(), 1);
        }
    }

    #[test]
    fn class_space_membership(labels in proptest::collection::vec("[a-f]{1,2}", 1..6)) {
        // every inserted vector and every pairwise sum is a member
        let vectors: Vec<SquareClassVector> = labels
            .iter()
            .map(|l| SquareClassVector::from_labels([l.as_str()]))
            .collect();
        let mut space = SquareClassSpace::new();
        for v in &vectors {
            space = space.insert_and_test_independent(v).0;
        }
        for v in &vectors {
            prop_assert!(space.membership(v));
            for w in &vectors {
                prop_assert!(space.membership(&v.add(w)));
            }
        }
    }

    #[test]
    fn tower_field_axioms(
        u in -5i64..=5, v in -5i64..=5, s in -5i64..=5, t in -5i64..=5,
    ) {
        // arithmetic in Q(sqrt 2)(sqrt 3) satisfies x * y / y = x
        let tower = QuadTower::rationals()
            .extend(&TowerElem::int(2))
            .unwrap()
            .extend(&TowerElem::int(3).lift())
            .unwrap();
        let mk = |p: i64, q: i64| -> TowerElem {
            let lo = TowerElem::rat(Rational::from_integer(p.into())).lift();
            tower
                .mul(&TowerElem::rat(Rational::from_integer(q.into())).lift_to(2),
                     &tower.root(1).unwrap())
                .and_then(|hi| lo.lift().add(&hi))
                .unwrap()
        };
        let x = mk(u, v);
        let y = mk(s, t);
        if !y.is_zero() {
            let prod = tower.mul(&x, &y).unwrap();
            prop_assert_eq!(tower.div(&prod, &y).unwrap(), x.clone());
        }
        // squares are recognized
        let sq = tower.mul(&x, &x).unwrap();
        if !sq.is_zero() {
            prop_assert!(tower.is_square(&sq).unwrap());
        }
    }
}
