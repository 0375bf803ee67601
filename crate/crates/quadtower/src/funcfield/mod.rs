//! Square classes of rational function fields k(t) over small number-field
//! constants, computed through exact factorization.

pub mod poly;

use num::{BigInt, Integer, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::multiquad::{MultiquadElement, MultiquadField};
use crate::exactfield::rational::{rat_int, squarefree_part, Rational};
use crate::sqclass::{Intersection, SquareClassSpace, SquareClassVector};

pub use poly::{factor_poly, parse_poly, Poly};

/// The constant field k of k(t): Q, Q(i), or a real quadratic Q(sqrt m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantField {
    field: MultiquadField,
}

impl ConstantField {
    pub fn rationals() -> ConstantField {
        ConstantField {
            field: MultiquadField::rationals(),
        }
    }

    pub fn gaussian() -> ConstantField {
        ConstantField {
            field: MultiquadField::new(&[-1]).expect("Q(i)"),
        }
    }

    pub fn quadratic(m: i64) -> Result<ConstantField> {
        Ok(ConstantField {
            field: MultiquadField::new(&[m])?,
        })
    }

    pub fn inner(&self) -> &MultiquadField {
        &self.field
    }
}

/// A nonzero rational function given by a constant and the monic irreducible
/// factors of its numerator/denominator with integer exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRatFunc {
    constant: MultiquadElement,
    factors: Vec<(Poly, i64)>,
}

impl FactoredRatFunc {
    pub fn constant(&self) -> &MultiquadElement {
        &self.constant
    }

    pub fn factors(&self) -> &[(Poly, i64)] {
        &self.factors
    }

    /// Multiply two factored functions, merging factor lists.
    pub fn mul(&self, other: &FactoredRatFunc) -> Result<FactoredRatFunc> {
        let constant = self.constant.mul(&other.constant)?;
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            match factors.iter_mut().find(|(q, _)| q == p) {
                Some((_, f)) => *f += e,
                None => factors.push((p.clone(), *e)),
            }
        }
        factors.retain(|(_, e)| *e != 0);
        factors.sort_by_key(|(p, _)| (p.degree(), p.text()));
        Ok(FactoredRatFunc { constant, factors })
    }

    /// Expand back into a polynomial (requires nonnegative exponents).
    pub fn expand(&self) -> Result<Poly> {
        let field = self.constant.field().clone();
        let mut acc = Poly::constant(&field, self.constant.clone());
        for (p, e) in &self.factors {
            if *e < 0 {
                return Err(Error::pre("negative exponent in expand"));
            }
            for _ in 0..*e {
                acc = acc.mul(p);
            }
        }
        Ok(acc)
    }
}

/// Complete factorization of a nonzero polynomial of degree <= 4 over the
/// constant field.
pub fn factor(f: &Poly) -> Result<FactoredRatFunc> {
    let (constant, factors) = factor_poly(f)?;
    Ok(FactoredRatFunc { constant, factors })
}

/// Square-class labels for a constant. Rational constants decompose into
/// independent generators (the sign and each odd-multiplicity prime) so that
/// classes add under multiplication; irrational constants get a single
/// primitive-representative label (exact up to rational squares).
fn constant_labels(c: &MultiquadElement) -> Result<Vec<String>> {
    if c.is_square()? {
        return Ok(Vec::new());
    }
    if let Some(r) = c.as_rational() {
        let sf = squarefree_part(r)?;
        let mut labels = Vec::new();
        if sf.sign() == num::bigint::Sign::Minus {
            labels.push("const:-1".to_owned());
        }
        for (p, _) in crate::exactfield::rational::factor_int(&sf) {
            labels.push(format!("const:{p}"));
        }
        return Ok(labels);
    }
    // primitive representative: strip rational square content
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for coord in c.coords() {
        denom_lcm = denom_lcm.lcm(coord.denom());
        numer_gcd = numer_gcd.gcd(coord.numer());
    }
    let content = Rational::new(numer_gcd, denom_lcm);
    let sf = squarefree_part(&content)?;
    let scaled = c.scale(&(Rational::from_integer(sf) / content));
    Ok(vec![format!("const:{}", scaled.text())])
}

/// The square class of a factored rational function in k(t)*/k(t)*^2:
/// odd-exponent irreducibles plus a constant label when the constant is a
/// nonsquare of k.
pub fn square_class_of(f: &FactoredRatFunc) -> Result<SquareClassVector> {
    let mut labels: Vec<String> = f
        .factors
        .iter()
        .filter(|(_, e)| e.rem_euclid(2) == 1)
        .map(|(p, _)| format!("irr:{}", p.text()))
        .collect();
    labels.extend(constant_labels(&f.constant)?);
    Ok(SquareClassVector::from_labels(labels))
}

/// Factor a polynomial and take its square class in one step.
pub fn square_class_of_poly(f: &Poly) -> Result<SquareClassVector> {
    square_class_of(&factor(f)?)
}

/// Outcome of the sampled trivial-intersection check over Q(i)(t).
#[derive(Debug, Clone, Serialize)]
pub struct SampleIntersectionOutcome {
    /// true when the two spans meet only in the identity class
    pub trivial: bool,
    /// a nonzero common class, when one exists
    pub witness: Option<SquareClassVector>,
    /// generators of the sampled span, keyed by source polynomial text
    pub sampled_generators: Vec<(String, SquareClassVector)>,
}

/// Check that the span of [t - i], [t + 2i] meets the span of the classes of
/// t + r (r rational) and t^2 + b t + c (b^2 - 4c < 0) only trivially, at
/// the given sample set.
pub fn sampled_intersection_check(
    samples_r: &[Rational],
    samples_bc: &[(Rational, Rational)],
) -> Result<SampleIntersectionOutcome> {
    let k = ConstantField::gaussian();
    let field = k.inner();

    let mut fixed = SquareClassSpace::new();
    let mut sampled = SquareClassSpace::new();
    let mut sampled_generators = Vec::new();

    for text in ["t-i", "t+2*i"] {
        let cls = square_class_of_poly(&parse_poly(field, text)?)?;
        fixed = fixed.insert_and_test_independent(&cls).0;
    }

    for r in samples_r {
        let p = Poly::new(
            field,
            vec![field.from_rational(r.clone()), field.one()],
        );
        let cls = square_class_of_poly(&p)?;
        sampled = sampled.insert_and_test_independent(&cls).0;
        sampled_generators.push((p.text(), cls));
    }
    for (b, c) in samples_bc {
        let four = rat_int(4);
        if b * b - four * c >= Rational::zero() {
            return Err(Error::pre(format!(
                "sample (b, c) = ({b}, {c}) violates b^2 - 4c < 0"
            )));
        }
        let p = Poly::new(
            field,
            vec![
                field.from_rational(c.clone()),
                field.from_rational(b.clone()),
                field.one(),
            ],
        );
        let cls = square_class_of_poly(&p)?;
        sampled = sampled.insert_and_test_independent(&cls).0;
        sampled_generators.push((p.text(), cls));
    }

    let (trivial, witness) = match fixed.intersection_trivial(&sampled) {
        Intersection::Trivial => (true, None),
        Intersection::Witness(w) => (false, Some(w)),
    };
    Ok(SampleIntersectionOutcome {
        trivial,
        witness,
        sampled_generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::rat;

    fn gaussian() -> MultiquadField {
        ConstantField::gaussian().inner().clone()
    }

    #[test]
    fn even_exponent_drops() {
        let gi = gaussian();
        // (t - i)^2 (t + 2i)
        let ti = parse_poly(&gi, "t-i").unwrap();
        let t2i = parse_poly(&gi, "t+2*i").unwrap();
        let f = factor(&ti.mul(&ti).mul(&t2i)).unwrap();
        let cls = square_class_of(&f).unwrap();
        assert_eq!(cls, SquareClassVector::single("irr:t+2*i"));
    }

    #[test]
    fn hidden_factor_cancels() {
        let gi = gaussian();
        // (t + 2i)(t - i)(t^2 + 1): the t^2 + 1 splits as (t - i)(t + i),
        // making the t - i exponent even
        let f = parse_poly(&gi, "t+2*i")
            .unwrap()
            .mul(&parse_poly(&gi, "t-i").unwrap())
            .mul(&parse_poly(&gi, "t^2+1").unwrap());
        let cls = square_class_of_poly(&f).unwrap();
        assert_eq!(
            cls,
            SquareClassVector::from_labels(["irr:t+2*i", "irr:t+i"])
        );
    }

    #[test]
    fn square_constant_drops_odd_exponent_stays() {
        let q = ConstantField::rationals();
        // 4 (t - 1)^3 over Q
        let t1 = parse_poly(q.inner(), "t-1").unwrap();
        let f = t1
            .mul(&t1)
            .mul(&t1)
            .scale(&q.inner().from_rational(rat_int(4)));
        let cls = square_class_of_poly(&f).unwrap();
        assert_eq!(cls, SquareClassVector::single("irr:t-1"));
    }

    #[test]
    fn nonsquare_constant_labeled() {
        let q = ConstantField::rationals();
        let f = parse_poly(q.inner(), "-12*t").unwrap();
        let cls = square_class_of_poly(&f).unwrap();
        assert_eq!(
            cls,
            SquareClassVector::from_labels(["irr:t", "const:-1", "const:3"])
        );
    }

    #[test]
    fn sampled_intersection_passes() {
        let rs = vec![rat_int(0), rat_int(1), rat_int(-2)];
        let bcs = vec![
            (rat_int(0), rat_int(1)),
            (rat_int(2), rat_int(2)),
            (rat_int(-2), rat_int(5)),
        ];
        let out = sampled_intersection_check(&rs, &bcs).unwrap();
        assert!(out.trivial);
        assert!(out.witness.is_none());
        assert_eq!(out.sampled_generators.len(), 6);
    }

    #[test]
    fn empty_samples_vacuous() {
        let out = sampled_intersection_check(&[], &[]).unwrap();
        assert!(out.trivial);
    }

    #[test]
    fn rejects_bad_discriminant() {
        assert!(sampled_intersection_check(&[], &[(rat_int(2), rat_int(1))]).is_err());
    }

    #[test]
    fn adversarial_injection_still_trivial() {
        // inject t^2 + 1 = (t - i)(t + i) into the sampled span and confirm
        // [t - i] alone is still not a member: the t + i parity blocks it
        let gi = gaussian();
        let injected = square_class_of_poly(&parse_poly(&gi, "t^2+1").unwrap()).unwrap();
        let space = SquareClassSpace::new()
            .insert_and_test_independent(&injected)
            .0;
        let t_minus_i = square_class_of_poly(&parse_poly(&gi, "t-i").unwrap()).unwrap();
        assert!(!space.membership(&t_minus_i));

        let out = sampled_intersection_check(&[rat_int(0)], &[(rat_int(0), rat_int(1))]).unwrap();
        assert!(out.trivial);
    }

    #[test]
    fn conjugation_symmetric_support() {
        // real-parameter generators over Q(i) have supports stable under
        // i -> -i
        let rs = vec![rat_int(0), rat(1, 2), rat_int(-3)];
        let bcs = vec![(rat_int(0), rat_int(1)), (rat_int(1), rat_int(1))];
        let out = sampled_intersection_check(&rs, &bcs).unwrap();
        let gi = gaussian();
        for (_, cls) in &out.sampled_generators {
            let conjugated: Vec<String> = cls
                .support()
                .map(|l| match l.strip_prefix("irr:") {
                    Some(p) => {
                        let poly = parse_poly(&gi, p).unwrap();
                        format!("irr:{}", poly.conj().text())
                    }
                    None => l.to_owned(),
                })
                .collect();
            assert_eq!(
                SquareClassVector::from_labels(conjugated.clone()),
                cls.clone(),
                "support not conjugation symmetric: {conjugated:?}"
            );
        }
    }

    #[test]
    fn class_is_multiplicative() {
        let gi = gaussian();
        let polys = [
            parse_poly(&gi, "t-i").unwrap(),
            parse_poly(&gi, "t+2*i").unwrap(),
            parse_poly(&gi, "t^2+1").unwrap(),
            parse_poly(&gi, "t^2+t+1").unwrap(),
            parse_poly(&gi, "2*t+3").unwrap(),
        ];
        for a in &polys {
            for b in &polys {
                if a.degree() + b.degree() > 4 {
                    continue;
                }
                let lhs = square_class_of_poly(&a.mul(b)).unwrap();
                let rhs = square_class_of_poly(a)
                    .unwrap()
                    .add(&square_class_of_poly(b).unwrap());
                assert_eq!(lhs, rhs, "{} * {}", a.text(), b.text());
            }
        }
    }
}
