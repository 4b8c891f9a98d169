use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::FVector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DehnSommerville {
    /// `2 f_1 - 3 f_2 + 4 f_3 - 5 f_4 = 0`
    pub ds1: bool,
    /// `2 f_3 = 5 f_4`
    pub ds2: bool,
    pub chi: i64,
}

/// Dehn-Sommerville relations for a 4-dimensional f-vector.
pub fn check_dehn_sommerville(f: &FVector) -> Result<DehnSommerville> {
    let v = &f.0;
    if v.len() != 5 {
        return Err(Error::FVectorLength { expected: 5, found: v.len() });
    }
    let g: Vec<i64> = v.iter().map(|&x| x as i64).collect();
    Ok(DehnSommerville {
        ds1: 2 * g[1] - 3 * g[2] + 4 * g[3] - 5 * g[4] == 0,
        ds2: 2 * g[3] == 5 * g[4],
        chi: f.euler_characteristic(),
    })
}

/// Both sides of the lower and upper bound inequalities for centrally
/// symmetric combinatorial manifolds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEquality {
    /// `(-1)^k C(2k+1, k+1) (chi - 2)`
    pub lbt_lhs: BigRational,
    /// `4^(k+1) C((d-1)/2, k+1)`
    pub lbt_rhs: BigRational,
    /// `10 (chi - 2)`
    pub ubt_lhs: BigRational,
    /// `(4/3)(m-1)(m-3)(m-5)`
    pub ubt_rhs: BigRational,
}

impl BoundEquality {
    pub fn lbt_equal(&self) -> bool {
        self.lbt_lhs == self.lbt_rhs
    }

    pub fn ubt_equal(&self) -> bool {
        self.ubt_lhs == self.ubt_rhs
    }
}

/// Generalized binomial `C(x, k)` as a falling factorial over `k!`.
pub fn rational_binomial(x: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= x - BigRational::from_integer(BigInt::from(i));
        acc /= BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Evaluates both bounds for a combinatorial `2k`-manifold with Euler
/// characteristic `chi` spanning a `d`-polytope, and for `2m` vertices in the
/// 4-dimensional upper bound.
pub fn check_bound_equality(chi: i64, k: u32, d: u32, m: i64) -> BoundEquality {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let central = rational_binomial(&int(2 * k as i64 + 1), k + 1);
    let lbt_lhs = int(sign) * central * int(chi - 2);
    let half = BigRational::new(BigInt::from(d as i64 - 1), BigInt::from(2));
    let lbt_rhs = int(4i64.pow(k + 1)) * rational_binomial(&half, k + 1);

    let ubt_lhs = int(10 * (chi - 2));
    let ubt_rhs = BigRational::new(BigInt::from(4), BigInt::from(3)) * int((m - 1) * (m - 3) * (m - 5));
    debug_assert!({
        let alt = int(64) * rational_binomial(&BigRational::new(BigInt::from(m - 1), BigInt::from(2)), 3);
        alt == ubt_rhs || ubt_rhs.is_zero() && alt.is_zero()
    });
    BoundEquality { lbt_lhs, lbt_rhs, ubt_lhs, ubt_rhs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dehn_sommerville_cases() {
        let r = check_dehn_sommerville(&FVector(vec![12, 60, 160, 180, 72])).unwrap();
        assert_eq!(r, DehnSommerville { ds1: true, ds2: true, chi: 4 });
        let r = check_dehn_sommerville(&FVector(vec![12, 66, 204, 240, 96])).unwrap();
        assert_eq!(r, DehnSommerville { ds1: true, ds2: true, chi: 6 });
        let r = check_dehn_sommerville(&FVector(vec![12, 60, 161, 180, 72])).unwrap();
        assert!(!r.ds1);
        assert!(check_dehn_sommerville(&FVector(vec![1, 2, 3])).is_err());
    }

    #[test]
    fn half_integer_binomial() {
        // C(5/2, 3) = (5/2)(3/2)(1/2)/6 = 5/16
        let x = BigRational::new(BigInt::from(5), BigInt::from(2));
        assert_eq!(rational_binomial(&x, 3), BigRational::new(BigInt::from(5), BigInt::from(16)));
    }

    #[test]
    fn equality_instances() {
        let b = check_bound_equality(4, 2, 6, 6);
        assert_eq!(b.lbt_lhs, int(20));
        assert_eq!(b.lbt_rhs, int(20));
        assert_eq!(b.ubt_lhs, int(20));
        assert_eq!(b.ubt_rhs, int(20));
        let sphere = check_bound_equality(2, 2, 6, 6);
        assert!(sphere.lbt_lhs.is_zero() && sphere.ubt_lhs.is_zero());
    }
}
