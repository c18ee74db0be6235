//! The ambient algebras: monomial quotients of k[x,y].
//!
//! An algebra is described by x^m = 0, y^q = 0 plus an optional set of extra
//! killed monomials; the surviving monomials form the basis. Two named
//! families matter here: Λ_n = k[x,y]/(x², y^{n+2}) and its socle quotient
//! A_n = Λ_n / (x·y^{n+1}).

use std::sync::Arc;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::Module;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    Lambda,
    An,
    Custom,
}

/// A monomial quotient of k[x,y] with a fixed ordered monomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialAlgebra {
    pub kind: AlgebraKind,
    /// x^{x_bound} = 0
    pub x_bound: u32,
    /// y^{y_bound} = 0
    pub y_bound: u32,
    /// extra killed monomials (a, b) meaning x^a y^b = 0
    pub extra_killed: Vec<(u32, u32)>,
    /// surviving monomials, graded-lex order with the x-degree dominant
    pub basis: Vec<(u32, u32)>,
    /// family parameter when the algebra is Λ_n or A_n
    pub n: Option<u32>,
}

impl MonomialAlgebra {
    pub fn new(
        kind: AlgebraKind,
        x_bound: u32,
        y_bound: u32,
        extra_killed: Vec<(u32, u32)>,
        n: Option<u32>,
    ) -> Arc<Self> {
        assert!(x_bound >= 1 && y_bound >= 1);
        let killed = |a: u32, b: u32| -> bool {
            a >= x_bound || b >= y_bound || extra_killed.iter().any(|&(ka, kb)| a >= ka && b >= kb)
        };
        let mut basis: Vec<(u32, u32)> = (0..x_bound)
            .flat_map(|a| (0..y_bound).map(move |b| (a, b)))
            .filter(|&(a, b)| !killed(a, b))
            .collect();
        basis.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
        Arc::new(MonomialAlgebra {
            kind,
            x_bound,
            y_bound,
            extra_killed,
            basis,
            n,
        })
    }

    /// Λ_n = k[x,y]/(x², y^{n+2}); dimension 2(n+2).
    pub fn lambda(n: u32) -> Arc<Self> {
        Self::new(AlgebraKind::Lambda, 2, n + 2, vec![], Some(n))
    }

    /// A_n = Λ_n / soc = k[x,y]/(x², y^{n+2}, x·y^{n+1}); dimension 2n+3.
    pub fn an(n: u32) -> Arc<Self> {
        Self::new(AlgebraKind::An, 2, n + 2, vec![(1, n + 1)], Some(n))
    }

    /// k[y]/(y^m) presented as k[x,y]/(x, y^m): the uniserial algebra whose
    /// indecomposables are the chains of length 1..m.
    pub fn uniserial(m: u32) -> Arc<Self> {
        assert!(m >= 1);
        Self::new(AlgebraKind::Custom, 1, m, vec![], None)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Is the monomial x^a y^b nonzero in the algebra?
    pub fn survives(&self, a: u32, b: u32) -> bool {
        a < self.x_bound
            && b < self.y_bound
            && !self.extra_killed.iter().any(|&(ka, kb)| a >= ka && b >= kb)
    }

    pub fn basis_index(&self, m: (u32, u32)) -> Option<usize> {
        self.basis.iter().position(|&b| b == m)
    }

    /// Human-readable relation list, used in error messages.
    pub fn relations(&self) -> Vec<String> {
        let mut rels = vec![
            format!("x^{}", self.x_bound),
            format!("y^{}", self.y_bound),
            "xy - yx".to_string(),
        ];
        for &(a, b) in &self.extra_killed {
            rels.push(format!("x^{a} y^{b}"));
        }
        rels
    }
}

/// The regular module: dim(alg) with x and y acting as the multiplication
/// operators in the monomial basis.
pub fn regular_module<K: Field>(alg: &Arc<MonomialAlgebra>, field: K) -> Module<K> {
    let d = alg.dim();
    let mut x = Matrix::zero(field.clone(), d, d);
    let mut y = Matrix::zero(field.clone(), d, d);
    for (col, &(a, b)) in alg.basis.iter().enumerate() {
        if alg.survives(a + 1, b) {
            let row = alg.basis_index((a + 1, b)).unwrap();
            x.set(row, col, field.one());
        }
        if alg.survives(a, b + 1) {
            let row = alg.basis_index((a, b + 1)).unwrap();
            y.set(row, col, field.one());
        }
    }
    Module::new(Arc::clone(alg), x, y).expect("regular module satisfies the relations")
}

/// Check that a pair of action matrices satisfies every defining relation of
/// the algebra; reports the failing monomial.
pub fn check_relations<K: Field>(
    alg: &MonomialAlgebra,
    x: &Matrix<K>,
    y: &Matrix<K>,
) -> Result<(), Error> {
    let xy = x.mul(y);
    let yx = y.mul(x);
    if xy != yx {
        return Err(Error::RelationViolation {
            relation: "xy - yx".to_string(),
        });
    }
    if !x.pow(alg.x_bound).is_zero() {
        return Err(Error::RelationViolation {
            relation: format!("x^{}", alg.x_bound),
        });
    }
    if !y.pow(alg.y_bound).is_zero() {
        return Err(Error::RelationViolation {
            relation: format!("y^{}", alg.y_bound),
        });
    }
    for &(a, b) in &alg.extra_killed {
        if !x.pow(a).mul(&y.pow(b)).is_zero() {
            return Err(Error::RelationViolation {
                relation: format!("x^{a} y^{b}"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn lambda_dimensions() {
        assert_eq!(MonomialAlgebra::lambda(0).dim(), 4);
        assert_eq!(MonomialAlgebra::lambda(1).dim(), 6);
        assert_eq!(MonomialAlgebra::lambda(3).dim(), 10);
        for n in 0..=6 {
            assert_eq!(MonomialAlgebra::lambda(n).dim() as u32, 2 * (n + 2));
        }
    }

    #[test]
    fn an_dimensions_and_basis() {
        let a0 = MonomialAlgebra::an(0);
        assert_eq!(a0.basis, vec![(0, 0), (1, 0), (0, 1)]);
        assert_eq!(a0.dim(), 3);
        assert_eq!(MonomialAlgebra::an(2).dim(), 7);
        for n in 0..=6 {
            assert_eq!(MonomialAlgebra::an(n).dim() as u32, 2 * n + 3);
        }
        // x·y = 0 in A_0: the monomial (1,1) is killed
        assert!(!a0.survives(1, 1));
    }

    #[test]
    fn lambda_basis_order() {
        let l0 = MonomialAlgebra::lambda(0);
        assert_eq!(l0.basis, vec![(0, 0), (1, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn regular_module_an0() {
        // hand computation: basis 1, x, y; x·1 = x, y·1 = y, all other products 0
        let a0 = MonomialAlgebra::an(0);
        let m = regular_module(&a0, Rationals);
        assert_eq!(m.dim(), 3);
        let x_expected = Matrix::from_i64(Rationals, &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
        let y_expected = Matrix::from_i64(Rationals, &[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]);
        assert_eq!(m.x, x_expected);
        assert_eq!(m.y, y_expected);
        assert_eq!(m.x.rank(), 1);
        assert_eq!(m.y.rank(), 1);
    }

    #[test]
    fn regular_module_lambda0() {
        let l0 = MonomialAlgebra::lambda(0);
        let m = regular_module(&l0, Rationals);
        assert_eq!(m.dim(), 4);
        // xy acts with rank 1: it sends 1 to xy and kills the rest
        assert_eq!(m.x.mul(&m.y).rank(), 1);
    }

    #[test]
    fn identity_monomial_acts_as_identity() {
        for alg in [MonomialAlgebra::an(2), MonomialAlgebra::lambda(1)] {
            let m = regular_module(&alg, Rationals);
            // x^0 y^0 = identity
            assert_eq!(m.x.pow(0), Matrix::identity(Rationals, m.dim()));
        }
    }
}
