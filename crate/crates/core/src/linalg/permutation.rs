use serde::{Deserialize, Serialize};

use crate::field::Field;

use super::{LinalgError, Matrix};

/// A permutation viewed as a 0/1 matrix: `image[j] = i` means entry `(i, j)`
/// is one, so column `j` carries the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PermutationMatrix {
    image: Vec<usize>,
}

impl PermutationMatrix {
    pub fn new(image: Vec<usize>) -> Result<Self, LinalgError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(LinalgError::NotAPermutation);
            }
        }
        Ok(PermutationMatrix { image })
    }

    pub fn identity(n: usize) -> Self {
        PermutationMatrix { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, j: usize) -> usize {
        self.image[j]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (j, &i) in self.image.iter().enumerate() {
            inv[i] = j;
        }
        PermutationMatrix { image: inv }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        PermutationMatrix { image: rhs.image.iter().map(|&j| self.image[j]).collect() }
    }

    pub fn to_matrix<F: Field>(&self) -> Matrix<F> {
        let n = self.image.len();
        let mut m = Matrix::zeros(n, n);
        for (j, &i) in self.image.iter().enumerate() {
            m[(i, j)] = F::one();
        }
        m
    }

    /// `P^{-1} * A`, computed by permuting rows.
    pub fn inverse_times<F: Field>(&self, a: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        self.check(a.rows())?;
        Ok(Matrix::from_fn(a.rows(), a.cols(), |j, k| a[(self.image[j], k)].clone()))
    }

    /// `A * P^{-1}`, computed by permuting columns.
    pub fn times_inverse<F: Field>(&self, a: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        self.check(a.cols())?;
        let inv = self.inverse();
        Ok(Matrix::from_fn(a.rows(), a.cols(), |i, k| a[(i, inv.image[k])].clone()))
    }

    fn check(&self, n: usize) -> Result<(), LinalgError> {
        if n != self.image.len() {
            return Err(LinalgError::DimensionMismatch {
                left: (self.image.len(), self.image.len()),
                right: (n, n),
            });
        }
        Ok(())
    }

    /// Cycle decomposition, each cycle starting at its smallest element,
    /// cycles ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_integer::lcm)
    }
}

impl TryFrom<Vec<usize>> for PermutationMatrix {
    type Error = LinalgError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<PermutationMatrix> for Vec<usize> {
    fn from(p: PermutationMatrix) -> Self {
        p.image
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RationalMatrix;

    #[test]
    fn rejects_non_bijections() {
        assert!(PermutationMatrix::new(vec![0, 0]).is_err());
        assert!(PermutationMatrix::new(vec![2, 0]).is_err());
    }

    #[test]
    fn matrix_form_and_shortcuts() {
        let p = PermutationMatrix::new(vec![2, 0, 1]).unwrap();
        let m: RationalMatrix = p.to_matrix();
        assert!(m.transpose().mul_ok(&m).is_identity());
        let a = RationalMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let pinv = m.transpose();
        assert_eq!(p.inverse_times(&a).unwrap(), pinv.mul_ok(&a));
        assert_eq!(p.times_inverse(&a).unwrap(), a.mul_ok(&pinv));
        assert_eq!(p.cycles(), vec![vec![0, 2, 1]]);
        assert_eq!(p.order(), 3);
        assert_eq!(p.compose(&p.inverse()), PermutationMatrix::identity(3));
    }
}
