use serde::{Deserialize, Serialize};

use crate::error::{FdError, Result};

/// An ordered list of distinct, finite real abscissae.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Grid {
    points: Vec<f64>,
}

impl Grid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(FdError::arg("grid must contain at least one point"));
        }
        if let Some((index, &value)) = points.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(FdError::NonFinite { index, value });
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].total_cmp(&points[b]).then(a.cmp(&b)));
        for pair in order.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            // -0.0 and 0.0 are the same abscissa
            if points[a] == points[b] {
                return Err(FdError::DuplicateGridPoint {
                    first: a.min(b),
                    second: a.max(b),
                    value: points[a],
                });
            }
        }
        Ok(Grid { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn into_points(self) -> Vec<f64> {
        self.points
    }

    /// Grid with every point translated by `-center`.
    pub fn shifted(&self, center: f64) -> Result<Grid> {
        Grid::new(self.points.iter().map(|z| z - center).collect())
    }

    /// Grid with every point multiplied by `factor`.
    pub fn dilated(&self, factor: f64) -> Result<Grid> {
        if factor == 0.0 || !factor.is_finite() {
            return Err(FdError::arg(format!(
                "dilation factor must be finite and nonzero, got {factor}"
            )));
        }
        Grid::new(self.points.iter().map(|z| z * factor).collect())
    }

    /// Reorders points so that position `i` holds the old point `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Grid> {
        check_permutation(perm, self.len())?;
        Ok(Grid {
            points: perm.iter().map(|&i| self.points[i]).collect(),
        })
    }
}

impl<'de> Deserialize<'de> for Grid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<f64>::deserialize(d)?;
        Grid::new(points).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<f64>> for Grid {
    type Error = FdError;

    fn try_from(points: Vec<f64>) -> Result<Self> {
        Grid::new(points)
    }
}

impl TryFrom<&[f64]> for Grid {
    type Error = FdError;

    fn try_from(points: &[f64]) -> Result<Self> {
        Grid::new(points.to_vec())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(FdError::arg(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &i in perm {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(FdError::arg(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_naming_the_pair() {
        let err = Grid::new(vec![0.5, 1.0, -2.0, 1.0]).unwrap_err();
        assert_eq!(
            err,
            FdError::DuplicateGridPoint {
                first: 1,
                second: 3,
                value: 1.0
            }
        );
        assert!(matches!(
            Grid::new(vec![0.0, -0.0]),
            Err(FdError::DuplicateGridPoint { .. })
        ));
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(matches!(Grid::new(vec![]), Err(FdError::Argument(_))));
        assert!(matches!(
            Grid::new(vec![1.0, f64::NAN]),
            Err(FdError::NonFinite { index: 1, .. })
        ));
    }

    #[test]
    fn permute_and_shift() {
        let g = Grid::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(g.permuted(&[2, 0, 1]).unwrap().points(), &[3.0, 1.0, 2.0]);
        assert_eq!(g.shifted(2.0).unwrap().points(), &[-1.0, 0.0, 1.0]);
        assert!(g.permuted(&[0, 0, 1]).is_err());
        assert!(g.dilated(0.0).is_err());
    }

    #[test]
    fn deserializes_with_validation() {
        let g: Grid = serde_json::from_str("[-1, 0, 1]").unwrap();
        assert_eq!(g.len(), 3);
        assert!(serde_json::from_str::<Grid>("[1, 1]").is_err());
    }
}
