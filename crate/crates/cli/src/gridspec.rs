//! Grid sources accepted on the command line.

use std::path::Path;

use fdkit::spectral::{chebyshev_grid, BuildOptions};
use fdkit::{Grid, Ordering};

use crate::CliError;

/// A parsed `--grid` argument plus the computation options it implies.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub grid: Grid,
    pub options: BuildOptions,
}

impl GridSpec {
    /// `chebyshev:N`, an existing file (JSON array or one number per line),
    /// or an inline comma list whose entries may be rationals like `-2/3`.
    ///
    /// Chebyshev grids default to bit-reversed (or Leja) ordering with
    /// dilation by 2; everything else is computed in the given order.
    pub fn parse(source: &str, ordering: Option<Ordering>) -> Result<Self, CliError> {
        let source = source.trim();
        let (grid, mut options) = if let Some(n) = source.strip_prefix("chebyshev:") {
            let n: usize = n
                .trim()
                .parse()
                .map_err(|e| CliError::Parse(format!("bad Chebyshev size '{n}': {e}")))?;
            (
                chebyshev_grid(n, Ordering::Natural)?,
                BuildOptions::chebyshev(n),
            )
        } else if Path::new(source).is_file() {
            let text = std::fs::read_to_string(source)?;
            (Grid::new(parse_file(&text)?)?, BuildOptions::default())
        } else {
            (Grid::new(parse_inline(source)?)?, BuildOptions::default())
        };
        if let Some(ordering) = ordering {
            options.ordering = ordering;
        }
        Ok(GridSpec { grid, options })
    }
}

pub fn parse_inline(list: &str) -> Result<Vec<f64>, CliError> {
    list.split(',').map(parse_number).collect()
}

fn parse_file(text: &str) -> Result<Vec<f64>, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed)
            .map_err(|e| CliError::Parse(format!("bad JSON grid: {e}")));
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_number)
        .collect()
}

/// A decimal literal or a rational `a/b`.
pub fn parse_number(token: &str) -> Result<f64, CliError> {
    let token = token.trim();
    let value = match token.split_once('/') {
        Some((num, den)) => {
            let num = parse_plain(num)?;
            let den = parse_plain(den)?;
            if den == 0.0 {
                return Err(CliError::Parse(format!("zero denominator in '{token}'")));
            }
            num / den
        }
        None => parse_plain(token)?,
    };
    if !value.is_finite() {
        return Err(CliError::Parse(format!("'{token}' is not a finite number")));
    }
    Ok(value)
}

fn parse_plain(s: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| CliError::Parse(format!("cannot parse '{s}' as a number")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_lists_and_rationals() {
        assert_eq!(parse_inline("-1, 0,1").unwrap(), vec![-1.0, 0.0, 1.0]);
        assert_eq!(parse_inline("-2/3,0").unwrap(), vec![-2.0 / 3.0, 0.0]);
        assert!(matches!(parse_inline("1,x"), Err(CliError::Parse(_))));
        assert!(matches!(parse_inline("1/0"), Err(CliError::Parse(_))));
        assert!(matches!(parse_inline("inf"), Err(CliError::Parse(_))));
    }

    #[test]
    fn chebyshev_generator() {
        let spec = GridSpec::parse("chebyshev:4", None).unwrap();
        assert_eq!(spec.grid.len(), 4);
        assert_eq!(spec.options.ordering, Ordering::BitReversed);
        assert_eq!(spec.options.dilation, 2.0);
        let spec = GridSpec::parse("chebyshev:5", Some(Ordering::Natural)).unwrap();
        assert_eq!(spec.options.ordering, Ordering::Natural);
        assert!(GridSpec::parse("chebyshev:x", None).is_err());
    }

    #[test]
    fn file_formats() {
        assert_eq!(parse_file("[0.5, -1]").unwrap(), vec![0.5, -1.0]);
        assert_eq!(parse_file("# grid\n1\n\n2/4\n").unwrap(), vec![1.0, 0.5]);
    }

    #[test]
    fn duplicates_are_rejected() {
        assert!(matches!(
            GridSpec::parse("1,1", None),
            Err(CliError::Domain(fdkit::FdError::DuplicateGridPoint { .. }))
        ));
    }
}
