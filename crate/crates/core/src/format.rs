//! Number formatting shared by the serializers.

/// Shortest decimal that parses back to the identical `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}
