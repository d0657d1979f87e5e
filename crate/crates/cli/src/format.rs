//! Fixed CSV number formatting.

/// Twelve significant digits, `.` as decimal separator.
///
/// Magnitudes in `[1e-5, 1e12)` are written positionally, everything else in
/// scientific notation. Zero (of either sign) is `0.00000000000`.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("exponent in {:e} output");
    if (-5..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        sci
    }
}

/// Joins formatted values with `,` and terminates the line with `\n`.
pub fn csv_line(values: &[f64]) -> String {
    let mut line = values
        .iter()
        .map(|&v| format_value(v))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}
