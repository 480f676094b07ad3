//! Text rendering shared by every CSV emitter.

/// Formats like C's `%.6g`: six significant digits, trailing zeros trimmed,
/// scientific notation outside `1e-4 <= |x| < 1e6`. Infinity is `inf`.
pub fn g6(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.5e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `g6` for optional values; absent values render as `nan`.
pub fn g6_opt(x: Option<f64>) -> String {
    x.map(g6).unwrap_or_else(|| "nan".into())
}

#[cfg(test)]
mod tests {
    use super::g6;

    #[test]
    fn matches_printf_g() {
        assert_eq!(g6(0.0), "0");
        assert_eq!(g6(1.0), "1");
        assert_eq!(g6(5.0 / 6.0), "0.833333");
        assert_eq!(g6(4.0 / 3.0), "1.33333");
        assert_eq!(g6(123456.7), "123457");
        assert_eq!(g6(1234567.0), "1.23457e+06");
        assert_eq!(g6(0.0001), "0.0001");
        assert_eq!(g6(0.00001234), "1.234e-05");
        assert_eq!(g6(-2.5), "-2.5");
        assert_eq!(g6(999999.5), "1e+06");
        assert_eq!(g6(f64::INFINITY), "inf");
    }
}
