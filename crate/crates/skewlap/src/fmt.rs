//! Deterministic numeric formatting for serialized output.
//!
//! All floating-point values in JSON, CSV, and table output go through
//! [`sig12`], which renders 12 significant digits and trims trailing zeros.
//! Formatting is a pure function of the `f64` bit pattern, so golden files
//! are stable across platforms.

/// Formats with 12 significant digits, `%.12g` style: fixed notation for
/// decimal exponents in `-5..=11`, scientific otherwise, trailing zeros
/// trimmed in both.
pub fn sig12(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    debug_assert!(value.is_finite(), "only finite values are serialized");
    let negative = value < 0.0;
    // 11 fractional digits in scientific notation = 12 significant digits,
    // correctly rounded by the standard formatter.
    let sci = format!("{:.11e}", value.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    debug_assert_eq!(digits.len(), 12);

    let body = if (-5..=11).contains(&exp) {
        if exp >= 0 {
            let split = (exp + 1) as usize;
            let int_part = &digits[..split];
            let frac_part = digits[split..].trim_end_matches('0');
            if frac_part.is_empty() {
                int_part.to_string()
            } else {
                format!("{int_part}.{frac_part}")
            }
        } else {
            let trimmed = digits.trim_end_matches('0');
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), trimmed)
        }
    } else {
        let head = &digits[..1];
        let tail = digits[1..].trim_end_matches('0');
        if tail.is_empty() {
            format!("{head}e{exp}")
        } else {
            format!("{head}.{tail}e{exp}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}
