//! Number rendering for CSV cells: 12 significant digits in the style of
//! C's `%.12g`.

const SIG_DIGITS: i32 = 12;

/// Formats `x` with 12 significant digits, switching to scientific notation
/// for exponents below −4 or at least 12, with trailing zeros removed.
/// Both zeros print as `0`.
pub fn g12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        // Negative zero from round-off carries no information in a table.
        return "0".into();
    }
    // Round once to 12 significant digits and read the exponent from that,
    // so 999999999999.5 moves to the next decade before choosing a style.
    let sci = format!("{:.*e}", (SIG_DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..SIG_DIGITS).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (SIG_DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
