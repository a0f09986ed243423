//! Textual rendering and parsing of polynomials and rational functions.
//!
//! Three formats: plain (ascending-exponent, human readable), CSV (one row
//! per polynomial, cells are coefficients ascending from q^0), and LaTeX.
//! Plain and CSV renderings of a polynomial parse back to the identical
//! canonical value; rendering is deterministic.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::lext::LExt;
use crate::poly::QPoly;
use crate::qrat::QRat;
use crate::rational::{parse_ratio, BigRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Csv,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "csv" => Ok(OutputFormat::Csv),
            "latex" => Ok(OutputFormat::Latex),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
        })
    }
}

/// Ascending-exponent plain form, e.g. "1 + q + q^2" or "-1 + q".
pub fn poly_plain(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (exp, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push_str(if first { "-" } else { " - " });
        } else if !first {
            out.push_str(" + ");
        }
        first = false;
        let mag = c.abs();
        if exp == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push('q');
            if exp > 1 {
                out.push_str(&format!("^{exp}"));
            }
        }
    }
    out
}

/// One CSV row: coefficients ascending from q^0. The zero polynomial is the
/// single cell "0".
pub fn poly_csv(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// LaTeX form with braced exponents and \frac for fractional coefficients.
pub fn poly_latex(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let frac = |x: &BigRat| -> String {
        if x.is_integer() {
            x.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", x.numer(), x.denom())
        }
    };
    let mut out = String::new();
    let mut first = true;
    for (exp, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push_str(if first { "-" } else { " - " });
        } else if !first {
            out.push_str(" + ");
        }
        first = false;
        let mag = c.abs();
        if exp == 0 {
            out.push_str(&frac(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&frac(&mag));
            }
            out.push('q');
            if exp > 1 {
                out.push_str(&format!("^{{{exp}}}"));
            }
        }
    }
    out
}

pub fn poly_to_string(p: &QPoly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => poly_plain(p),
        OutputFormat::Csv => poly_csv(p),
        OutputFormat::Latex => poly_latex(p),
    }
}

/// Parse the plain form back into a polynomial.
pub fn parse_poly_plain(s: &str) -> Result<QPoly, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty polynomial".to_string());
    }
    // Tokens alternate term, op, term, op, ... with a possible leading "-"
    // glued to the first term.
    let tokens: Vec<&str> = s.split_whitespace().collect();
    let mut acc = QPoly::zero();
    let mut idx = 0;
    let mut sign = BigRat::one();
    while idx < tokens.len() {
        if idx > 0 {
            sign = match tokens[idx] {
                "+" => BigRat::one(),
                "-" => -BigRat::one(),
                other => return Err(format!("expected + or -, found {other:?}")),
            };
            idx += 1;
            if idx >= tokens.len() {
                return Err("dangling operator".to_string());
            }
        }
        let (coeff, exp) = parse_plain_term(tokens[idx])?;
        acc = &acc + &QPoly::monomial(coeff * &sign, exp);
        idx += 1;
    }
    Ok(acc)
}

fn parse_plain_term(term: &str) -> Result<(BigRat, usize), String> {
    let (neg, term) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term),
    };
    let (coeff_str, exp) = match term.split_once('q') {
        None => (term, 0usize),
        Some((c, rest)) => {
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(|| format!("malformed exponent in {term:?}"))?
                    .parse::<usize>()
                    .map_err(|_| format!("malformed exponent in {term:?}"))?
            };
            (c, exp)
        }
    };
    let coeff = if coeff_str.is_empty() {
        BigRat::one()
    } else {
        parse_ratio(coeff_str)?
    };
    Ok((if neg { -coeff } else { coeff }, exp))
}

/// Parse a CSV coefficient row back into a polynomial.
pub fn parse_poly_csv(s: &str) -> Result<QPoly, String> {
    let coeffs = s
        .trim()
        .split(',')
        .map(|cell| parse_ratio(cell.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QPoly::from_coeffs(coeffs))
}

/// Plain form of a rational function: the numerator polynomial when the
/// denominator is 1, otherwise "num/(den)" with a multi-term numerator
/// parenthesized.
pub fn qrat_plain(r: &QRat) -> String {
    if let Some(p) = r.as_poly() {
        return poly_plain(p);
    }
    let num = poly_plain(r.num());
    let den = poly_plain(r.den());
    if r.num().term_count() > 1 {
        format!("({num})/({den})")
    } else {
        format!("{num}/({den})")
    }
}

pub fn qrat_latex(r: &QRat) -> String {
    if let Some(p) = r.as_poly() {
        return poly_latex(p);
    }
    format!("\\frac{{{}}}{{{}}}", poly_latex(r.num()), poly_latex(r.den()))
}

/// "rat: ..., log: ..." pair form; `log` is the coefficient of
/// L = (q - 1)/log q.
pub fn lext_plain(x: &LExt) -> String {
    format!(
        "rat: {}, log: {}",
        qrat_plain(x.rat_part()),
        qrat_plain(x.log_part())
    )
}

pub fn lext_latex(x: &LExt) -> String {
    format!(
        "rat: {}, log: {}",
        qrat_latex(x.rat_part()),
        qrat_latex(x.log_part())
    )
}

/// Labeled CSV block: four rows (rat_num, rat_den, log_num, log_den), each a
/// label cell followed by ascending coefficients.
pub fn lext_csv(x: &LExt) -> String {
    format!(
        "rat_num,{}\nrat_den,{}\nlog_num,{}\nlog_den,{}",
        poly_csv(x.rat_part().num()),
        poly_csv(x.rat_part().den()),
        poly_csv(x.log_part().num()),
        poly_csv(x.log_part().den()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn poly(v: &[i64]) -> QPoly {
        QPoly::from_coeffs(v.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn plain_form_examples() {
        assert_eq!(poly_plain(&poly(&[1, 1, 1])), "1 + q + q^2");
        assert_eq!(poly_plain(&poly(&[0, 1, 1, 2, 1])), "q + q^2 + 2q^3 + q^4");
        assert_eq!(poly_plain(&poly(&[-1, 1])), "-1 + q");
        assert_eq!(poly_plain(&QPoly::zero()), "0");
        assert_eq!(
            poly_plain(&QPoly::from_coeffs(vec![rat(1, 2), rat(-3, 2)])),
            "1/2 - 3/2q"
        );
    }

    #[test]
    fn csv_form_examples() {
        assert_eq!(poly_csv(&poly(&[0, 1, 1, 2, 1])), "0,1,1,2,1");
        assert_eq!(poly_csv(&QPoly::zero()), "0");
    }

    #[test]
    fn latex_form_examples() {
        assert_eq!(poly_latex(&poly(&[0, 0, 1, 2])), "q^{2} + 2q^{3}");
        assert_eq!(
            poly_latex(&QPoly::from_coeffs(vec![rat(-1, 2), rat_int(1)])),
            "-\\frac{1}{2} + q"
        );
    }

    #[test]
    fn plain_round_trip() {
        for p in [
            QPoly::zero(),
            poly(&[1, 1, 1]),
            poly(&[-1, 1]),
            poly(&[0, 1, 1, 2, 1]),
            QPoly::from_coeffs(vec![rat(1, 2), rat(-3, 2), rat_int(0), rat_int(7)]),
        ] {
            assert_eq!(parse_poly_plain(&poly_plain(&p)).unwrap(), p);
        }
        assert!(parse_poly_plain("1 + + q").is_err());
        assert!(parse_poly_plain("").is_err());
    }

    #[test]
    fn csv_round_trip() {
        for p in [QPoly::zero(), poly(&[0, 1, 1, 2, 1]), poly(&[-1, 0, 2])] {
            assert_eq!(parse_poly_csv(&poly_csv(&p)).unwrap(), p);
        }
        assert!(parse_poly_csv("1,x").is_err());
    }

    #[test]
    fn qrat_forms() {
        let r = QRat::new(poly(&[1]), poly(&[-1, 1]));
        assert_eq!(qrat_plain(&r), "1/(-1 + q)");
        assert_eq!(qrat_plain(&-&r), "-1/(-1 + q)");
        let s = QRat::new(poly(&[1, 1]), poly(&[-1, 1]));
        assert_eq!(qrat_plain(&s), "(1 + q)/(-1 + q)");
        assert_eq!(qrat_latex(&r), "\\frac{1}{-1 + q}");
        assert_eq!(qrat_plain(&QRat::from(poly(&[0, 1]))), "q");
    }

    #[test]
    fn lext_forms() {
        assert_eq!(lext_plain(&LExt::l()), "rat: 0, log: 1");
        let csv = lext_csv(&LExt::l());
        assert_eq!(csv, "rat_num,0\nrat_den,1\nlog_num,1\nlog_den,1");
    }
}
