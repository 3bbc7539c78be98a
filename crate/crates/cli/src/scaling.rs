//! The `diag:a,b,c` shorthand and JSON scaling maps.

use std::path::Path;

use iwcon::algebra::{LaurentMonomial, Rational, ScalingMap};

use crate::CliError;

/// One diagonal entry `[-]q[e^k]`: `e`, `-e`, `2`, `1/2e`, `3e^-2`.
pub fn parse_entry(s: &str) -> Result<LaurentMonomial, CliError> {
    let bad = || CliError::Usage(format!("bad diagonal entry `{s}`; expected [-]q[e^k]"));
    let t = s.trim();
    let (neg, rest) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t),
    };
    let (q, k) = match rest.find('e') {
        Some(pos) => {
            let (q, tail) = rest.split_at(pos);
            let tail = &tail[1..];
            let k = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?
            };
            (q, k)
        }
        None => (rest, 0),
    };
    let coeff = if q.is_empty() {
        if k == 0 {
            return Err(bad());
        }
        Rational::one()
    } else {
        q.parse::<Rational>().map_err(|_| bad())?
    };
    if coeff.is_zero() {
        return Err(CliError::Usage(format!("diagonal entry `{s}` is zero")));
    }
    let coeff = if neg { -coeff } else { coeff };
    Ok(LaurentMonomial::new(coeff, k))
}

/// `diag:a,b,c`, an inline JSON object, or a path to a JSON file.
pub fn parse_map(spec: &str) -> Result<ScalingMap, CliError> {
    if let Some(list) = spec.strip_prefix("diag:") {
        let parts: Vec<&str> = list.split(',').collect();
        if parts.len() != 3 {
            return Err(CliError::Usage(format!("`{spec}` needs exactly three entries")));
        }
        let d = [parse_entry(parts[0])?, parse_entry(parts[1])?, parse_entry(parts[2])?];
        return ScalingMap::diag(d).map_err(|e| CliError::Usage(e.to_string()));
    }
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(Path::new(spec))
            .map_err(|e| CliError::Usage(format!("cannot read scaling map `{spec}`: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad scaling map JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn entries() {
        assert_eq!(parse_entry("e").unwrap(), LaurentMonomial::new(r("1"), 1));
        assert_eq!(parse_entry("-e").unwrap(), LaurentMonomial::new(r("-1"), 1));
        assert_eq!(parse_entry("1").unwrap(), LaurentMonomial::new(r("1"), 0));
        assert_eq!(parse_entry("1/2e^2").unwrap(), LaurentMonomial::new(r("1/2"), 2));
        assert_eq!(parse_entry("3e^-1").unwrap(), LaurentMonomial::new(r("3"), -1));
        for bad in ["", "-", "0", "x", "e^", "2e3", "1/0"] {
            assert!(parse_entry(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn maps() {
        assert!(parse_map("diag:e,e,1").is_ok());
        assert!(parse_map("diag:e,e").is_err());
        let js = serde_json::to_string(&parse_map("diag:e,2,-e^2").unwrap()).unwrap();
        assert_eq!(parse_map(&js).unwrap(), parse_map("diag:e,2,-e^2").unwrap());
    }
}
