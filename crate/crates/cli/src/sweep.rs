//! Sweep-value parsing: comma lists and inclusive start:step:end ranges.

use crate::CliError;

/// Parses `"1,2,5"` or `"10:10:200"` (inclusive, step > 0) into values.
pub fn parse_values(spec: &str) -> Result<Vec<f64>, CliError> {
    let s = spec.trim();
    if s.is_empty() {
        return Err(CliError::validation("empty value list"));
    }
    let values = if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::validation(format!(
                "range must be start:step:end, got `{s}`"
            )));
        }
        let start = parse_one(parts[0])?;
        let step = parse_one(parts[1])?;
        let end = parse_one(parts[2])?;
        if step <= 0.0 {
            return Err(CliError::validation(format!("range step must be > 0, got {step}")));
        }
        if end < start {
            return Err(CliError::validation(format!(
                "range end {end} lies before start {start}"
            )));
        }
        let mut out = Vec::new();
        let mut i = 0u64;
        loop {
            let v = start + step * i as f64;
            if v > end + step * 1e-9 {
                break;
            }
            out.push(v);
            i += 1;
        }
        out
    } else {
        s.split(',')
            .map(parse_one)
            .collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(CliError::validation("value list resolved to nothing"));
    }
    Ok(values)
}

fn parse_one(token: &str) -> Result<f64, CliError> {
    let v: f64 = token
        .trim()
        .parse()
        .map_err(|_| CliError::validation(format!("`{}` is not a number", token.trim())))?;
    if !v.is_finite() {
        return Err(CliError::validation(format!("`{v}` is not finite")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comma_lists() {
        assert_eq!(parse_values("1, 2,5e-1").unwrap(), vec![1.0, 2.0, 0.5]);
        assert!(parse_values("").is_err());
        assert!(parse_values("1,x").is_err());
    }

    #[test]
    fn inclusive_ranges() {
        assert_eq!(
            parse_values("10:10:50").unwrap(),
            vec![10.0, 20.0, 30.0, 40.0, 50.0]
        );
        // The endpoint survives accumulated rounding.
        assert_eq!(parse_values("0:0.1:2").unwrap().len(), 21);
        assert!(parse_values("10:0:50").is_err());
        assert!(parse_values("10:5").is_err());
        assert!(parse_values("50:10:10").is_err());
    }
}
