//! Config files, scalar flag values and sweep lists.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

const KEYS: [&str; 11] = [
    "a", "b", "m", "N", "l", "format", "out", "tol", "r-min", "r-max", "steps",
];

/// Reads `key = value` lines; `#` starts a comment, blank lines are skipped.
pub fn read_config(path: &Path) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    parse_config(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut values = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(format!("line {}: unknown key '{key}'", lineno + 1));
        }
        values.insert(key, value.trim().to_string());
    }
    Ok(values)
}

pub fn parse_value<T: FromStr>(key: &str, text: &str) -> Result<T, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("invalid value for --{key}: '{text}'"))
}

/// `v1,v2,...` or the inclusive range `start:stop[:step]` (step defaults to 1).
pub fn parse_list(key: &str, text: &str) -> Result<Vec<f64>, String> {
    let values = if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|p| parse_value::<f64>(key, p))
            .collect::<Result<_, _>>()?;
        let (start, stop, step) = match parts[..] {
            [start, stop] => (start, stop, 1.0),
            [start, stop, step] => (start, stop, step),
            _ => return Err(format!("invalid range for --{key}: '{text}'")),
        };
        if !(start.is_finite() && stop.is_finite() && step.is_finite() && step > 0.0) {
            return Err(format!(
                "invalid range for --{key}: '{text}' (step must be positive)"
            ));
        }
        if stop < start {
            Vec::new()
        } else {
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            (0..count).map(|i| tidy(start + i as f64 * step)).collect()
        }
    } else {
        text.split(',')
            .map(|p| parse_value::<f64>(key, p))
            .collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(format!("empty range for --{key}: '{text}'"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(format!("non-finite value in --{key}: '{text}'"));
    }
    Ok(values)
}

/// Rounds accumulated step error away (0.1 * 3 becomes 0.3).
fn tidy(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(
            parse_list("b", "0.01,1,100").unwrap(),
            vec![0.01, 1.0, 100.0]
        );
        assert_eq!(
            parse_list("l", "0:5").unwrap(),
            vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]
        );
        let a = parse_list("a", "0.0:1.9:0.1").unwrap();
        assert_eq!(a.len(), 20);
        assert_eq!(a[3], 0.3);
        assert_eq!(a[19], 1.9);
        assert!(parse_list("l", "3:1").is_err());
        assert!(parse_list("a", "0:1:0").is_err());
        assert!(parse_list("a", "0:1:-1").is_err());
        assert!(parse_list("a", "1,,2").is_err());
        assert!(parse_list("a", "x").is_err());
        assert!(parse_list("a", "1:2:3:4").is_err());
    }

    #[test]
    fn config_parsing() {
        let c = parse_config("# comment\na = 1\n b=0.5 # inline\n\nr_min = 0.1\n").unwrap();
        assert_eq!(c["a"], "1");
        assert_eq!(c["b"], "0.5");
        assert_eq!(c["r-min"], "0.1");
        assert!(parse_config("nope = 1").is_err());
        assert!(parse_config("a 1").is_err());
    }
}
