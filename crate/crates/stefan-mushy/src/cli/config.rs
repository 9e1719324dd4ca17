//! Flat `key = value` configuration files mirroring the CLI flag names.
//! UTF-8 text, `#` starts a comment, blank lines ignored.

use std::collections::HashMap;
use std::path::Path;

pub(super) const KNOWN_KEYS: [&str; 11] = [
    "problem", "k", "rho", "c", "latent", "gamma", "epsilon", "h0", "dinf", "q0", "d0",
];

pub(super) fn load(path: &Path) -> Result<HashMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    parse(&text)
}

pub(super) fn parse(text: &str) -> Result<HashMap<String, String>, String> {
    let mut map = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!(
                "config line {}: expected `key = value`, got `{raw}`",
                idx + 1
            ));
        };
        let key = key.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(format!("config line {}: unknown key `{key}`", idx + 1));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_values_and_comments() {
        let map = parse("k = 1.5\n# comment\nproblem = p3 # trailing\n\nq0=2\n").unwrap();
        assert_eq!(map.get("k").map(String::as_str), Some("1.5"));
        assert_eq!(map.get("problem").map(String::as_str), Some("p3"));
        assert_eq!(map.get("q0").map(String::as_str), Some("2"));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert!(parse("mystery = 1\n").is_err());
        assert!(parse("just some words\n").is_err());
    }
}
