//! Weight-list parsing for command-line arguments and `--file` input.

use std::str::FromStr;

use nullpart_core::{BigInt, WeightSet};

/// Parses positional weight arguments.
pub fn weights_from_args(args: &[String]) -> Result<WeightSet, String> {
    if args.is_empty() {
        return Err("no weights given (pass integers or --file)".into());
    }
    let parsed = args
        .iter()
        .map(|a| BigInt::from_str(a).map_err(|_| format!("not an integer: {a:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WeightSet::new(parsed))
}

/// Parses a weight file: one integer per line, `#` starts a comment, blank
/// lines are skipped.
pub fn weights_from_file(text: &str) -> Result<WeightSet, String> {
    let mut weights = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let w = BigInt::from_str(line)
            .map_err(|_| format!("line {}: not an integer: {line:?}", lineno + 1))?;
        weights.push(w);
    }
    if weights.is_empty() {
        return Err("weight file holds no weights".into());
    }
    Ok(WeightSet::new(weights))
}
