//! `key=value` config files. Each entry becomes a `--key value` flag placed
//! ahead of the real command-line flags, so the command line wins.

use std::fs;
use std::path::Path;

/// Parses config text into flag tokens. Blank lines and `#` comments are
/// skipped; `true`/`false` values toggle boolean flags.
pub fn parse(text: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key=value, got `{line}`", n + 1))?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        let value = value.trim();
        if key.is_empty() {
            return Err(format!("config line {}: empty key", n + 1));
        }
        if key == "config" {
            return Err(format!(
                "config line {}: nested config files are not supported",
                n + 1
            ));
        }
        match value {
            "true" => out.push(format!("--{key}")),
            "false" => {}
            _ => out.push(format!("--{key}={value}")),
        }
    }
    Ok(out)
}

/// Finds `--config PATH` / `--config=PATH` in `argv` and splices the file's
/// flags in directly after the subcommand name.
pub fn expand(argv: &[String]) -> Result<Vec<String>, String> {
    let mut path = None;
    let mut i = 0;
    while i < argv.len() {
        if argv[i] == "--config" {
            path = argv.get(i + 1).cloned();
            if path.is_none() {
                return Err("--config requires a path".into());
            }
        } else if let Some(p) = argv[i].strip_prefix("--config=") {
            path = Some(p.to_string());
        }
        i += 1;
    }
    let Some(path) = path else {
        return Ok(argv.to_vec());
    };
    let text = fs::read_to_string(Path::new(&path))
        .map_err(|e| format!("cannot read config `{path}`: {e}"))?;
    let flags = parse(&text)?;
    // argv[0] is the program, argv[1] the subcommand.
    let split = argv.len().min(2);
    let mut out = argv[..split].to_vec();
    out.extend(flags);
    out.extend_from_slice(&argv[split..]);
    Ok(out)
}
