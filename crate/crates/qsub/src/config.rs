//! Caps from the `QSUB_CAPS` environment variable and Γ catalogs from the
//! command line.

use qsub_core::abelian::FinAbGroup;
use qsub_core::enumerate::Caps;

use crate::doc::CapsDoc;

pub const CAPS_VAR: &str = "QSUB_CAPS";

/// Parses `key=value` pairs separated by commas over the defaults.
/// Keys: `gamma` (max |Γ|), `enum` (max enumeration size), `ell`, `rank`.
pub fn parse_caps(text: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) =
            item.split_once('=').ok_or_else(|| format!("{CAPS_VAR}: expected key=value, got {item:?}"))?;
        let n: u64 =
            value.trim().parse().map_err(|_| format!("{CAPS_VAR}: {key} must be a positive integer, got {value:?}"))?;
        if n == 0 {
            return Err(format!("{CAPS_VAR}: {key} must be positive"));
        }
        match key.trim() {
            "gamma" => caps.max_gamma_order = n,
            "enum" => caps.max_enumeration = n,
            "ell" => caps.max_ell = n,
            "rank" => caps.max_rank = n as usize,
            other => return Err(format!("{CAPS_VAR}: unknown key {other:?}")),
        }
    }
    Ok(caps)
}

pub fn caps_doc(c: &Caps) -> CapsDoc {
    CapsDoc { gamma: c.max_gamma_order, enumeration: c.max_enumeration, ell: c.max_ell, rank: c.max_rank }
}

/// Parses a catalog such as `1,Z2,Z3,Z2xZ2`.
pub fn parse_gammas(text: &str) -> Result<Vec<FinAbGroup>, String> {
    text.split(',').map(str::trim).map(parse_gamma).collect()
}

fn parse_gamma(token: &str) -> Result<FinAbGroup, String> {
    let bad = || format!("--gammas: cannot parse {token:?}; use 1, Zn or products like Z2xZ4");
    if token == "1" {
        return Ok(FinAbGroup::trivial());
    }
    let orders = token
        .split(['x', 'X', '*'])
        .map(|f| f.trim().strip_prefix('Z').and_then(|n| n.parse::<u64>().ok()).filter(|&n| n > 0))
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(bad)?;
    FinAbGroup::from_cyclic_orders(&orders).map_err(|_| bad())
}
