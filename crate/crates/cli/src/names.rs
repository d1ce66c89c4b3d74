//! Space names: `hilb:k`, `kummer:k`, `S`, `S^[k]`, `T^[[k]]`, `C_k`,
//! products joined by `x` and powers `S^2`.

use rwinv_core::spaces::{make_hilbert, make_kummer, product, virtual_ck, Engine, Space};

use crate::error::CliError;

fn degree(s: &str, whole: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::usage(format!("bad degree in space name `{whole}`")))
}

fn factor(engine: &mut Engine, t: &str, whole: &str) -> Result<Space, CliError> {
    let space = if let Some(k) = t.strip_prefix("hilb:") {
        make_hilbert(engine, degree(k, whole)?)?
    } else if let Some(k) = t.strip_prefix("kummer:") {
        make_kummer(engine, degree(k, whole)?)?
    } else if let Some(k) = t.strip_prefix("virtual:").or_else(|| t.strip_prefix("C_")) {
        virtual_ck(engine, degree(k, whole)?)?
    } else if t == "S" {
        make_hilbert(engine, 1)?
    } else if t == "T" {
        make_kummer(engine, 1)?
    } else if let Some(k) = t.strip_prefix("S^[").and_then(|r| r.strip_suffix(']')) {
        make_hilbert(engine, degree(k, whole)?)?
    } else if let Some(k) = t.strip_prefix("T^[[").and_then(|r| r.strip_suffix("]]")) {
        make_kummer(engine, degree(k, whole)?)?
    } else {
        return Err(CliError::usage(format!("unknown space `{t}` in `{whole}`")));
    };
    Ok(space)
}

pub fn parse_space(engine: &mut Engine, name: &str) -> Result<Space, CliError> {
    let name = name.trim();
    let mut factors = Vec::new();
    for token in name.split('x') {
        let token = token.trim();
        let (base, power) = match token.rsplit_once('^') {
            Some((b, e)) if !b.is_empty() && !e.is_empty() && e.chars().all(|c| c.is_ascii_digit()) => {
                (b, e.parse::<usize>().map_err(|_| CliError::usage(format!("bad power in `{token}`")))?)
            }
            _ => (token, 1),
        };
        if power == 0 {
            return Err(CliError::usage(format!("zero power in `{token}`")));
        }
        let x = factor(engine, base, name)?;
        factors.extend(std::iter::repeat_n(x, power));
    }
    if factors.len() > 1 && factors.iter().any(|x| matches!(x.kind(), rwinv_core::spaces::SpaceKind::Virtual)) {
        return Err(CliError::usage(format!("virtual spaces cannot be multiplied: `{name}`")));
    }
    if factors.len() == 1 {
        return Ok(factors.pop().expect("one factor"));
    }
    Ok(product(engine, &factors)?)
}
