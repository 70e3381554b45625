use std::fmt;

use crate::error::{Error, Result};

/// The standard family of incidence functions.
///
/// `Delta`, `Zeta`, `Eta`, `Chi`, `C` and `M` have direct vertex-level
/// constructors; the rest are powers or inverses of those.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardFunction {
    Delta,
    Zeta,
    /// `ζ ∗ ζ`, the segment cardinality.
    Zeta2,
    Eta,
    /// `η^s`: chains with `s` edges.
    EtaPow(u32),
    /// `2δ − ζ`; its inverse counts all chains.
    C,
    Chi,
    /// `χ^s`: maximal chains with `s` edges.
    ChiPow(u32),
    /// `δ − χ`; its inverse counts all maximal chains.
    M,
    Mobius,
}

impl StandardFunction {
    /// Every non-powered name plus powers `1..=max_power`.
    pub fn family(max_power: u32) -> Vec<StandardFunction> {
        use StandardFunction::*;
        let mut all = vec![Delta, Zeta, Zeta2, Eta, C, Chi, M, Mobius];
        for s in 1..=max_power {
            all.push(EtaPow(s));
            all.push(ChiPow(s));
        }
        all
    }

    /// Parses a `--fn` name with an optional `--power`.
    ///
    /// `eta` and `chi` with a power are read as `eta_pow` and `chi_pow`.
    pub fn from_name(name: &str, power: Option<u32>) -> Result<Self> {
        use StandardFunction::*;
        let unknown = || Error::UnknownFunction(name.to_string());
        let power_of = |p: Option<u32>| match p {
            Some(0) => Err(Error::InvalidPower(0)),
            Some(s) => Ok(s),
            None => Err(Error::UnknownFunction(format!("{name} requires --power"))),
        };
        let f = match (name, power) {
            ("eta_pow", p) | ("eta", p @ Some(_)) => EtaPow(power_of(p)?),
            ("chi_pow", p) | ("chi", p @ Some(_)) => ChiPow(power_of(p)?),
            (_, Some(_)) => {
                return Err(Error::UnknownFunction(format!(
                    "{name} does not take a power"
                )))
            }
            ("delta", None) => Delta,
            ("zeta", None) => Zeta,
            ("zeta2", None) => Zeta2,
            ("eta", None) => Eta,
            ("C", None) => C,
            ("chi", None) => Chi,
            ("M", None) => M,
            ("mobius", None) => Mobius,
            _ => return Err(unknown()),
        };
        Ok(f)
    }

    pub fn is_elementary(&self) -> bool {
        use StandardFunction::*;
        matches!(self, Delta | Zeta | Eta | Chi | C | M)
    }
}

impl fmt::Display for StandardFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StandardFunction::*;
        match self {
            Delta => f.write_str("delta"),
            Zeta => f.write_str("zeta"),
            Zeta2 => f.write_str("zeta2"),
            Eta => f.write_str("eta"),
            EtaPow(s) => write!(f, "eta_pow({s})"),
            C => f.write_str("C"),
            Chi => f.write_str("chi"),
            ChiPow(s) => write!(f, "chi_pow({s})"),
            M => f.write_str("M"),
            Mobius => f.write_str("mobius"),
        }
    }
}
