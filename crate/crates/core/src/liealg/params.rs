//! Group parameters `alpha, beta, gamma, delta, eta`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Eta,
}

impl Param {
    pub const ALL: [Param; 5] = [Param::Alpha, Param::Beta, Param::Gamma, Param::Delta, Param::Eta];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::Gamma => "gamma",
            Param::Delta => "delta",
            Param::Eta => "eta",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownParameter(s.to_string()))
    }
}

/// A partial assignment of parameter values.
///
/// Serializes as a JSON object with only the present parameters, each value
/// a rational string.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Rational>,
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    fn slot(&self, p: Param) -> &Option<Rational> {
        match p {
            Param::Alpha => &self.alpha,
            Param::Beta => &self.beta,
            Param::Gamma => &self.gamma,
            Param::Delta => &self.delta,
            Param::Eta => &self.eta,
        }
    }

    fn slot_mut(&mut self, p: Param) -> &mut Option<Rational> {
        match p {
            Param::Alpha => &mut self.alpha,
            Param::Beta => &mut self.beta,
            Param::Gamma => &mut self.gamma,
            Param::Delta => &mut self.delta,
            Param::Eta => &mut self.eta,
        }
    }

    pub fn get(&self, p: Param) -> Option<&Rational> {
        self.slot(p).as_ref()
    }

    pub fn set(&mut self, p: Param, value: Rational) {
        *self.slot_mut(p) = Some(value);
    }

    pub fn with(mut self, p: Param, value: Rational) -> Self {
        self.set(p, value);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (Param, &Rational)> {
        Param::ALL.into_iter().filter_map(|p| self.get(p).map(|v| (p, v)))
    }

    /// Multiplies every parameter except `eta` by `t`.
    pub fn scaled(&self, t: &Rational) -> Self {
        let mut out = self.clone();
        for p in [Param::Alpha, Param::Beta, Param::Gamma, Param::Delta] {
            if let Some(v) = self.get(p) {
                out.set(p, v * t);
            }
        }
        out
    }

    /// Parses `alpha=1,beta=-2/3`. Each parameter may appear once.
    pub fn parse_assignments(input: &str) -> Result<Self> {
        let mut out = Params::new();
        for item in input.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("expected name=value, got {item:?}")))?;
            let p: Param = name.trim().parse()?;
            if out.get(p).is_some() {
                return Err(Error::Invalid(format!("parameter {p} given twice")));
            }
            out.set(p, value.trim().parse()?);
        }
        Ok(out)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(p, v)| format!("{p}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}
