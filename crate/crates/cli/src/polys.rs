use std::str::FromStr;

use anyhow::anyhow;
use bsnum::{Polynomial, Tables};
use serde_json::json;

use crate::config::OutputFormat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFamily {
    P,
    Q,
    S,
    Sigma,
}

impl PolyFamily {
    pub fn name(self) -> &'static str {
        match self {
            PolyFamily::P => "P",
            PolyFamily::Q => "Q",
            PolyFamily::S => "S",
            PolyFamily::Sigma => "sigma",
        }
    }

    pub fn compute(self, tables: &mut Tables, k: usize) -> bsnum::Result<Polynomial> {
        match self {
            PolyFamily::P => tables.p_polynomial(k),
            PolyFamily::Q => tables.q_polynomial(k),
            PolyFamily::S => tables.s_polynomial(k),
            PolyFamily::Sigma => tables.sigma_polynomial(k),
        }
    }
}

impl FromStr for PolyFamily {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        [
            PolyFamily::P,
            PolyFamily::Q,
            PolyFamily::S,
            PolyFamily::Sigma,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| anyhow!("unknown polynomial family `{s}` (expected P, Q, S or sigma)"))
    }
}

/// Coefficients in ascending powers as `num/den` strings (`num` when
/// integral). The zero polynomial has no coefficients.
pub fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn render(family: PolyFamily, k: usize, p: &Polynomial, format: OutputFormat) -> String {
    let coeffs = coefficient_strings(p);
    match format {
        OutputFormat::Pretty => format!(
            "{}_{k}(x) = {p}\ncoefficients: [{}]\n",
            family.name(),
            coeffs.join(", ")
        ),
        OutputFormat::Csv => {
            let mut out = String::from("power,coefficient\n");
            for (i, c) in coeffs.iter().enumerate() {
                out.push_str(&format!("{i},{c}\n"));
            }
            out
        }
        OutputFormat::Json => {
            json!({ "family": family.name(), "k": k, "coefficients": coeffs }).to_string() + "\n"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let mut t = Tables::new();
        let s4 = PolyFamily::S.compute(&mut t, 4).unwrap();
        assert_eq!(coefficient_strings(&s4), ["1/2880", "1/1920", "7/5760"]);
        let sigma2 = PolyFamily::Sigma.compute(&mut t, 2).unwrap();
        assert_eq!(coefficient_strings(&sigma2), ["-1/24", "1/8"]);
        assert_eq!(
            coefficient_strings(&PolyFamily::P.compute(&mut t, 0).unwrap()),
            ["1"]
        );
        assert!(PolyFamily::S.compute(&mut t, 0).is_err());
        assert!(coefficient_strings(&PolyFamily::P.compute(&mut t, 3).unwrap()).is_empty());
    }

    #[test]
    fn formats() {
        let mut t = Tables::new();
        let p = PolyFamily::Sigma.compute(&mut t, 2).unwrap();
        assert_eq!(
            render(PolyFamily::Sigma, 2, &p, OutputFormat::Json),
            "{\"coefficients\":[\"-1/24\",\"1/8\"],\"family\":\"sigma\",\"k\":2}\n"
        );
        assert_eq!(
            render(PolyFamily::Sigma, 2, &p, OutputFormat::Csv),
            "power,coefficient\n0,-1/24\n1,1/8\n"
        );
        assert!(render(PolyFamily::Sigma, 2, &p, OutputFormat::Pretty)
            .starts_with("sigma_2(x) = 1/8*x - 1/24\n"));
    }
}
