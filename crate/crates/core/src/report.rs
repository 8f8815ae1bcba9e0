//! Outcome records for identity checks.

use std::fmt;

use serde::Serialize;

use crate::poly::Poly;

/// Residual listings longer than this are truncated.
pub const RESIDUAL_LINES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Symbolic,
    Numeric,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ordered by severity, so `max` over a suite gives its overall status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    ErratumDetected,
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::ErratumDetected => "erratum-detected",
            Status::Failed => "failed",
        }
    }

    /// Status of a printed relation given whether it holds as printed and
    /// whether its corrected form holds.
    pub fn classify(display_holds: bool, corrected_holds: bool) -> Status {
        match (display_holds, corrected_holds) {
            (true, _) => Status::Verified,
            (false, true) => Status::ErratumDetected,
            (false, false) => Status::Failed,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named exact value; integers and rationals are rendered in decimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub mode: Mode,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Nonzero residual of the relation as printed, one term or value per line.
    pub residual: Vec<String>,
    pub notes: Vec<String>,
    /// The corrected relation, for erratum findings.
    pub correction: Option<String>,
}

impl Report {
    fn new(name: impl Into<String>, mode: Mode, status: Status) -> Self {
        Report {
            name: name.into(),
            mode,
            status,
            witnesses: Vec::new(),
            residual: Vec::new(),
            notes: Vec::new(),
            correction: None,
        }
    }

    /// Verified iff `residual` is the zero polynomial.
    pub fn symbolic(name: impl Into<String>, residual: &Poly) -> Self {
        let status = if residual.is_zero() {
            Status::Verified
        } else {
            Status::Failed
        };
        let mut r = Report::new(name, Mode::Symbolic, status);
        r.residual = residual_lines(residual);
        r.witnesses.push(Witness {
            name: "residual terms".into(),
            value: residual.term_count().to_string(),
        });
        r
    }

    /// Verified iff every listed residual vanishes.
    pub fn symbolic_all(name: impl Into<String>, residuals: &[(&str, &Poly)]) -> Self {
        let mut r = Report::new(name, Mode::Symbolic, Status::Verified);
        for (label, res) in residuals {
            if !res.is_zero() {
                r.status = Status::Failed;
                r.residual
                    .extend(residual_lines(res).into_iter().map(|l| format!("{label}: {l}")));
            }
            r.witnesses.push(Witness {
                name: format!("{label} residual terms"),
                value: res.term_count().to_string(),
            });
        }
        r
    }

    /// Verified iff the two sides agree exactly.
    pub fn numeric<T: fmt::Display + PartialEq>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        let status = if lhs == rhs {
            Status::Verified
        } else {
            Status::Failed
        };
        let mut r = Report::new(name, Mode::Numeric, status);
        r.witnesses.push(Witness::new("lhs", lhs));
        r.witnesses.push(Witness::new("rhs", rhs));
        if lhs != rhs {
            r.residual.push(format!("lhs = {lhs}, rhs = {rhs}"));
        }
        r
    }

    /// Check of a printed relation with a known correction. `residual` is the
    /// residual of the relation as printed; `corrected_holds` whether the
    /// corrected relation was verified.
    pub fn erratum(
        name: impl Into<String>,
        mode: Mode,
        residual: Vec<String>,
        corrected_holds: bool,
        correction: impl Into<String>,
    ) -> Self {
        let status = Status::classify(residual.is_empty(), corrected_holds);
        let mut r = Report::new(name, mode, status);
        r.residual = residual;
        if status != Status::Verified {
            r.correction = Some(correction.into());
        }
        r
    }

    pub fn with_witness(mut self, name: impl Into<String>, value: impl fmt::Display) -> Self {
        self.witnesses.push(Witness::new(name, value));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Downgrades a verified report to failed with an explanation.
    pub fn require(mut self, ok: bool, what: impl Into<String>) -> Self {
        if !ok {
            let what = what.into();
            self.status = Status::Failed;
            self.residual.push(format!("check failed: {what}"));
        }
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl Witness {
    pub fn new(name: impl Into<String>, value: impl fmt::Display) -> Self {
        Witness {
            name: name.into(),
            value: value.to_string(),
        }
    }
}

/// The most severe status in a suite; verified for an empty suite.
pub fn overall(reports: &[Report]) -> Status {
    reports
        .iter()
        .map(|r| r.status)
        .max()
        .unwrap_or(Status::Verified)
}

/// Residual polynomial as report lines, truncated after [`RESIDUAL_LINES`] terms.
pub fn residual_lines(p: &Poly) -> Vec<String> {
    let lines = p.to_lines();
    if lines.len() <= RESIDUAL_LINES {
        return lines;
    }
    let rest = lines.len() - RESIDUAL_LINES;
    let mut out: Vec<String> = lines.into_iter().take(RESIDUAL_LINES).collect();
    out.push(format!("... {rest} more terms"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn symbolic_status_tracks_residual() {
        let ok = Report::symbolic("zero", &(poly("p") - poly("p")));
        assert!(ok.is_verified());
        assert!(ok.residual.is_empty());

        let bad = Report::symbolic("nonzero", &poly("p - q"));
        assert_eq!(bad.status, Status::Failed);
        assert_eq!(bad.residual, vec!["1*p", "-1*q"]);
    }

    #[test]
    fn long_residuals_are_truncated() {
        let big = poly("(p + q + 1)^6");
        let r = Report::symbolic("big", &big);
        assert_eq!(r.residual.len(), RESIDUAL_LINES + 1);
        assert!(r.residual.last().unwrap().ends_with("more terms"));
    }

    #[test]
    fn erratum_classification() {
        assert_eq!(Status::classify(true, false), Status::Verified);
        assert_eq!(Status::classify(false, true), Status::ErratumDetected);
        assert_eq!(Status::classify(false, false), Status::Failed);
        let r = Report::erratum("x", Mode::Numeric, vec!["1 != 16".into()], true, "fixed");
        assert_eq!(r.status, Status::ErratumDetected);
        assert_eq!(r.correction.as_deref(), Some("fixed"));
    }

    #[test]
    fn overall_picks_most_severe() {
        let v = Report::numeric("a", &1, &1);
        let e = Report::erratum("b", Mode::Numeric, vec!["r".into()], true, "c");
        let f = Report::numeric("c", &1, &2);
        assert_eq!(overall(&[]), Status::Verified);
        assert_eq!(overall(&[v.clone(), e.clone()]), Status::ErratumDetected);
        assert_eq!(overall(&[v, e, f]), Status::Failed);
    }
}
