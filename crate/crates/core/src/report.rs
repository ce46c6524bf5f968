use std::fmt;

use serde::Serialize;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Informational; never counts as a failure.
    Report,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Report => "REPORT",
        })
    }
}

/// Outcome of one verification check. `residues` holds rendered nonzero
/// remainders (empty on success), `notes` any conventions or findings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub residues: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str, status: Status) -> Self {
        CheckReport {
            name: name.to_string(),
            status,
            residues: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// PASS if no residue was recorded, FAIL otherwise.
    pub fn from_residues(name: &str, residues: Vec<String>) -> Self {
        let status = if residues.is_empty() { Status::Pass } else { Status::Fail };
        CheckReport {
            name: name.to_string(),
            status,
            residues,
            notes: Vec::new(),
        }
    }

    pub fn error(name: &str, err: impl fmt::Display) -> Self {
        let mut r = CheckReport::new(name, Status::Fail);
        r.notes.push(format!("error: {err}"));
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<6} {}", self.status, self.name)?;
        for r in &self.residues {
            write!(f, "\n    residue: {r}")?;
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        Ok(())
    }
}
