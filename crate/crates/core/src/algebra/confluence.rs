//! Local confluence via the diamond lemma: every overlap and inclusion
//! ambiguity between two rules must resolve to the same normal form.

use crate::algebra::presentation::Presentation;
use crate::algebra::word::{add_terms_scaled, Letter, Monomial, Terms};
use crate::report::{CheckReport, Status};
use crate::scalars::CycScalar;

#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub word: Vec<Letter>,
    pub first_rule: usize,
    pub second_rule: usize,
    /// Difference of the two fully reduced resolutions, or the reduction error.
    pub residue: Result<Terms, String>,
}

impl Ambiguity {
    pub fn resolves(&self) -> bool {
        matches!(&self.residue, Ok(t) if t.is_empty())
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub ambiguities: Vec<Ambiguity>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.ambiguities.iter().all(Ambiguity::resolves)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Ambiguity> {
        self.ambiguities.iter().filter(|a| !a.resolves())
    }

    pub fn to_check(&self, name: &str, p: &Presentation) -> CheckReport {
        let mut rep = CheckReport::new(name, if self.passed() { Status::Pass } else { Status::Fail });
        for a in self.failures() {
            let word = p.render_monomial(&Monomial(a.word.clone()));
            match &a.residue {
                Ok(t) => rep.residues.push(format!("{word}: {}", p.render_terms(t))),
                Err(e) => rep.residues.push(format!("{word}: {e}")),
            }
        }
        rep.notes.push(format!(
            "{}: {} ambiguities checked, {} unresolved",
            self.presentation,
            self.ambiguities.len(),
            self.failures().count()
        ));
        rep
    }
}

pub fn check_local_confluence(p: &Presentation) -> ConfluenceReport {
    let rules = p.rules();
    let mut ambiguities = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        for (j, r2) in rules.iter().enumerate() {
            let (l1, l2) = (&r1.lhs, &r2.lhs);
            // r2 inside r1
            if l2.len() <= l1.len() {
                for pos in 0..=(l1.len() - l2.len()) {
                    if (i == j && pos == 0) || l1[pos..pos + l2.len()] != l2[..] {
                        continue;
                    }
                    ambiguities.push(resolve(p, l1.clone(), (0, i), (pos, j)));
                }
            }
            // proper overlap: suffix of r1 equals prefix of r2
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] != l2[..k] {
                    continue;
                }
                let mut word = l1.clone();
                word.extend_from_slice(&l2[k..]);
                ambiguities.push(resolve(p, word, (0, i), (l1.len() - k, j)));
            }
        }
    }
    ConfluenceReport {
        presentation: p.name().to_string(),
        ambiguities,
    }
}

fn resolve(p: &Presentation, word: Vec<Letter>, a: (usize, usize), b: (usize, usize)) -> Ambiguity {
    let left = p.reduce_terms(p.apply_rule_at(&word, a.0, a.1));
    let right = p.reduce_terms(p.apply_rule_at(&word, b.0, b.1));
    let residue = match (left, right) {
        (Ok(l), Ok(r)) => {
            let mut d = l;
            add_terms_scaled(&mut d, &r, &CycScalar::from_int(-1));
            Ok(d)
        }
        (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
    };
    Ambiguity {
        word,
        first_rule: a.1,
        second_rule: b.1,
        residue,
    }
}
