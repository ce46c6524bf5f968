//! Graded presentations: generators, rewrite rules and normal-form reduction.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use crate::algebra::grade::{GradeOf, Z3};
use crate::algebra::word::{add_term, Letter, Monomial, Terms};
use crate::error::{AlgebraError, Result};
use crate::render::render_linear;
use crate::scalars::CycScalar;

pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    Plain,
    /// `g^m = 0`
    Nilpotent(u32),
    /// Laurent exponents allowed.
    Invertible,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub name: String,
    pub grade: Z3,
    pub kind: GeneratorKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RuleOrigin {
    /// Written out in the presentation.
    Explicit,
    /// `g^m -> 0` from a nilpotent generator.
    Nilpotency,
    /// Swap rule conjugated onto inverse letters.
    InverseSwap,
    /// `g g^-1 -> 1` and `g^-1 g -> 1`.
    Cancellation,
}

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Vec<Letter>,
    pub rhs: Terms,
    pub origin: RuleOrigin,
}

impl Rule {
    /// Rules that are part of the defining ideal (as opposed to bookkeeping
    /// rules derived for inverse letters).
    pub fn is_defining(&self) -> bool {
        matches!(self.origin, RuleOrigin::Explicit | RuleOrigin::Nilpotency)
    }
}

#[derive(Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<Generator>,
    rules: Vec<Rule>,
    by_first: HashMap<Letter, Vec<usize>>,
    max_steps: usize,
}

pub struct PresentationBuilder {
    name: String,
    generators: Vec<Generator>,
    rules: Vec<(Vec<Letter>, Terms)>,
    max_steps: usize,
}

const RESERVED: &[&str] = &["q", "ox", "lambda"];

impl PresentationBuilder {
    pub fn generator(mut self, name: &str, grade: i64, kind: GeneratorKind) -> Self {
        self.generators.push(Generator {
            name: name.to_string(),
            grade: Z3::new(grade),
            kind,
        });
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rule(mut self, lhs: Vec<Letter>, rhs: Terms) -> Self {
        self.rules.push((lhs, rhs));
        self
    }

    /// Adds a rule whose sides are given as expressions, e.g. `"d*a"` and
    /// `"a*d - (q - 1)*beta*gamma"`.
    pub fn rule_text(self, lhs: &str, rhs: &str) -> Result<Self> {
        let lhs_terms = crate::expr::parse_raw(lhs, &self.generators)?;
        let lhs_word = single_word(&lhs_terms)
            .ok_or_else(|| AlgebraError::InvalidPresentation(format!("rule left side `{lhs}` is not a single word")))?;
        let rhs_terms = crate::expr::parse_raw(rhs, &self.generators)?;
        Ok(self.rule(lhs_word, rhs_terms))
    }

    pub fn max_steps(mut self, n: usize) -> Self {
        self.max_steps = n;
        self
    }

    pub fn build(self) -> Result<Presentation> {
        let invalid = |m: String| AlgebraError::InvalidPresentation(m);
        let mut seen = HashSet::new();
        for g in &self.generators {
            if !is_identifier(&g.name) || RESERVED.contains(&g.name.as_str()) {
                return Err(invalid(format!("`{}` is not a usable generator name", g.name)));
            }
            if !seen.insert(g.name.clone()) {
                return Err(invalid(format!("duplicate generator `{}`", g.name)));
            }
            if let GeneratorKind::Nilpotent(m) = g.kind {
                if m < 2 {
                    return Err(invalid(format!("nilpotency order of `{}` must be at least 2", g.name)));
                }
            }
        }
        let grade = |l: &Letter| -> Z3 {
            let g = self.generators[l.index()].grade;
            if l.inverse {
                -g
            } else {
                g
            }
        };
        let word_grade = |w: &[Letter]| w.iter().fold(Z3::ZERO, |acc, l| acc + grade(l));
        let invertible = |l: &Letter| self.generators[l.index()].kind == GeneratorKind::Invertible;

        let mut rules = Vec::new();
        for (lhs, rhs) in &self.rules {
            if lhs.is_empty() {
                return Err(invalid("rule with empty left side".into()));
            }
            if lhs.iter().any(|l| l.index() >= self.generators.len()) {
                return Err(invalid("rule refers to an unknown generator".into()));
            }
            if lhs.iter().any(|l| l.inverse) {
                return Err(invalid("rule left sides may not contain inverse letters".into()));
            }
            let g = word_grade(lhs);
            for m in rhs.keys() {
                if word_grade(&m.0) != g {
                    return Err(invalid(format!(
                        "rule `{} -> {}` is not homogeneous",
                        render_word(&self.generators, lhs),
                        render_terms_with(&self.generators, rhs)
                    )));
                }
            }
            rules.push(Rule {
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                origin: RuleOrigin::Explicit,
            });
        }
        for (i, g) in self.generators.iter().enumerate() {
            if let GeneratorKind::Nilpotent(m) = g.kind {
                rules.push(Rule {
                    lhs: vec![Letter::new(i); m as usize],
                    rhs: Terms::new(),
                    origin: RuleOrigin::Nilpotency,
                });
            }
        }

        let mut derived = Vec::new();
        for r in &rules {
            if !r.lhs.iter().any(invertible) {
                continue;
            }
            let (x, y) = match r.lhs.as_slice() {
                [x, y] if x.gen != y.gen => (*x, *y),
                _ => {
                    return Err(invalid(format!(
                        "rules involving invertible generators must be swaps of two distinct letters (`{}`)",
                        render_word(&self.generators, &r.lhs)
                    )))
                }
            };
            let swapped = Monomial(vec![y, x]);
            let c = match (r.rhs.len(), r.rhs.get(&swapped)) {
                (1, Some(c)) => c.clone(),
                _ => {
                    return Err(invalid(format!(
                        "rule `{}` involves an invertible generator but is not a scalar swap",
                        render_word(&self.generators, &r.lhs)
                    )))
                }
            };
            for (xi, yi) in [(true, false), (false, true), (true, true)] {
                let lx = if xi { x.inverted() } else { x };
                let ly = if yi { y.inverted() } else { y };
                if (xi && !invertible(&x)) || (yi && !invertible(&y)) {
                    continue;
                }
                let coeff = if xi ^ yi { c.inv()? } else { c.clone() };
                let mut rhs = Terms::new();
                rhs.insert(Monomial(vec![ly, lx]), coeff);
                derived.push(Rule {
                    lhs: vec![lx, ly],
                    rhs,
                    origin: RuleOrigin::InverseSwap,
                });
            }
        }
        rules.extend(derived);
        for (i, g) in self.generators.iter().enumerate() {
            if g.kind == GeneratorKind::Invertible {
                for lhs in [vec![Letter::new(i), Letter::inv(i)], vec![Letter::inv(i), Letter::new(i)]] {
                    let mut rhs = Terms::new();
                    rhs.insert(Monomial::one(), CycScalar::one());
                    rules.push(Rule {
                        lhs,
                        rhs,
                        origin: RuleOrigin::Cancellation,
                    });
                }
            }
        }

        let mut by_first: HashMap<Letter, Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            by_first.entry(r.lhs[0]).or_default().push(i);
        }
        Ok(Presentation {
            name: self.name,
            generators: self.generators,
            rules,
            by_first,
            max_steps: self.max_steps,
        })
    }
}

fn single_word(terms: &Terms) -> Option<Vec<Letter>> {
    match terms.iter().next() {
        Some((m, c)) if terms.len() == 1 && c.is_one() && !m.is_one() => Some(m.0.clone()),
        _ => None,
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    pub fn builder(name: &str) -> PresentationBuilder {
        PresentationBuilder {
            name: name.to_string(),
            generators: Vec::new(),
            rules: Vec::new(),
            max_steps: DEFAULT_MAX_STEPS,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn defining_rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().filter(|r| r.is_defining())
    }

    pub fn max_steps(&self) -> usize {
        self.max_steps
    }

    /// Same presentation with a different rewrite-step guard.
    pub fn with_max_steps(&self, max_steps: usize) -> Presentation {
        Presentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            rules: self.rules.clone(),
            by_first: self.by_first.clone(),
            max_steps,
        }
    }

    /// Same generators, no relations.
    pub fn free_version(&self, name: &str) -> Result<Presentation> {
        let mut b = Presentation::builder(name).max_steps(self.max_steps);
        for g in &self.generators {
            b = b.generator(&g.name, g.grade.as_i64(), g.kind);
        }
        b.build()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.generator_index(name)
            .map(Letter::new)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn is_invertible(&self, gen: usize) -> bool {
        self.generators[gen].kind == GeneratorKind::Invertible
    }

    pub fn letter_grade(&self, l: Letter) -> Z3 {
        let g = self.generators[l.index()].grade;
        if l.inverse {
            -g
        } else {
            g
        }
    }

    pub fn monomial_grade(&self, m: &Monomial) -> Z3 {
        m.0.iter().fold(Z3::ZERO, |acc, l| acc + self.letter_grade(*l))
    }

    pub fn terms_grade(&self, terms: &Terms) -> GradeOf {
        GradeOf::combine(terms.keys().map(|m| self.monomial_grade(m)))
    }

    /// All letters: plain generators plus inverses of invertible ones.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            out.push(Letter::new(i));
            if g.kind == GeneratorKind::Invertible {
                out.push(Letter::inv(i));
            }
        }
        out
    }

    /// First (leftmost position, then rule order) redex in `w`.
    pub fn find_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for i in 0..w.len() {
            if let Some(cands) = self.by_first.get(&w[i]) {
                for &r in cands {
                    if w[i..].starts_with(&self.rules[r].lhs) {
                        return Some((i, r));
                    }
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[Letter]) -> bool {
        self.find_redex(w).is_none()
    }

    /// One rewrite step: replace the left side of `rule` at `pos` in `w`.
    pub fn apply_rule_at(&self, w: &[Letter], pos: usize, rule: usize) -> Terms {
        let r = &self.rules[rule];
        debug_assert!(w[pos..].starts_with(&r.lhs));
        let mut out = Terms::new();
        for (rm, rc) in &r.rhs {
            let mut v = Vec::with_capacity(w.len() + rm.degree());
            v.extend_from_slice(&w[..pos]);
            v.extend_from_slice(&rm.0);
            v.extend_from_slice(&w[pos + r.lhs.len()..]);
            add_term(&mut out, Monomial(v), rc.clone());
        }
        out
    }

    /// Normal form of a linear combination of arbitrary words.
    pub fn reduce_terms(&self, terms: Terms) -> Result<Terms> {
        let mut pending = terms;
        let mut out = Terms::new();
        let mut steps = 0usize;
        while let Some((m, c)) = pending.pop_last() {
            match self.find_redex(&m.0) {
                None => add_term(&mut out, m, c),
                Some((pos, r)) => {
                    steps += 1;
                    if steps > self.max_steps {
                        return Err(AlgebraError::StepLimit {
                            presentation: self.name.clone(),
                            limit: self.max_steps,
                        });
                    }
                    let rule = &self.rules[r];
                    let tail = pos + rule.lhs.len();
                    for (rm, rc) in &rule.rhs {
                        let mut v = Vec::with_capacity(m.degree() + rm.degree());
                        v.extend_from_slice(&m.0[..pos]);
                        v.extend_from_slice(&rm.0);
                        v.extend_from_slice(&m.0[tail..]);
                        add_term(&mut pending, Monomial(v), &c * rc);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn reduce_word(&self, w: &[Letter]) -> Result<Terms> {
        let mut t = Terms::new();
        t.insert(Monomial(w.to_vec()), CycScalar::one());
        self.reduce_terms(t)
    }

    /// Number of normal-form words of each length `0..=max_degree`.
    /// Number of normal monomials in each degree `0..=max_degree`.
    pub fn dimension_census(&self, max_degree: usize) -> Vec<usize> {
        self.normal_words(max_degree).iter().map(Vec::len).collect()
    }

    /// Normal words grouped by degree `0..=max_degree`, each group in
    /// generation order.
    pub fn normal_words(&self, max_degree: usize) -> Vec<Vec<Vec<Letter>>> {
        let alphabet = self.alphabet();
        let mut out: Vec<Vec<Vec<Letter>>> = vec![vec![Vec::new()]];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in out.last().expect("nonempty") {
                for &l in &alphabet {
                    let mut cand = w.clone();
                    cand.push(l);
                    if !self.has_suffix_redex(&cand) {
                        next.push(cand);
                    }
                }
            }
            out.push(next);
        }
        out
    }

    fn has_suffix_redex(&self, w: &[Letter]) -> bool {
        self.rules.iter().any(|r| w.ends_with(&r.lhs))
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        render_word(&self.generators, &m.0)
    }

    pub fn render_terms(&self, terms: &Terms) -> String {
        render_terms_with(&self.generators, terms)
    }

    /// Text form: a `presentation` header, one line per generator
    /// (`name grade [nilpotent m | invertible]`) and one per explicit rule
    /// (`lhs -> rhs`).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "presentation {}", self.name);
        for g in &self.generators {
            let _ = match g.kind {
                GeneratorKind::Plain => writeln!(s, "{} {}", g.name, g.grade),
                GeneratorKind::Nilpotent(m) => writeln!(s, "{} {} nilpotent {}", g.name, g.grade, m),
                GeneratorKind::Invertible => writeln!(s, "{} {} invertible", g.name, g.grade),
            };
        }
        for r in self.rules.iter().filter(|r| r.origin == RuleOrigin::Explicit) {
            let _ = writeln!(s, "{} -> {}", render_word(&self.generators, &r.lhs), self.render_terms(&r.rhs));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Presentation> {
        let mut builder: Option<PresentationBuilder> = None;
        let mut pending_rules = Vec::new();
        let mut generators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: String| AlgebraError::InvalidPresentation(format!("line {}: {}", lineno + 1, m));
            if let Some((lhs, rhs)) = line.split_once("->") {
                pending_rules.push((lineno, lhs.trim().to_string(), rhs.trim().to_string()));
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "presentation" {
                if fields.len() != 2 || builder.is_some() {
                    return Err(err("expected a single `presentation <name>` line".into()));
                }
                builder = Some(Presentation::builder(fields[1]));
                continue;
            }
            if !pending_rules.is_empty() {
                return Err(err("generators must be declared before rules".into()));
            }
            let grade: i64 = fields
                .get(1)
                .and_then(|g| g.parse().ok())
                .ok_or_else(|| err(format!("expected `name grade`, got `{line}`")))?;
            let kind = match &fields[2..] {
                [] => GeneratorKind::Plain,
                ["invertible"] => GeneratorKind::Invertible,
                ["nilpotent", m] => GeneratorKind::Nilpotent(m.parse().map_err(|_| err(format!("bad nilpotency `{m}`")))?),
                _ => return Err(err(format!("unrecognised generator line `{line}`"))),
            };
            generators.push((fields[0].to_string(), grade, kind));
        }
        let mut b = builder.unwrap_or_else(|| Presentation::builder("custom"));
        for (name, grade, kind) in generators {
            b = b.generator(&name, grade, kind);
        }
        for (lineno, lhs, rhs) in pending_rules {
            b = b.rule_text(&lhs, &rhs).map_err(|e| AlgebraError::InvalidPresentation(format!("line {}: {}", lineno + 1, e)))?;
        }
        b.build()
    }
}

pub(crate) fn render_word(gens: &[Generator], w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let n = (j - i) as i64 * w[i].sign();
        let name = &gens[w[i].index()].name;
        if n == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{n}"));
        }
        i = j;
    }
    parts.join("*")
}

pub(crate) fn render_terms_with(gens: &[Generator], terms: &Terms) -> String {
    render_linear(terms.iter().map(|(m, c)| {
        let text = if m.is_one() { None } else { Some(render_word(gens, &m.0)) };
        (text, c)
    }))
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.generators == other.generators
    }
}

/// Group normal terms by exponent vector; handy for PBW-type presentations.
pub fn exponent_table(p: &Presentation, terms: &Terms) -> BTreeMap<Vec<i64>, CycScalar> {
    terms
        .iter()
        .map(|(m, c)| (m.exponents(p.generators().len()), c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{mq2, uqgl2, PRESET_NAMES};

    #[test]
    fn rules_are_sound() {
        for name in PRESET_NAMES {
            let p = crate::presets::preset(name).unwrap();
            for r in p.rules() {
                let lhs = p.reduce_word(&r.lhs).unwrap();
                let rhs = p.reduce_terms(r.rhs.clone()).unwrap();
                assert_eq!(lhs, rhs, "{name}: {}", p.render_monomial(&Monomial(r.lhs.clone())));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for name in PRESET_NAMES {
            let p = crate::presets::preset(name).unwrap();
            let back = Presentation::from_text(&p.to_text()).unwrap();
            assert_eq!(*p, back, "{name}");
        }
    }

    #[test]
    fn inverse_letters_cancel() {
        let u = uqgl2();
        let l = u.letter("U").unwrap();
        let t = u.reduce_word(&[l, l.inverted()]).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.contains_key(&Monomial::one()));
    }

    #[test]
    fn step_guard() {
        let m = mq2().with_max_steps(3);
        let d = m.letter("d").unwrap();
        let a = m.letter("a").unwrap();
        assert!(matches!(m.reduce_word(&[d, d, a, a]), Err(AlgebraError::StepLimit { .. })));
    }

    #[test]
    fn unknown_generator() {
        assert!(mq2().letter("zeta").is_err());
    }
}
