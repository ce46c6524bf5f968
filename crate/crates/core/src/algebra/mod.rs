//! Graded presentations, normal forms and polynomials.

pub mod confluence;
pub mod grade;
pub mod poly;
pub mod presentation;
pub mod word;

pub use confluence::{check_local_confluence, Ambiguity, ConfluenceReport};
pub use grade::{GradeOf, Z3};
pub use poly::Poly;
pub use presentation::{Generator, GeneratorKind, Presentation, PresentationBuilder, Rule, RuleOrigin};
pub use word::{Letter, Monomial, Terms};
