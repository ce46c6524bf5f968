//! Shared text rendering for linear combinations.

use crate::scalars::CycScalar;

/// Renders `sum c_i * m_i`. `None` stands for the unit monomial. A monomial
/// text beginning with `"1 ox "` has its leading unit replaced by the
/// coefficient, so tensor terms print as `2 ox a` rather than `2*1 ox a`.
pub(crate) fn render_linear<'a>(items: impl IntoIterator<Item = (Option<String>, &'a CycScalar)>) -> String {
    let items: Vec<_> = items.into_iter().collect();
    if items.is_empty() {
        return "0".to_string();
    }
    let single = items.len() == 1;
    let mut out = String::new();
    for (idx, (mono, c)) in items.into_iter().enumerate() {
        let neg = c.leading_is_negative();
        let abs = if neg { -c } else { c.clone() };
        let coeff_text = |alone: bool| {
            if abs.is_compound() && !(alone && single && !neg) {
                format!("({})", abs.render_q_first())
            } else {
                abs.render_q_first()
            }
        };
        let body = match mono {
            None => coeff_text(true),
            Some(m) if abs.is_one() => m,
            Some(m) => {
                if let Some(rest) = m.strip_prefix("1 ox ") {
                    format!("{} ox {}", coeff_text(false), rest)
                } else {
                    format!("{}*{}", coeff_text(false), m)
                }
            }
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_signs_and_compound_coefficients() {
        let one = CycScalar::one();
        let c = CycScalar::from_ints(1, -1);
        let s = render_linear(vec![(Some("a*d".to_string()), &one), (Some("beta*gamma".to_string()), &c)]);
        assert_eq!(s, "a*d - (q - 1)*beta*gamma");
        let m = CycScalar::from_int(-1);
        assert_eq!(render_linear(vec![(Some("x".to_string()), &m)]), "-x");
        assert_eq!(render_linear(Vec::new()), "0");
        let c2 = CycScalar::from_int(2);
        assert_eq!(render_linear(vec![(Some("1 ox a".to_string()), &c2)]), "2 ox a");
        let qm1 = CycScalar::from_ints(-1, 1);
        assert_eq!(render_linear(vec![(None, &qm1)]), "q - 1");
        assert_eq!(render_linear(vec![(None, &c2), (None, &c)]), "2 - (q - 1)");
    }
}
