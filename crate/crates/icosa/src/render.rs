//! Human-readable renderings of Euler factors.

use icosa_core::lfactors::LocalLFactor;

use crate::json::cyclo_to_json;

/// `(1 - g_1 * q^-s)^-1 (1 - g_2 * q^-s)^-1 ...` with each `g_i` in the JSON
/// coefficient syntax.
pub fn euler_factor_json_style(l: &LocalLFactor) -> String {
    render(l, |g| cyclo_to_json(g).to_string())
}

/// The same product with `g_i` written as polynomials in `zeta_n`.
pub fn euler_factor_text(l: &LocalLFactor) -> String {
    render(l, |g| format!("({g})"))
}

fn render(l: &LocalLFactor, show: impl Fn(&icosa_core::exactnum::Cyclo) -> String) -> String {
    let q = l.q();
    l.inverse_roots()
        .roots()
        .iter()
        .map(|g| format!("(1 - {} * {q}^-s)^-1", show(g)))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use icosa_core::exactnum::Cyclo;
    use icosa_core::lfactors::local_l_factor;
    use icosa_core::params::Param;

    #[test]
    fn renders_each_root() {
        let l = local_l_factor(&Param::new(vec![Cyclo::one()]).unwrap(), 2).unwrap();
        assert_eq!(euler_factor_text(&l), "(1 - (1) * 2^-s)^-1");
        assert_eq!(
            euler_factor_json_style(&l),
            r#"(1 - {"coeffs":["1"],"conductor":1} * 2^-s)^-1"#
        );
    }
}
