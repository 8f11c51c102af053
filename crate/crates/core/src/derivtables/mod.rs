//! `A_{n,k,a,b}(q)`, `B_{n,k,a,b}(q)` and `A_{n,c}(q)`, each computed by
//! recurrence, by iterating `D_q` on formal symbols, and by brute-force
//! statistic sums; plus the closed product formula for `A_{n,c}(q)`.

mod oracle;
mod recur;
mod rewrite;
mod table;

pub use oracle::{oracle_tables, OracleTables};
pub use recur::{a_table, ac_table, b_table};
pub use rewrite::{
    rewrite_a_table, rewrite_ac_table, rewrite_b_table, rewrite_comp_sec, rewrite_comp_tan,
    rewrite_phi_table, rewrite_sec, rewrite_tan, CompSym, FormalSum, PhiSym, SecSym, Symbol,
    TanSym,
};
pub use table::{CompTable, TripleKey, TripleKind, TripleTable};

use crate::error::{Error, Result};
use crate::poly::{q_multinomial, QPoly};
use crate::series::QTanCoeffs;
use crate::tcomb::TComposition;

/// `[n; c_0,...,c_m]_q A_{c_0} ... A_{c_{m-1}} A^Sec_{c_m}` for `μc >= 1`;
/// `A_n(q)` itself when `c = (n)`.
///
/// `coeffs` must reach `n`.
pub fn product_formula(c: &TComposition, coeffs: &QTanCoeffs) -> Result<QPoly> {
    let n = c.n();
    if n > coeffs.n_max() {
        return Err(Error::Usage(format!(
            "coefficients reach {} but the composition has n = {n}",
            coeffs.n_max()
        )));
    }
    let parts = c.parts();
    if parts.len() == 1 {
        return Ok(coeffs.a(n).clone());
    }
    let (last, init) = parts.split_last().expect("at least two parts");
    let mut p = q_multinomial(n, parts)?;
    for &ci in init {
        p = &p * coeffs.a(ci);
    }
    Ok(&p * coeffs.a_sec(*last))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_formula_examples() {
        let coeffs = QTanCoeffs::from_series(8);
        let c = |v: &[usize]| TComposition::new(v.to_vec()).unwrap();
        let p = |s: &str| s.parse::<QPoly>().unwrap();
        assert_eq!(
            product_formula(&c(&[2, 1, 1, 0]), &coeffs).unwrap(),
            p("(1+q+q^2)(1+q+q^2+q^3)")
        );
        assert_eq!(product_formula(&c(&[0, 4]), &coeffs).unwrap(), p("q^2+q^3+2q^4+q^5"));
        assert_eq!(product_formula(&c(&[0, 1, 0]), &coeffs).unwrap(), QPoly::one());
        assert!(product_formula(&c(&[9]), &coeffs).is_err());
        let table = ac_table(8);
        for (c, poly) in table.entries() {
            assert_eq!(&product_formula(c, &coeffs).unwrap(), poly, "{c}");
        }
    }
}
