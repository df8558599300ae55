//! JSON renderings of characteristic polynomials, certificates and
//! interpolation records. Keys come out sorted, so output is byte-stable.

use multiarr_core::coxeter::InterpolationRecord;
use multiarr_core::exact::format_rational;
use multiarr_core::freeness::{Evidence, FreenessCertificate, Witness};
use multiarr_core::{CharPoly, MultiPoly, UniPoly};
use serde_json::{json, Value};

/// Variable names used when printing polynomials in `n` variables.
pub fn variable_names(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

fn poly_string(p: &MultiPoly) -> String {
    let names = variable_names(p.nvars());
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    p.to_string_with(&refs)
}

/// Coefficients from the constant term up, as exact rational strings.
pub fn coefficients(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

pub fn chi_json(chi: &CharPoly) -> Value {
    json!({
        "coefficients": coefficients(chi.poly()),
        "factored": chi.factored_string(),
    })
}

/// `with_basis` controls whether Saito bases are written out in full.
pub fn certificate_json(c: &FreenessCertificate, with_basis: bool) -> Value {
    match c {
        FreenessCertificate::Free { exponents, evidence } => json!({
            "verdict": c.verdict_name(),
            "exponents": exponents,
            "evidence": evidence_json(evidence, with_basis),
        }),
        FreenessCertificate::NonFree { witness } => json!({
            "verdict": c.verdict_name(),
            "witness": witness_json(witness, with_basis),
        }),
        FreenessCertificate::Undetermined { cutoff } => json!({
            "verdict": c.verdict_name(),
            "cutoff": cutoff,
        }),
    }
}

fn evidence_json(e: &Evidence, with_basis: bool) -> Value {
    let mut v = match e {
        Evidence::Saito(b) => {
            let mut v = json!({ "det_scalar": format_rational(&b.det_scalar) });
            if with_basis {
                let basis: Vec<Vec<String>> = b.basis.iter().map(|d| d.iter().map(poly_string).collect()).collect();
                v["basis"] = json!(basis);
            }
            v
        }
        Evidence::Rank3Criterion { chi, hyperplane, restriction_exponents } => json!({
            "chi": chi_json(chi),
            "hyperplane": hyperplane,
            "restriction_exponents": restriction_exponents,
        }),
        Evidence::ExtensionRecursion { restriction, localizations } => json!({
            "restriction": certificate_json(restriction, with_basis),
            "localizations_checked": localizations,
        }),
        Evidence::LowRank => json!({}),
    };
    v["kind"] = json!(e.kind());
    v
}

fn witness_json(w: &Witness, with_basis: bool) -> Value {
    let mut v = match w {
        Witness::HilbertMismatch { degree, dims } => json!({ "degree": degree, "dims": dims }),
        Witness::NonFactoringChi { chi } => json!({ "chi": chi_json(chi) }),
        Witness::ExponentMismatch { chi, hyperplane, restriction_exponents } => json!({
            "chi": chi_json(chi),
            "hyperplane": hyperplane,
            "restriction_exponents": restriction_exponents,
        }),
        Witness::NonFreeLocalization { flat, inner } => json!({
            "flat": flat.indices(),
            "inner": certificate_json(inner, with_basis),
        }),
        Witness::NonFreeRestriction { inner } => json!({ "inner": certificate_json(inner, with_basis) }),
    };
    v["kind"] = json!(w.kind());
    v
}

pub fn interpolation_json(r: &InterpolationRecord) -> Value {
    json!({
        "m": r.m,
        "subarrangement_exponents": r.subarrangement_exponents(),
        "parity_condition": r.parity_condition,
        "qualifies": r.qualifies(),
        "plus_side": certificate_json(&r.plus_side, false),
        "minus_side": certificate_json(&r.minus_side, false),
        "predicted_plus": r.predicted_plus,
        "predicted_minus": r.predicted_minus,
        "functional_equation": r.functional_equation,
        "predicted_chi": r.predicted_chi,
        "equivalence": r.equivalence_holds(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use multiarr_core::freeness::{is_free_multi, SaitoBasis};
    use multiarr_core::{Arrangement, Multiarrangement};

    #[test]
    fn free_certificate_fields() {
        let a = Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1]]).unwrap();
        let c = is_free_multi(&Multiarrangement::new(a, vec![2, 1]).unwrap());
        let v = certificate_json(&c, true);
        assert_eq!(v["verdict"], "free");
        assert_eq!(v["exponents"], json!([1, 2]));
        assert_eq!(v["evidence"]["kind"], "saito");
        assert_eq!(v["evidence"]["basis"].as_array().unwrap().len(), 2);
        assert!(certificate_json(&c, false)["evidence"].get("basis").is_none());
    }

    #[test]
    fn nested_witness() {
        let inner = FreenessCertificate::NonFree { witness: Witness::HilbertMismatch { degree: 3, dims: vec![0, 1] } };
        let c = FreenessCertificate::NonFree { witness: Witness::NonFreeRestriction { inner: Box::new(inner) } };
        let v = certificate_json(&c, false);
        assert_eq!(v["witness"]["kind"], "non_free_restriction");
        assert_eq!(v["witness"]["inner"]["witness"]["dims"], json!([0, 1]));
        let empty = FreenessCertificate::Free {
            exponents: vec![],
            evidence: Evidence::Saito(SaitoBasis { basis: vec![], det_scalar: multiarr_core::exact::ratio(-3, 2) }),
        };
        assert_eq!(certificate_json(&empty, false)["evidence"]["det_scalar"], "-3/2");
    }

    #[test]
    fn names() {
        assert_eq!(variable_names(3), ["x", "y", "z"]);
        assert_eq!(variable_names(5)[4], "x5");
    }
}
