//! Named arrangements, so that common inputs need no fixture files.
//!
//! Any root system label accepted by the core crate (`A1`..`A4`, `D4`) is
//! also a builtin.

use multiarr_core::coxeter::{parse_root_system, root_system, shi_catalan, Parity, RootKind};
use multiarr_core::Arrangement;

use crate::format::ArrangementDoc;

/// Builtin names with a one-line description each.
pub const BUILTINS: &[(&str, &str)] = &[
    ("boolean3", "coordinate hyperplanes x, y, z"),
    ("A2", "braid arrangement of type A2 (projected coordinates)"),
    ("A3", "braid arrangement of type A3 (projected coordinates)"),
    ("D4", "reflection arrangement of type D4"),
    ("shi-A2-cone", "cone of the Shi arrangement of type A2"),
    ("generic4", "four generic planes x, y, z, x+y+z"),
    ("rank2-free-45", "x^3 y^3 (x-y)(x-2y)(x-3y), free with exponents (4,5)"),
    ("a3-free-899", "x^4 y^4 z^4 (x+y)^5 (y+z)^5 (x+y+z)^4, free with exponents (8,9,9)"),
    ("a3-free-899-shifted-ext", "an extension of a3-free-899 with shifted translate ranges"),
    ("parity-violation", "x^2 y^2 (x+y), violating the parity condition"),
    ("no-positive-system", "xyz(x+y)(x-z)(y-z)(x+y-2z), locally A2 without a positive system"),
    ("translated-lines-nonfree", "cone of x(x-1)y(y-1)(x+y)"),
    ("translated-lines-free", "cone of x(x-1)y(y-1)(x+y-1)"),
];

fn ints(dim: usize, forms: &[(&[i64], i64)]) -> Arrangement {
    Arrangement::from_int_affine(dim, forms).expect("builtin arrangements are valid")
}

fn doc(a: &Arrangement, mult: &[u32]) -> ArrangementDoc {
    ArrangementDoc::with_mult(a, mult)
}

fn simple(a: &Arrangement) -> ArrangementDoc {
    ArrangementDoc::from_arrangement(a)
}

/// Forms `α - k w` for each `k` in the given ranges, then `w` itself.
fn translate_extension(forms: &[(&[i64], std::ops::RangeInclusive<i64>)]) -> Arrangement {
    let mut out: Vec<(Vec<i64>, i64)> = Vec::new();
    for (alpha, ks) in forms {
        for k in ks.clone() {
            let mut v = alpha.to_vec();
            v.push(-k);
            out.push((v, 0));
        }
    }
    let dim = forms[0].0.len() + 1;
    let mut w = vec![0; dim];
    w[dim - 1] = 1;
    out.push((w, 0));
    let refs: Vec<(&[i64], i64)> = out.iter().map(|(v, c)| (v.as_slice(), *c)).collect();
    ints(dim, &refs)
}

pub fn builtin(name: &str) -> Option<ArrangementDoc> {
    const X: &[i64] = &[1, 0, 0];
    const Y: &[i64] = &[0, 1, 0];
    const Z: &[i64] = &[0, 0, 1];
    const XY: &[i64] = &[1, 1, 0];
    const YZ: &[i64] = &[0, 1, 1];
    const XYZ: &[i64] = &[1, 1, 1];
    let d = match name {
        "boolean3" => simple(&ints(3, &[(X, 0), (Y, 0), (Z, 0)])),
        "shi-A2-cone" => {
            let a2 = root_system(RootKind::A, 2).ok()?;
            simple(&shi_catalan(&a2, 1, Parity::Shi).ok()?)
        }
        "generic4" => simple(&ints(3, &[(X, 0), (Y, 0), (Z, 0), (XYZ, 0)])),
        "rank2-free-45" => doc(
            &ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0), (&[1, -2], 0), (&[1, -3], 0)]),
            &[3, 3, 1, 1, 1],
        ),
        "a3-free-899" => doc(&ints(3, &[(X, 0), (Y, 0), (Z, 0), (XY, 0), (YZ, 0), (XYZ, 0)]), &[4, 4, 4, 5, 5, 4]),
        "a3-free-899-shifted-ext" => simple(&translate_extension(&[
            (X, -1..=2),
            (Y, -1..=2),
            (Z, -1..=2),
            (XY, -1..=3),
            (YZ, -1..=3),
            (XYZ, 0..=3),
        ])),
        "parity-violation" => doc(&ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)]), &[2, 2, 1]),
        "no-positive-system" => simple(&ints(
            3,
            &[(X, 0), (Y, 0), (Z, 0), (XY, 0), (&[1, 0, -1], 0), (&[0, 1, -1], 0), (&[1, 1, -2], 0)],
        )),
        "translated-lines-nonfree" => simple(
            &ints(2, &[(&[1, 0], 0), (&[1, 0], -1), (&[0, 1], 0), (&[0, 1], -1), (&[1, 1], 0)]).cone(),
        ),
        "translated-lines-free" => simple(
            &ints(2, &[(&[1, 0], 0), (&[1, 0], -1), (&[0, 1], 0), (&[0, 1], -1), (&[1, 1], -1)]).cone(),
        ),
        other => simple(&parse_root_system(other).ok()?.arrangement()),
    };
    Some(d)
}
