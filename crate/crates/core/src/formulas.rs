//! Closed-form values for named families, used by sweeps and the
//! verification harness. `Z` and `γ_gr^Z` predictions are converted into each
//! other through `Z + γ_gr^Z = n`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generators::{FamilySpec, GraphExpr, ProductKind};

/// Every invariant the toolkit can compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    Grundy,
    GrundyTotal,
    GrundyZ,
    GrundyL,
    GrundyZk,
    ZeroForcing,
    KForcing,
    PropagationTime,
    Independence,
    VertexCover,
    KDomination,
    EdgeCover,
    GrundyCover,
}

impl Invariant {
    pub const ALL: [Invariant; 13] = [
        Invariant::Grundy,
        Invariant::GrundyTotal,
        Invariant::GrundyZ,
        Invariant::GrundyL,
        Invariant::GrundyZk,
        Invariant::ZeroForcing,
        Invariant::KForcing,
        Invariant::PropagationTime,
        Invariant::Independence,
        Invariant::VertexCover,
        Invariant::KDomination,
        Invariant::EdgeCover,
        Invariant::GrundyCover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Grundy => "gr",
            Invariant::GrundyTotal => "grt",
            Invariant::GrundyZ => "grz",
            Invariant::GrundyL => "grl",
            Invariant::GrundyZk => "grz-k",
            Invariant::ZeroForcing => "zf",
            Invariant::KForcing => "kf",
            Invariant::PropagationTime => "ptime",
            Invariant::Independence => "alpha",
            Invariant::VertexCover => "beta",
            Invariant::KDomination => "gamma-k",
            Invariant::EdgeCover => "rho",
            Invariant::GrundyCover => "rho-gr",
        }
    }

    /// Whether the invariant takes the `k` parameter.
    pub fn uses_k(self) -> bool {
        matches!(self, Invariant::GrundyZk | Invariant::KForcing | Invariant::KDomination)
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Invariant::ALL.iter().map(|i| i.name()).collect();
                Error::Input(format!("unknown invariant {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

impl Serialize for Invariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A predicted value and the formula it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub value: usize,
    pub formula: String,
}

fn pred(value: usize, formula: impl Into<String>) -> Option<Prediction> {
    Some(Prediction {
        value,
        formula: formula.into(),
    })
}

/// The closed-form value of `inv` on `expr`, when one is known.
pub fn predict(expr: &GraphExpr, inv: Invariant) -> Option<Prediction> {
    match inv {
        Invariant::GrundyZ => predict_grz(expr).or_else(|| {
            let z = predict_zf_direct(expr)?;
            let n = order(expr)?;
            pred(n - z.value, format!("n - ({})", z.formula))
        }),
        Invariant::ZeroForcing => predict_zf_direct(expr).or_else(|| {
            let g = predict_grz(expr)?;
            let n = order(expr)?;
            pred(n - g.value, format!("n - ({})", g.formula))
        }),
        Invariant::Grundy => predict_gr(expr),
        Invariant::GrundyTotal => predict_grt(expr),
        Invariant::GrundyL => predict_grl(expr),
        _ => None,
    }
}

/// Vertex count of an expression, without building it.
pub fn order(expr: &GraphExpr) -> Option<usize> {
    match expr {
        GraphExpr::Family(f) => match *f {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::Edgeless(n) => Some(n),
            FamilySpec::Star(n) => Some(n + 1),
            FamilySpec::Hypercube(d) => 1usize.checked_shl(d as u32),
            FamilySpec::Sierpinski { p, n } => p.checked_pow(n as u32),
            FamilySpec::GluedCliques(n) => (2 * n).checked_sub(1),
        },
        GraphExpr::Product(_, a, b) => order(a)?.checked_mul(order(b)?),
    }
}

fn family(expr: &GraphExpr) -> Option<FamilySpec> {
    match expr {
        GraphExpr::Family(f) => Some(*f),
        GraphExpr::Product(..) => None,
    }
}

/// Both factor orders of a commutative product.
fn factor_pairs(expr: &GraphExpr, kind: ProductKind) -> Vec<(&GraphExpr, &GraphExpr)> {
    match expr {
        GraphExpr::Product(k, a, b) if *k == kind => vec![(a, b), (b, a)],
        _ => vec![],
    }
}

fn predict_grz(expr: &GraphExpr) -> Option<Prediction> {
    if let Some(f) = family(expr) {
        return match f {
            FamilySpec::Hypercube(d) if d >= 1 => pred(1 << (d - 1), "2^(d-1)"),
            FamilySpec::Path(n) if n >= 2 => pred(n - 1, "n-1"),
            FamilySpec::Star(n) if n >= 2 => pred(2, "2"),
            FamilySpec::Complete(n) if n >= 2 => pred(1, "1"),
            FamilySpec::GluedCliques(n) if n >= 3 => pred(2, "2"),
            FamilySpec::Sierpinski { p, n } if p >= 2 && n >= 1 => {
                pred(sierpinski_grundy(p, n)?, "p^(n-1) + p(p^(n-1)-1)/2")
            }
            _ => None,
        };
    }
    for (a, b) in factor_pairs(expr, ProductKind::Cartesian) {
        match (family(a), family(b)) {
            (Some(FamilySpec::Complete(s)), Some(FamilySpec::Path(t))) if s >= 2 && t >= 2 => {
                return pred(s * (t - 1), "s(t-1)");
            }
            (Some(FamilySpec::Path(s)), Some(FamilySpec::Path(t))) if 2 <= s && s <= t => {
                return pred(s * (t - 1), "s(t-1)");
            }
            (Some(FamilySpec::Cycle(s)), Some(FamilySpec::Path(t))) if s >= 3 && t >= 2 => {
                return pred(s * t - s.min(2 * t), "st - min(s,2t)");
            }
            (Some(FamilySpec::Cycle(s)), Some(FamilySpec::Complete(t))) if s >= 4 && t >= 2 => {
                return pred(t * (s - 2), "t(s-2)");
            }
            (Some(FamilySpec::Cycle(s)), Some(FamilySpec::Cycle(t))) if 3 <= s && s <= t => {
                return if s == t && s % 2 == 1 {
                    pred(s * s - 2 * s + 1, "s^2 - 2s + 1")
                } else {
                    pred(s * t - 2 * s, "st - 2s")
                };
            }
            _ => {}
        }
        if let (Some(n), Some(FamilySpec::Path(t))) = (order(a), family(b)) {
            if 2 <= n && n <= t {
                return pred(n * (t - 1), "|V(G)|(t-1)");
            }
        }
    }
    for (a, b) in factor_pairs(expr, ProductKind::Strong) {
        if let (Some(FamilySpec::Path(s)), Some(FamilySpec::Path(t))) = (family(a), family(b)) {
            if s >= 2 && t >= 2 {
                return pred((s - 1) * (t - 1), "(s-1)(t-1)");
            }
        }
    }
    None
}

fn predict_zf_direct(expr: &GraphExpr) -> Option<Prediction> {
    if let Some(FamilySpec::Sierpinski { p, n }) = family(expr) {
        // p/2 (p^(n-2)(p-2) + 1), written to stay in integers for n = 1
        if p >= 2 && n >= 1 {
            let v = if n == 1 {
                p - 1
            } else {
                p * (p.checked_pow(n as u32 - 2)? * (p - 2) + 1) / 2
            };
            return pred(v, "p/2 (p^(n-2)(p-2) + 1)");
        }
    }
    for (a, b) in factor_pairs(expr, ProductKind::Strong) {
        if let (Some(FamilySpec::Cycle(s)), Some(FamilySpec::Path(t))) = (family(a), family(b)) {
            if s >= 3 && t >= 2 {
                return pred(2 * t + s - 2, "2t + s - 2");
            }
        }
    }
    if let GraphExpr::Product(ProductKind::Lexicographic, a, b) = expr {
        let even = |s: usize| s.is_multiple_of(2);
        match (family(a)?, family(b)?) {
            (FamilySpec::Path(s), FamilySpec::Path(t)) if s > 2 && t > 2 => {
                return if even(s) {
                    pred(s / 2 * (t + 1) - 1, "s/2 (t+1) - 1")
                } else {
                    pred(s * t - s.div_ceil(2) * (t - 1), "st - ceil(s/2)(t-1)")
                };
            }
            (FamilySpec::Path(s), FamilySpec::Cycle(t)) if s > 2 && t > 2 => {
                return if even(s) {
                    pred(s / 2 * (t + 2) - 1, "s/2 (t+2) - 1")
                } else {
                    pred(s * t - s.div_ceil(2) * (t - 2), "st - ceil(s/2)(t-2)")
                };
            }
            (FamilySpec::Cycle(s), FamilySpec::Cycle(t)) if s > 3 && t > 3 => {
                return if even(s) {
                    pred(s / 2 * (t + 2), "s/2 (t+2)")
                } else {
                    pred(s * t - s / 2 * (t - 2) - 1, "st - floor(s/2)(t-2) - 1")
                };
            }
            _ => {}
        }
    }
    None
}

fn sierpinski_grundy(p: usize, n: usize) -> Option<usize> {
    let q = p.checked_pow(n as u32 - 1)?;
    Some(q + p * (q - 1) / 2)
}

fn predict_gr(expr: &GraphExpr) -> Option<Prediction> {
    match family(expr)? {
        FamilySpec::Path(n) if n >= 2 => pred(n - 1, "n-1"),
        FamilySpec::Star(n) if n >= 2 => pred(n, "n"),
        FamilySpec::Complete(n) if n >= 1 => pred(1, "1"),
        FamilySpec::GluedCliques(n) if n >= 3 => pred(2, "2"),
        FamilySpec::Sierpinski { p, n } if p >= 2 && n >= 1 => {
            pred(sierpinski_grundy(p, n)?, "p^(n-1) + p(p^(n-1)-1)/2")
        }
        _ => None,
    }
}

fn predict_grt(expr: &GraphExpr) -> Option<Prediction> {
    match family(expr)? {
        FamilySpec::Complete(n) if n >= 2 => pred(2, "2"),
        FamilySpec::GluedCliques(n) if n >= 3 => pred(4, "4"),
        FamilySpec::Path(n) if n >= 2 && n % 2 == 0 => pred(n, "n"),
        _ => None,
    }
}

fn predict_grl(expr: &GraphExpr) -> Option<Prediction> {
    match family(expr)? {
        FamilySpec::Complete(n) if n >= 2 => pred(2, "2"),
        FamilySpec::GluedCliques(n) if n >= 3 => pred(4, "4"),
        FamilySpec::Star(n) if n >= 3 => pred(n + 1, "n+1"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, inv: Invariant) -> Option<usize> {
        predict(&GraphExpr::parse(text).unwrap(), inv).map(|p| p.value)
    }

    #[test]
    fn invariant_names_round_trip() {
        for inv in Invariant::ALL {
            assert_eq!(inv.name().parse::<Invariant>().unwrap(), inv);
        }
        assert!("nope".parse::<Invariant>().is_err());
    }

    #[test]
    fn named_values() {
        use Invariant::*;
        assert_eq!(p("star:5", GrundyZ), Some(2));
        assert_eq!(p("Q:4", GrundyZ), Some(8));
        assert_eq!(p("sier:3,3", ZeroForcing), Some(6));
        assert_eq!(p("sier:3,3", GrundyZ), Some(21));
        assert_eq!(p("sier:3,2", ZeroForcing), Some(3));
        assert_eq!(p("sier:4,2", ZeroForcing), Some(6));
        assert_eq!(p("sier:2,4", ZeroForcing), Some(1));
        assert_eq!(p("sier:2,1", ZeroForcing), Some(1));
        assert_eq!(p("cart(cyc:5,cyc:5)", GrundyZ), Some(16));
        assert_eq!(p("cart(cyc:5,cyc:4)", GrundyZ), Some(12));
        assert_eq!(p("cart(cyc:3,path:2)", GrundyZ), Some(3));
        assert_eq!(p("cart(path:4,path:3)", GrundyZ), Some(9));
        assert_eq!(p("cart(K:3,path:3)", ZeroForcing), Some(3));
        assert_eq!(p("strong(path:3,path:4)", GrundyZ), Some(6));
        assert_eq!(p("strong(cyc:4,path:3)", ZeroForcing), Some(8));
        assert_eq!(p("lex(path:3,path:3)", ZeroForcing), Some(5));
        assert_eq!(p("lex(path:4,path:3)", ZeroForcing), Some(7));
        assert_eq!(p("lex(path:3,cyc:4)", ZeroForcing), Some(8));
        assert_eq!(p("lex(cyc:5,cyc:4)", ZeroForcing), Some(15));
        assert_eq!(p("lex(cyc:4,cyc:4)", ZeroForcing), Some(12));
        assert_eq!(p("lex(cyc:3,cyc:4)", ZeroForcing), None);
        assert_eq!(p("star:4", GrundyL), Some(5));
        assert_eq!(p("glued:4", GrundyTotal), Some(4));
        assert_eq!(p("path:5", Grundy), Some(4));
        assert_eq!(p("path:5", Independence), None);
    }

    #[test]
    fn order_matches_builders() {
        for text in ["star:4", "Q:3", "sier:3,2", "glued:4", "lex(path:3,cyc:4)"] {
            let e = GraphExpr::parse(text).unwrap();
            assert_eq!(order(&e), Some(e.build().unwrap().n()));
        }
    }
}
