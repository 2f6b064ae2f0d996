//! Graph families and products.
//!
//! Labelings are fixed so that witnesses in fixtures are reproducible:
//! paths and cycles use consecutive integers, `star(n)` has its centre at
//! vertex 0, hypercube vertices are their bit labels, products are row-major
//! (`(a, b) -> a * |V(H)| + b`) and Sierpiński vertices are the base-`p`
//! value of their label with the first symbol most significant.
//!
//! [`GraphExpr`] parses the family syntax used on the command line:
//! `path:5`, `cyc:4`, `K:6`, `star:3`, `Q:4`, `sier:3,2`, `glued:4`,
//! `empty:3`, and the combinators `cart(A,B)`, `strong(A,B)`, `lex(A,B)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            n,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Input(msg()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || "path needs n >= 1".into())?;
    check_capacity(n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || "cycle needs n >= 3".into())?;
    check_capacity(n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || "complete graph needs n >= 1".into())?;
    check_capacity(n)?;
    Graph::from_fn(n, |_, _| true)
}

pub fn edgeless(n: usize) -> Result<Graph> {
    require(n >= 1, || "edgeless graph needs n >= 1".into())?;
    Graph::edgeless(n)
}

/// `K_{1,n}`: centre 0, leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, || "star needs n >= 1".into())?;
    check_capacity(n + 1)?;
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))
}

/// `Q_d`: vertices are `d`-bit labels, adjacent at Hamming distance one.
pub fn hypercube(d: usize) -> Result<Graph> {
    require(d >= 1, || "hypercube needs d >= 1".into())?;
    if d >= usize::BITS as usize || (1usize << d) > MAX_VERTICES {
        return Err(Error::Capacity {
            n: 1usize.checked_shl(d as u32).unwrap_or(usize::MAX),
            limit: MAX_VERTICES,
        });
    }
    Graph::from_fn(1 << d, |u, v| (u ^ v).is_power_of_two())
}

/// Two copies of `K_n` sharing vertex 0: cliques `{0..n-1}` and `{0, n..2n-2}`.
pub fn glued_cliques(n: usize) -> Result<Graph> {
    require(n >= 2, || "glued cliques need n >= 2".into())?;
    let total = 2 * n - 1;
    check_capacity(total)?;
    let side = |v: usize| -> (bool, bool) { (v < n, v == 0 || v >= n) };
    Graph::from_fn(total, |u, v| {
        let (su, sv) = (side(u), side(v));
        (su.0 && sv.0) || (su.1 && sv.1)
    })
}

fn product(g: &Graph, h: &Graph, adjacent: impl Fn(usize, usize, usize, usize) -> bool) -> Result<Graph> {
    require(g.n() > 0 && h.n() > 0, || "product factors must be nonempty".into())?;
    let total = g.n().saturating_mul(h.n());
    check_capacity(total)?;
    let m = h.n();
    Graph::from_fn(total, |x, y| adjacent(x / m, x % m, y / m, y % m))
}

/// `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |a, b, c, d| {
        (g.has_edge(a, c) && b == d) || (a == c && h.has_edge(b, d))
    })
}

/// `G ⊠ H`: the Cartesian product plus all `(g,h)(g',h')` with `gg'` and `hh'` edges.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |a, b, c, d| {
        let ga = g.has_edge(a, c);
        let hb = h.has_edge(b, d);
        (ga && b == d) || (a == c && hb) || (ga && hb)
    })
}

/// `G ∘ H`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |a, b, c, d| g.has_edge(a, c) || (a == c && h.has_edge(b, d)))
}

fn sierpinski_order(p: usize, n: usize) -> Result<usize> {
    require(p >= 1 && n >= 1, || "Sierpiński graph needs p >= 1 and n >= 1".into())?;
    let mut total = 1usize;
    for _ in 0..n {
        total = total.saturating_mul(p);
        if total > MAX_VERTICES {
            return Err(Error::Capacity {
                n: total,
                limit: MAX_VERTICES,
            });
        }
    }
    Ok(total)
}

fn digits(mut x: usize, p: usize, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for slot in d.iter_mut().rev() {
        *slot = x % p;
        x /= p;
    }
    d
}

/// `S_p^n` built from the label adjacency rule: `u ~ v` iff for some `h`
/// the labels agree before `h`, differ at `h`, and afterwards `u` repeats
/// `v_h` while `v` repeats `u_h`.
pub fn sierpinski(p: usize, n: usize) -> Result<Graph> {
    let total = sierpinski_order(p, n)?;
    let labels: Vec<Vec<usize>> = (0..total).map(|x| digits(x, p, n)).collect();
    Graph::from_fn(total, |x, y| {
        let (u, v) = (&labels[x], &labels[y]);
        let h = match u.iter().zip(v).position(|(a, b)| a != b) {
            Some(h) => h,
            None => return false,
        };
        (h + 1..n).all(|t| u[t] == v[h] && v[t] == u[h])
    })
}

/// `S_p^n` built from `p` copies of `S_p^{n-1}`, copies `i` and `j` joined by
/// the single edge `{i j^{n-1}, j i^{n-1}}`.
pub fn sierpinski_recursive(p: usize, n: usize) -> Result<Graph> {
    let total = sierpinski_order(p, n)?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // level 1 is K_p
    for u in 0..p {
        for v in u + 1..p {
            edges.push((u, v));
        }
    }
    let mut size = p;
    for level in 2..=n {
        let mut next = Vec::with_capacity(p * edges.len() + p * p);
        for i in 0..p {
            next.extend(edges.iter().map(|&(u, v)| (i * size + u, i * size + v)));
        }
        // i followed by level-1 copies of j
        let repeat = |i: usize, j: usize| -> usize {
            (0..level - 1).fold(i, |acc, _| acc * p + j)
        };
        for i in 0..p {
            for j in i + 1..p {
                next.push((repeat(i, j), repeat(j, i)));
            }
        }
        edges = next;
        size *= p;
    }
    debug_assert_eq!(size, total);
    Graph::from_edges(total, edges)
}

/// A named family with its integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Hypercube(usize),
    Sierpinski { p: usize, n: usize },
    GluedCliques(usize),
    Edgeless(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::Hypercube(d) => hypercube(d),
            FamilySpec::Sierpinski { p, n } => sierpinski(p, n),
            FamilySpec::GluedCliques(n) => glued_cliques(n),
            FamilySpec::Edgeless(n) => edgeless(n),
        }
    }

    fn from_parts(name: &str, args: &[usize]) -> Result<Self> {
        let one = |f: fn(usize) -> FamilySpec| -> Result<FamilySpec> {
            match args {
                [a] => Ok(f(*a)),
                _ => Err(Error::Input(format!(
                    "family {name:?} takes one parameter, got {}",
                    args.len()
                ))),
            }
        };
        match name {
            "path" | "P" => one(FamilySpec::Path),
            "cyc" | "cycle" | "C" => one(FamilySpec::Cycle),
            "K" | "complete" => one(FamilySpec::Complete),
            "star" => one(FamilySpec::Star),
            "Q" | "hypercube" => one(FamilySpec::Hypercube),
            "glued" => one(FamilySpec::GluedCliques),
            "empty" => one(FamilySpec::Edgeless),
            "sier" | "sierpinski" => match args {
                [p, n] => Ok(FamilySpec::Sierpinski { p: *p, n: *n }),
                _ => Err(Error::Input(format!(
                    "family {name:?} takes two parameters p,n"
                ))),
            },
            _ => Err(Error::Input(format!("unknown graph family {name:?}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cyc:{n}"),
            FamilySpec::Complete(n) => write!(f, "K:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Hypercube(d) => write!(f, "Q:{d}"),
            FamilySpec::Sierpinski { p, n } => write!(f, "sier:{p},{n}"),
            FamilySpec::GluedCliques(n) => write!(f, "glued:{n}"),
            FamilySpec::Edgeless(n) => write!(f, "empty:{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
}

impl ProductKind {
    fn keyword(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cart",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lex",
        }
    }

    pub fn apply(self, g: &Graph, h: &Graph) -> Result<Graph> {
        match self {
            ProductKind::Cartesian => cartesian_product(g, h),
            ProductKind::Strong => strong_product(g, h),
            ProductKind::Lexicographic => lexicographic_product(g, h),
        }
    }
}

/// A family expression, possibly combining families with products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Family(FamilySpec),
    Product(ProductKind, Box<GraphExpr>, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn parse(text: &str) -> Result<Self> {
        ExprTemplate::parse(text)?.instantiate(&BTreeMap::new())
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphExpr::Family(f) => f.build(),
            GraphExpr::Product(kind, a, b) => kind.apply(&a.build()?, &b.build()?),
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Family(s) => s.fmt(f),
            GraphExpr::Product(k, a, b) => write!(f, "{}({a},{b})", k.keyword()),
        }
    }
}

/// A family parameter: a literal or a named sweep variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Lit(usize),
    Var(String),
}

/// A [`GraphExpr`] whose parameters may be variables, e.g. `cart(cyc:s,path:t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprTemplate {
    Family(String, Vec<Param>),
    Product(ProductKind, Box<ExprTemplate>, Box<ExprTemplate>),
}

impl ExprTemplate {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    /// Variable names in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            ExprTemplate::Family(_, params) => {
                for p in params {
                    if let Param::Var(v) = p {
                        if !out.contains(v) {
                            out.push(v.clone());
                        }
                    }
                }
            }
            ExprTemplate::Product(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn instantiate(&self, bindings: &BTreeMap<String, usize>) -> Result<GraphExpr> {
        match self {
            ExprTemplate::Family(name, params) => {
                let args = params
                    .iter()
                    .map(|p| match p {
                        Param::Lit(v) => Ok(*v),
                        Param::Var(v) => bindings
                            .get(v)
                            .copied()
                            .ok_or_else(|| Error::Input(format!("unbound variable {v:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(GraphExpr::Family(FamilySpec::from_parts(name, &args)?))
            }
            ExprTemplate::Product(k, a, b) => Ok(GraphExpr::Product(
                *k,
                Box::new(a.instantiate(bindings)?),
                Box::new(b.instantiate(bindings)?),
            )),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Input(format!(
            "graph expression {:?}: {msg} at offset {}",
            String::from_utf8_lossy(self.src),
            self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.error("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn param(&mut self) -> Result<Param> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                text.parse()
                    .map(Param::Lit)
                    .map_err(|_| self.error("parameter too large"))
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(Param::Var(self.ident()?)),
            _ => Err(self.error("expected a parameter")),
        }
    }

    fn expr(&mut self) -> Result<ExprTemplate> {
        let name = self.ident()?;
        match self.peek() {
            Some(b'(') => {
                let kind = match name.as_str() {
                    "cart" => ProductKind::Cartesian,
                    "strong" => ProductKind::Strong,
                    "lex" => ProductKind::Lexicographic,
                    other => return Err(self.error(&format!("unknown product {other:?}"))),
                };
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                Ok(ExprTemplate::Product(kind, Box::new(a), Box::new(b)))
            }
            Some(b':') => {
                self.pos += 1;
                let mut params = vec![self.param()?];
                // A comma continues the parameter list only when another
                // parameter (not a family name followed by ':' or '(') follows.
                loop {
                    let save = self.pos;
                    if self.peek() != Some(b',') {
                        break;
                    }
                    self.pos += 1;
                    match self.param() {
                        Ok(p) if !matches!(self.peek(), Some(b':') | Some(b'(')) => params.push(p),
                        _ => {
                            self.pos = save;
                            break;
                        }
                    }
                }
                Ok(ExprTemplate::Family(name, params))
            }
            _ => Err(self.error("expected ':' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_count_formula(kind: ProductKind, g: &Graph, h: &Graph) -> usize {
        let (vg, eg, vh, eh) = (g.n(), g.edge_count(), h.n(), h.edge_count());
        match kind {
            ProductKind::Cartesian => eg * vh + vg * eh,
            ProductKind::Strong => eg * vh + vg * eh + 2 * eg * eh,
            ProductKind::Lexicographic => vh * vh * eg + vg * eh,
        }
    }

    #[test]
    fn family_parameter_ranges() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(star(0).is_err());
        assert!(hypercube(0).is_err());
        assert!(glued_cliques(1).is_err());
        assert!(sierpinski(0, 2).is_err());
        assert!(sierpinski(3, 0).is_err());
        assert!(matches!(hypercube(8), Err(Error::Capacity { .. })));
        assert!(matches!(sierpinski(3, 5), Err(Error::Capacity { .. })));
    }

    #[test]
    fn basic_families() {
        let q2 = hypercube(2).unwrap();
        assert_eq!((q2.n(), q2.edge_count()), (4, 4));
        assert_eq!(q2.degree_sequence(), vec![2, 2, 2, 2]);
        assert!(q2.is_connected());

        let s3 = star(3).unwrap();
        assert_eq!((s3.n(), s3.edge_count(), s3.degree(0)), (4, 3, 3));

        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());

        // P_3 with the shared vertex 0 as its centre
        let p3 = glued_cliques(2).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (0, 2)]);
        let bowtie = glued_cliques(3).unwrap();
        assert_eq!((bowtie.n(), bowtie.edge_count(), bowtie.degree(0)), (5, 6, 4));
    }

    #[test]
    fn product_examples() {
        let p2 = path(2).unwrap();
        let c4 = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(c4.degree_sequence(), vec![2; 4]);
        assert_eq!(c4.edge_count(), 4);

        let prism = cartesian_product(&complete(2).unwrap(), &complete(3).unwrap()).unwrap();
        assert_eq!((prism.n(), prism.edge_count()), (6, 9));

        let grid = cartesian_product(&path(3).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!((grid.n(), grid.edge_count()), (9, 12));

        let k2 = complete(2).unwrap();
        assert_eq!(strong_product(&k2, &k2).unwrap(), complete(4).unwrap());
        let sp = strong_product(&p2, &path(3).unwrap()).unwrap();
        assert_eq!((sp.n(), sp.edge_count()), (6, 11));

        assert_eq!(lexicographic_product(&k2, &k2).unwrap(), complete(4).unwrap());
        let k22 = lexicographic_product(&p2, &edgeless(2).unwrap()).unwrap();
        assert_eq!(k22.degree_sequence(), vec![2; 4]);
        assert!(!k22.has_edge(0, 1) && !k22.has_edge(2, 3));

        let pp = lexicographic_product(&path(3).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(pp.n(), 9);
    }

    #[test]
    fn product_row_major_labels() {
        let g = cartesian_product(&path(2).unwrap(), &path(3).unwrap()).unwrap();
        // (0,1) = 1 is adjacent to (0,0)=0, (0,2)=2 and (1,1)=4
        assert_eq!(g.nbhd(1).to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn product_edge_counts_match_formulas() {
        let factors = [
            path(1).unwrap(),
            path(4).unwrap(),
            cycle(5).unwrap(),
            complete(3).unwrap(),
            star(3).unwrap(),
            edgeless(2).unwrap(),
            glued_cliques(3).unwrap(),
        ];
        for g in &factors {
            for h in &factors {
                for kind in [ProductKind::Cartesian, ProductKind::Strong, ProductKind::Lexicographic] {
                    let p = kind.apply(g, h).unwrap();
                    assert_eq!(p.n(), g.n() * h.n());
                    assert_eq!(p.edge_count(), edge_count_formula(kind, g, h), "{kind:?} {g:?} {h:?}");
                }
            }
        }
    }

    #[test]
    fn product_capacity_guard() {
        let big = path(12).unwrap();
        assert!(matches!(
            cartesian_product(&big, &big),
            Err(Error::Capacity { n: 144, .. })
        ));
    }

    #[test]
    fn sierpinski_small_cases() {
        for k in 1..=4 {
            let s = sierpinski(2, k).unwrap();
            let n = 1 << k;
            let mut expected = vec![2; n - 2];
            expected.extend([1, 1]);
            assert_eq!(s.n(), n);
            assert_eq!(s.edge_count(), n - 1);
            assert_eq!(s.degree_sequence(), expected);
            assert!(s.is_connected());
        }
        let s32 = sierpinski(3, 2).unwrap();
        assert_eq!((s32.n(), s32.edge_count()), (9, 12));
        for p in 1..=5 {
            assert_eq!(sierpinski(p, 1).unwrap(), Graph::from_fn(p, |_, _| true).unwrap());
        }
        assert_eq!(sierpinski(1, 3).unwrap().n(), 1);
    }

    #[test]
    fn sierpinski_constructions_agree() {
        for (p, n) in [(1, 1), (2, 1), (2, 5), (3, 1), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2), (11, 2)] {
            let direct = sierpinski(p, n).unwrap();
            assert_eq!(direct, sierpinski_recursive(p, n).unwrap(), "S_{p}^{n}");
            // E(p,1) = p(p-1)/2, E(p,n) = p E(p,n-1) + p(p-1)/2
            let mut e = p * (p - 1) / 2;
            for _ in 1..n {
                e = p * e + p * (p - 1) / 2;
            }
            assert_eq!(direct.edge_count(), e);
            assert_eq!(direct.n(), p.pow(n as u32));
        }
    }

    #[test]
    fn expression_round_trips() {
        for text in [
            "path:5",
            "cyc:4",
            "K:6",
            "star:3",
            "Q:4",
            "sier:3,2",
            "glued:4",
            "empty:2",
            "cart(cyc:5,path:3)",
            "lex(sier:2,2,strong(K:2,path:3))",
            "cart(sier:3,2,sier:2,1)",
        ] {
            let e = GraphExpr::parse(text).unwrap();
            assert_eq!(e.to_string(), text);
        }
        let e = GraphExpr::parse(" cart ( cycle:4 , P:2 ) ").unwrap();
        assert_eq!(e.to_string(), "cart(cyc:4,path:2)");
        assert_eq!(e.build().unwrap().n(), 8);
    }

    #[test]
    fn expression_errors() {
        for bad in ["", "path", "path:", "foo:3", "cart(path:2)", "sier:3", "path:3,4", "tensor(K:2,K:2)", "path:2)"] {
            assert!(GraphExpr::parse(bad).is_err(), "{bad:?}");
        }
        assert!(GraphExpr::parse("cyc:2").unwrap().build().is_err());
    }

    #[test]
    fn templates_bind_variables() {
        let t = ExprTemplate::parse("cart(cyc:s,path:t)").unwrap();
        assert_eq!(t.variables(), vec!["s".to_string(), "t".to_string()]);
        let bind: BTreeMap<String, usize> = [("s".into(), 4), ("t".into(), 2)].into_iter().collect();
        assert_eq!(t.instantiate(&bind).unwrap().to_string(), "cart(cyc:4,path:2)");
        assert!(t.instantiate(&BTreeMap::new()).is_err());
        assert!(GraphExpr::parse("path:n").is_err());
    }
}
