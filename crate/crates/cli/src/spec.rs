//! Group specifications in a small keyword syntax and their permutation
//! realizations.
//!
//! ```text
//! cyclic 6                    C_6 on 6 points
//! dihedral 5                  symmetries of a 5-gon (order 10)
//! symmetric 4 | alternating 5
//! quaternion 4                generalized quaternion of order 2^4, regular action
//! cpk_q8 3 2 builtin          C_3^2 : Q_8, affine action on the plane over F_3
//! cpk_q8 3 2 [0 2 1 0] [1 1 1 2]   same with explicit row-major Q_8 generators
//! semidirect 7 3 2            C_7 : C_3 with the generator acting as x -> x^2
//! direct [cyclic 3] [quaternion 3]
//! file data/agl1_8.gens
//! ```

use std::fmt;
use std::path::{Path, PathBuf};

use codegree_core::numtheory::{gcd, is_prime, pow_mod};
use codegree_core::{Group, GroupError, Permutation};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::gens::read_gens;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Dihedral { n: usize },
    Symmetric { n: usize },
    Alternating { n: usize },
    GeneralizedQuaternion { k: u32 },
    CpkSemidirectQ8 { p: usize, k: usize, matrices: Option<[Vec<usize>; 2]> },
    Semidirect { n: usize, m: usize, r: usize },
    DirectProduct { left: Box<GroupSpec>, right: Box<GroupSpec> },
    File { path: PathBuf },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bracket = |s: &GroupSpec| {
            let t = s.to_string();
            if t.contains(' ') { format!("[{t}]") } else { t }
        };
        match self {
            GroupSpec::Cyclic { n } => write!(f, "cyclic {n}"),
            GroupSpec::Dihedral { n } => write!(f, "dihedral {n}"),
            GroupSpec::Symmetric { n } => write!(f, "symmetric {n}"),
            GroupSpec::Alternating { n } => write!(f, "alternating {n}"),
            GroupSpec::GeneralizedQuaternion { k } => write!(f, "quaternion {k}"),
            GroupSpec::CpkSemidirectQ8 { p, k, matrices: None } => write!(f, "cpk_q8 {p} {k} builtin"),
            GroupSpec::CpkSemidirectQ8 { p, k, matrices: Some([a, b]) } => {
                let join = |m: &[usize]| m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                write!(f, "cpk_q8 {p} {k} [{}] [{}]", join(a), join(b))
            }
            GroupSpec::Semidirect { n, m, r } => write!(f, "semidirect {n} {m} {r}"),
            GroupSpec::DirectProduct { left, right } => write!(f, "direct {} {}", bracket(left), bracket(right)),
            GroupSpec::File { path } => write!(f, "file {}", path.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Word(String),
    Open,
    Close,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut Vec<Token>| {
        if !word.is_empty() {
            out.push(Token::Word(std::mem::take(word)));
        }
    };
    for c in text.chars() {
        match c {
            '[' => {
                flush(&mut word, &mut out);
                out.push(Token::Open);
            }
            ']' => {
                flush(&mut word, &mut out);
                out.push(Token::Close);
            }
            c if c.is_whitespace() => flush(&mut word, &mut out),
            c => word.push(c),
        }
    }
    flush(&mut word, &mut out);
    out
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    source: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> CliError {
        CliError::Spec(self.source.to_string(), msg.into())
    }

    fn word(&mut self) -> Result<String> {
        match self.tokens.get(self.pos) {
            Some(Token::Word(w)) => {
                self.pos += 1;
                Ok(w.clone())
            }
            _ => Err(self.err("expected a word")),
        }
    }

    fn number<T: std::str::FromStr>(&mut self) -> Result<T> {
        let w = self.word()?;
        w.parse().map_err(|_| self.err(format!("`{w}` is not a number")))
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        if self.tokens.get(self.pos) == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {t:?}")))
        }
    }

    fn numbers_in_brackets(&mut self) -> Result<Vec<usize>> {
        self.expect(Token::Open)?;
        let mut out = Vec::new();
        while self.tokens.get(self.pos) != Some(&Token::Close) {
            out.push(self.number()?);
        }
        self.pos += 1;
        Ok(out)
    }

    /// A sub-spec in a product: either `[spec]` or a bare single-word spec.
    fn operand(&mut self) -> Result<GroupSpec> {
        if self.tokens.get(self.pos) == Some(&Token::Open) {
            self.pos += 1;
            let s = self.spec()?;
            self.expect(Token::Close)?;
            Ok(s)
        } else {
            self.spec()
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let kind = self.word()?;
        let spec = match kind.as_str() {
            "cyclic" => GroupSpec::Cyclic { n: self.number()? },
            "dihedral" => GroupSpec::Dihedral { n: self.number()? },
            "symmetric" => GroupSpec::Symmetric { n: self.number()? },
            "alternating" => GroupSpec::Alternating { n: self.number()? },
            "quaternion" => GroupSpec::GeneralizedQuaternion { k: self.number()? },
            "cpk_q8" => {
                let p = self.number()?;
                let k = self.number()?;
                let matrices = if self.tokens.get(self.pos) == Some(&Token::Word("builtin".into())) {
                    self.pos += 1;
                    None
                } else {
                    Some([self.numbers_in_brackets()?, self.numbers_in_brackets()?])
                };
                GroupSpec::CpkSemidirectQ8 { p, k, matrices }
            }
            "semidirect" => GroupSpec::Semidirect { n: self.number()?, m: self.number()?, r: self.number()? },
            "direct" => GroupSpec::DirectProduct {
                left: Box::new(self.operand()?),
                right: Box::new(self.operand()?),
            },
            "file" => GroupSpec::File { path: PathBuf::from(self.word()?) },
            other => return Err(self.err(format!("unknown kind `{other}`"))),
        };
        Ok(spec)
    }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let tokens = tokenize(text);
        let mut p = Parser { tokens: &tokens, pos: 0, source: text };
        let spec = p.spec()?;
        if p.pos != tokens.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }

    /// Resolves relative file paths against `base`.
    pub fn rebase(self, base: &Path) -> GroupSpec {
        match self {
            GroupSpec::File { path } if path.is_relative() => GroupSpec::File { path: base.join(path) },
            GroupSpec::DirectProduct { left, right } => GroupSpec::DirectProduct {
                left: Box::new(left.rebase(base)),
                right: Box::new(right.rebase(base)),
            },
            other => other,
        }
    }

    pub fn default_name(&self) -> String {
        match self {
            GroupSpec::Cyclic { n } => format!("C{n}"),
            GroupSpec::Dihedral { n } => format!("D{}", 2 * n),
            GroupSpec::Symmetric { n } => format!("S{n}"),
            GroupSpec::Alternating { n } => format!("A{n}"),
            GroupSpec::GeneralizedQuaternion { k } => format!("Q{}", 1u64 << k),
            GroupSpec::CpkSemidirectQ8 { p, k, .. } => format!("C{p}^{k}:Q8"),
            GroupSpec::Semidirect { n, m, .. } => format!("C{n}:C{m}"),
            GroupSpec::DirectProduct { left, right } => format!("{}x{}", left.default_name(), right.default_name()),
            GroupSpec::File { path } => path
                .file_stem()
                .map_or_else(|| "file".to_string(), |s| s.to_string_lossy().into_owned()),
        }
    }

    /// For `direct [cyclic p] L` with `p` prime, returns `p`.
    pub fn direct_cyclic_prime(&self) -> Option<u64> {
        match self {
            GroupSpec::DirectProduct { left, .. } => match **left {
                GroupSpec::Cyclic { n } if is_prime(n as u64) => Some(n as u64),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn generators(&self) -> Result<Vec<Permutation>> {
        let invalid = |msg: String| CliError::Group(GroupError::InvalidAction(msg));
        let gens = match self {
            GroupSpec::Cyclic { n } => {
                check_positive(*n, self)?;
                vec![shift(*n)]
            }
            GroupSpec::Dihedral { n } => {
                if *n < 3 {
                    return Err(CliError::Spec(self.to_string(), "dihedral needs n >= 3".into()));
                }
                vec![shift(*n), from_fn(*n, |i| (n - i) % n)]
            }
            GroupSpec::Symmetric { n } => {
                check_positive(*n, self)?;
                if *n == 1 {
                    vec![Permutation::identity(1)]
                } else {
                    vec![from_fn(*n, |i| if i < 2 { 1 - i } else { i }), shift(*n)]
                }
            }
            GroupSpec::Alternating { n } => {
                check_positive(*n, self)?;
                if *n < 3 {
                    vec![Permutation::identity(*n)]
                } else {
                    (2..*n).map(|k| three_cycle(*n, k)).collect()
                }
            }
            GroupSpec::GeneralizedQuaternion { k } => {
                if *k < 3 || *k > 12 {
                    return Err(CliError::Spec(self.to_string(), "quaternion needs 3 <= k <= 12".into()));
                }
                quaternion(*k)
            }
            GroupSpec::CpkSemidirectQ8 { p, k, matrices } => {
                if !is_prime(*p as u64) || *k == 0 || (*p as u64).pow(*k as u32) > 1 << 20 {
                    return Err(CliError::Spec(self.to_string(), "need a prime p, k >= 1 and p^k small".into()));
                }
                let mats = match matrices {
                    None => builtin_q8(*p, *k).map_err(invalid)?,
                    Some([a, b]) => {
                        let to_matrix = |v: &Vec<usize>| -> Result<Matrix> {
                            if v.len() != k * k {
                                return Err(invalid(format!("expected {} matrix entries, got {}", k * k, v.len())));
                            }
                            Ok(v.chunks(*k).map(|r| r.iter().map(|x| x % p).collect()).collect())
                        };
                        [to_matrix(a)?, to_matrix(b)?]
                    }
                };
                validate_q8(&mats, *p).map_err(invalid)?;
                affine_generators(*p, *k, &mats)
            }
            GroupSpec::Semidirect { n, m, r } => {
                check_positive(*n, self)?;
                check_positive(*m, self)?;
                let (n64, r64) = (*n as u64, *r as u64);
                if n64 > 1 && (gcd(r64 % n64, n64) != 1 || pow_mod(r64, *m as u64, n64) != 1 % n64) {
                    return Err(invalid(format!("x -> x^{r} is not an automorphism of C_{n} of order dividing {m}")));
                }
                let total = n + m;
                vec![
                    from_fn(total, |i| if i < *n { (i + 1) % n } else { i }),
                    from_fn(total, |i| if i < *n { i * r % n } else { n + (i - n + 1) % m }),
                ]
            }
            GroupSpec::DirectProduct { left, right } => {
                let (a, b) = (left.generators()?, right.generators()?);
                let (da, db) = (a[0].degree(), b[0].degree());
                a.iter()
                    .map(|g| from_fn(da + db, |i| if i < da { g.image(i) } else { i }))
                    .chain(b.iter().map(|g| from_fn(da + db, |i| if i < da { i } else { da + g.image(i - da) })))
                    .collect()
            }
            GroupSpec::File { path } => read_gens(path)?,
        };
        Ok(gens)
    }

    pub fn build(&self, bound: usize) -> Result<Group> {
        Ok(Group::with_bound(self.generators()?, Some(self.default_name()), bound)?)
    }
}

fn check_positive(n: usize, spec: &GroupSpec) -> Result<()> {
    if n == 0 {
        return Err(CliError::Spec(spec.to_string(), "size must be positive".into()));
    }
    Ok(())
}

fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| f(i) as u32).collect()).expect("bijection by construction")
}

fn shift(n: usize) -> Permutation {
    from_fn(n, |i| (i + 1) % n)
}

fn three_cycle(n: usize, k: usize) -> Permutation {
    from_fn(n, |i| match i {
        0 => 1,
        1 => k,
        i if i == k => 0,
        i => i,
    })
}

/// Right regular action of `<a, b | a^(2m) = 1, b^2 = a^m, a^b = a^-1>`,
/// `m = 2^(k-2)`; element `a^i b^e` is point `i + 2m·e`.
fn quaternion(k: u32) -> Vec<Permutation> {
    let m = 1usize << (k - 2);
    let two_m = 2 * m;
    let n = 2 * two_m;
    let right_a = from_fn(n, |x| {
        let (i, e) = (x % two_m, x / two_m);
        if e == 0 { (i + 1) % two_m } else { two_m + (i + two_m - 1) % two_m }
    });
    let right_b = from_fn(n, |x| {
        let (i, e) = (x % two_m, x / two_m);
        if e == 0 { i + two_m } else { (i + m) % two_m }
    });
    vec![right_a, right_b]
}

type Matrix = Vec<Vec<usize>>;

fn mat_mul(a: &Matrix, b: &Matrix, p: usize) -> Matrix {
    let k = a.len();
    (0..k)
        .map(|i| (0..k).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum::<usize>() % p).collect())
        .collect()
}

fn apply(m: &Matrix, v: &[usize], p: usize) -> Vec<usize> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<usize>() % p).collect()
}

/// Block-diagonal copies of `<[[0,-1],[1,0]], [[a,b],[b,-a]]>` with
/// `a^2 + b^2 = -1`; requires even `k`.
fn builtin_q8(p: usize, k: usize) -> std::result::Result<[Matrix; 2], String> {
    if k % 2 == 1 || p == 2 {
        return Err(format!("no fixed-point-free Q8 in GL({k},{p})"));
    }
    let (a, b) = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .find(|&(a, b)| (a * a + b * b + 1) % p == 0)
        .expect("every element of a finite field is a sum of two squares");
    let block = |m: [[usize; 2]; 2]| {
        let mut out = vec![vec![0; k]; k];
        for blk in 0..k / 2 {
            for i in 0..2 {
                for j in 0..2 {
                    out[2 * blk + i][2 * blk + j] = m[i][j];
                }
            }
        }
        out
    };
    Ok([block([[0, p - 1], [1, 0]]), block([[a, b], [b, (p - a) % p]])])
}

/// The two matrices must generate `Q_8` acting without nonzero fixed vectors.
fn validate_q8(mats: &[Matrix; 2], p: usize) -> std::result::Result<(), String> {
    let k = mats[0].len();
    let identity: Matrix = (0..k).map(|i| (0..k).map(|j| usize::from(i == j)).collect()).collect();
    let mut elements = vec![identity.clone()];
    let mut frontier = vec![identity.clone()];
    while let Some(x) = frontier.pop() {
        for g in mats {
            let y = mat_mul(&x, g, p);
            if !elements.contains(&y) {
                if elements.len() >= 8 {
                    return Err("matrices generate a group larger than 8".into());
                }
                elements.push(y.clone());
                frontier.push(y);
            }
        }
    }
    if elements.len() != 8 {
        return Err(format!("matrices generate a group of order {}", elements.len()));
    }
    let involutions = elements
        .iter()
        .filter(|m| **m != identity && mat_mul(m, m, p) == identity)
        .count();
    if involutions != 1 || mat_mul(&mats[0], &mats[1], p) == mat_mul(&mats[1], &mats[0], p) {
        return Err("matrices do not generate Q8".into());
    }
    let q = p.pow(k as u32);
    for m in elements.iter().filter(|m| **m != identity) {
        for code in 1..q {
            let v = digits(code, p, k);
            if apply(m, &v, p) == v {
                return Err("Q8 action has a nonzero fixed vector".into());
            }
        }
    }
    Ok(())
}

fn digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn encode(v: &[usize], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Translations by the unit vectors plus the linear maps, on `p^k` points.
fn affine_generators(p: usize, k: usize, mats: &[Matrix; 2]) -> Vec<Permutation> {
    let q = p.pow(k as u32);
    let mut gens: Vec<Permutation> = (0..k)
        .map(|axis| {
            from_fn(q, |x| {
                let mut v = digits(x, p, k);
                v[axis] = (v[axis] + 1) % p;
                encode(&v, p)
            })
        })
        .collect();
    gens.extend(mats.iter().map(|m| from_fn(q, |x| encode(&apply(m, &digits(x, p, k), p), p))));
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use codegree_core::DEFAULT_ORDER_BOUND;

    fn order(text: &str) -> usize {
        GroupSpec::parse(text).unwrap().build(DEFAULT_ORDER_BOUND).unwrap().order()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order("cyclic 6"), 6);
        assert_eq!(order("cyclic 1"), 1);
        assert_eq!(order("dihedral 15"), 30);
        assert_eq!(order("symmetric 4"), 24);
        assert_eq!(order("symmetric 1"), 1);
        assert_eq!(order("alternating 5"), 60);
        assert_eq!(order("quaternion 5"), 32);
        assert_eq!(order("semidirect 7 3 2"), 21);
        assert_eq!(order("semidirect 5 4 2"), 20);
        assert_eq!(order("direct [cyclic 3] [quaternion 3]"), 24);
        assert_eq!(order("cpk_q8 3 2 builtin"), 72);
        assert_eq!(order("cpk_q8 3 2 [0 2 1 0] [1 1 1 2]"), 72);
        assert_eq!(order("cpk_q8 3 4 builtin"), 648);
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "cyclic 6",
            "direct [cyclic 5] [symmetric 3]",
            "direct [cyclic 2] [direct [cyclic 3] [alternating 4]]",
            "cpk_q8 5 2 builtin",
            "cpk_q8 3 2 [0 2 1 0] [1 1 1 2]",
            "file data/x.gens",
        ] {
            let s = GroupSpec::parse(text).unwrap();
            assert_eq!(s.to_string(), text);
            assert_eq!(GroupSpec::parse(&s.to_string()).unwrap(), s);
        }
    }

    #[test]
    fn invalid_actions() {
        let err = |t: &str| GroupSpec::parse(t).unwrap().build(DEFAULT_ORDER_BOUND).unwrap_err();
        assert!(matches!(err("semidirect 7 3 3"), CliError::Group(GroupError::InvalidAction(_))));
        assert!(matches!(err("semidirect 6 2 2"), CliError::Group(GroupError::InvalidAction(_))));
        assert!(matches!(err("cpk_q8 3 3 builtin"), CliError::Group(GroupError::InvalidAction(_))));
        // a dihedral pair instead of Q8
        assert!(matches!(err("cpk_q8 3 2 [0 2 1 0] [1 0 0 2]"), CliError::Group(GroupError::InvalidAction(_))));
        assert!(matches!(err("cpk_q8 3 2 [0 2 1 0]  [1 1 1]"), CliError::Group(GroupError::InvalidAction(_))));
        assert!(matches!(
            err("symmetric 8"),
            CliError::Group(GroupError::OrderBoundExceeded(DEFAULT_ORDER_BOUND))
        ));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "cyclic", "cyclic x", "blob 3", "cyclic 3 4", "direct [cyclic 3", "cpk_q8 3 2 [1 2"] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn direct_prime() {
        assert_eq!(GroupSpec::parse("direct [cyclic 5] [symmetric 3]").unwrap().direct_cyclic_prime(), Some(5));
        assert_eq!(GroupSpec::parse("direct [cyclic 4] [symmetric 3]").unwrap().direct_cyclic_prime(), None);
    }
}
