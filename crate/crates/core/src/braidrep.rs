//! Virtual braid words, the extended Wada actions on `F_{n+1} = ⟨y, x₁, …, x_n⟩`,
//! link group presentations and the built-in fixture presentations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, Endomorphism, Word};
use crate::presentation::{GroupPresentation, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    /// σ_i
    Classical,
    /// ρ_i
    Virtual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VBGenerator {
    pub kind: CrossingKind,
    /// 1-based, `1 ≤ index ≤ n − 1`.
    pub index: usize,
    /// `±1`; always `+1` for ρ_i.
    pub sign: i8,
}

impl VBGenerator {
    pub fn sigma(index: usize) -> Self {
        VBGenerator { kind: CrossingKind::Classical, index, sign: 1 }
    }

    pub fn sigma_inv(index: usize) -> Self {
        VBGenerator { kind: CrossingKind::Classical, index, sign: -1 }
    }

    pub fn rho(index: usize) -> Self {
        VBGenerator { kind: CrossingKind::Virtual, index, sign: 1 }
    }

    pub fn inverse(self) -> Self {
        match self.kind {
            CrossingKind::Classical => VBGenerator { sign: -self.sign, ..self },
            CrossingKind::Virtual => self,
        }
    }

    fn check(&self, strands: usize) -> Result<()> {
        if self.index == 0 || self.index >= strands {
            Err(Error::BraidIndex { index: self.index, strands })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for VBGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.kind, self.sign) {
            (CrossingKind::Virtual, _) => 'v',
            (CrossingKind::Classical, s) if s < 0 => 'S',
            _ => 's',
        };
        write!(f, "{c}{}", self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualBraidWord {
    strands: usize,
    letters: Vec<VBGenerator>,
}

impl VirtualBraidWord {
    pub fn new(strands: usize, letters: Vec<VBGenerator>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidParameter("a braid needs at least one strand".into()));
        }
        for g in &letters {
            g.check(strands)?;
        }
        Ok(VirtualBraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        VirtualBraidWord::new(strands, vec![])
    }

    /// Parses whitespace-separated tokens `s<i>`, `S<i>` (inverse) and `v<i>`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for token in text.split_whitespace() {
            let offset = text[pos..].find(token).map_or(pos, |o| pos + o);
            pos = offset + token.len();
            let bad = |msg: &str| Error::Parse { pos: offset, msg: format!("{msg} in `{token}`") };
            let mut chars = token.chars();
            let head = chars.next().ok_or_else(|| bad("empty token"))?;
            let index: usize = chars.as_str().parse().map_err(|_| bad("expected an index"))?;
            let g = match head {
                's' => VBGenerator::sigma(index),
                'S' => VBGenerator::sigma_inv(index),
                'v' => VBGenerator::rho(index),
                _ => return Err(bad("expected s, S or v")),
            };
            letters.push(g);
        }
        VirtualBraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[VBGenerator] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|g| g.inverse()).collect();
        VirtualBraidWord { strands: self.strands, letters }
    }

    pub fn concat(&self, other: &VirtualBraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::InvalidParameter("strand counts differ".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(VirtualBraidWord { strands: self.strands, letters })
    }
}

impl fmt::Display for VirtualBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WadaKind {
    W1 { r: u32 },
    W2,
    W3,
}

impl WadaKind {
    pub fn w1(r: u32) -> Result<Self> {
        if r == 0 {
            Err(Error::InvalidParameter("W1 needs r > 0".into()))
        } else {
            Ok(WadaKind::W1 { r })
        }
    }
}

impl fmt::Display for WadaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WadaKind::W1 { r } => write!(f, "w1:{r}"),
            WadaKind::W2 => write!(f, "w2"),
            WadaKind::W3 => write!(f, "w3"),
        }
    }
}

/// Accepts `w2`, `w3`, `w1:<r>` and `w1(<r>)`, case-insensitively.
impl FromStr for WadaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "w2" => return Ok(WadaKind::W2),
            "w3" => return Ok(WadaKind::W3),
            _ => {}
        }
        let r = t
            .strip_prefix("w1:")
            .or_else(|| t.strip_prefix("w1(").and_then(|rest| rest.strip_suffix(')')))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown representation `{s}`")))?;
        let r: u32 = r.parse().map_err(|_| Error::InvalidParameter(format!("bad r in `{s}`")))?;
        WadaKind::w1(r)
    }
}

/// `[y, x1, …, xn]`.
pub fn braid_alphabet(strands: usize) -> Alphabet {
    let mut labels = vec!["y".to_string()];
    labels.extend((1..=strands).map(|i| format!("x{i}")));
    Alphabet::new(&labels).expect("braid alphabet labels are valid")
}

/// Automorphism of `F_{n+1}` attached to one generator.
pub fn generator_action(kind: WadaKind, g: VBGenerator, strands: usize) -> Result<Endomorphism> {
    g.check(strands)?;
    let alphabet = braid_alphabet(strands);
    let y = Word::generator(0);
    let xi = Word::generator(g.index);
    let xj = Word::generator(g.index + 1);
    let (img_i, img_j) = match (g.kind, g.sign > 0) {
        (CrossingKind::Virtual, _) => (xj.conjugate(&y.inverse()), xi.conjugate(&y)),
        (CrossingKind::Classical, true) => match kind {
            WadaKind::W1 { r } => {
                let r = i64::from(r);
                (&(&xi.pow(r) * &xj) * &xi.pow(-r), xi.clone())
            }
            WadaKind::W2 => (&(&xi * &xj.inverse()) * &xi, xi.clone()),
            WadaKind::W3 => (&xi.pow(2) * &xj, xi.inverse().conjugate(&xj)),
        },
        (CrossingKind::Classical, false) => match kind {
            WadaKind::W1 { r } => (xj.clone(), xi.conjugate(&xj.pow(i64::from(r)))),
            WadaKind::W2 => (xj.clone(), &(&xj * &xi.inverse()) * &xj),
            WadaKind::W3 => (&(&xi * &xj.inverse()) * &xi.inverse(), &xi * &xj.pow(2)),
        },
    };
    Endomorphism::with_images(&alphabet, &[(g.index, img_i), (g.index + 1, img_j)])
}

/// Image of a braid word: `a(g₁) ∘ a(g₂) ∘ … ∘ a(g_k)`.
pub fn represent(kind: WadaKind, b: &VirtualBraidWord) -> Result<Endomorphism> {
    let mut acc = Endomorphism::identity(&braid_alphabet(b.strands));
    for &g in &b.letters {
        acc = acc.compose(&generator_action(kind, g, b.strands)?)?;
    }
    Ok(acc)
}

/// `⟨y, x₁, …, x_n | x_i = φ(x_i)⟩` stored as relators `x_i·φ(x_i)⁻¹`.
pub fn link_group(kind: WadaKind, b: &VirtualBraidWord) -> Result<GroupPresentation> {
    let phi = represent(kind, b)?;
    let relators = (1..=b.strands).map(|i| &Word::generator(i) * &phi.image(i).inverse()).collect();
    GroupPresentation::from_relators(phi.source().clone(), relators)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    TrefoilG1(u32),
    TrefoilG2,
    TrefoilG3,
    KishinoG3,
    UnknotG3,
}

impl Fixture {
    pub const NAMES: [&'static str; 5] = ["trefoil-g1(r)", "trefoil-g2", "trefoil-g3", "kishino-g3", "unknot-g3"];

    pub fn presentation(&self) -> GroupPresentation {
        match *self {
            Fixture::TrefoilG1(r) => trefoil_g1(r),
            Fixture::TrefoilG2 => trefoil_g2(),
            Fixture::TrefoilG3 => trefoil_g3(),
            Fixture::KishinoG3 => kishino_g3(),
            Fixture::UnknotG3 => unknot_g3(),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::TrefoilG1(r) => write!(f, "trefoil-g1({r})"),
            Fixture::TrefoilG2 => write!(f, "trefoil-g2"),
            Fixture::TrefoilG3 => write!(f, "trefoil-g3"),
            Fixture::KishinoG3 => write!(f, "kishino-g3"),
            Fixture::UnknotG3 => write!(f, "unknot-g3"),
        }
    }
}

/// Accepts the names in [`Fixture::NAMES`] with `r` written as
/// `trefoil-g1(2)` or `trefoil-g1:2`.
impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFixture(s.to_string());
        match s.trim() {
            "trefoil-g2" => Ok(Fixture::TrefoilG2),
            "trefoil-g3" => Ok(Fixture::TrefoilG3),
            "kishino-g3" => Ok(Fixture::KishinoG3),
            "unknot-g3" => Ok(Fixture::UnknotG3),
            t => {
                let r = t
                    .strip_prefix("trefoil-g1(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .or_else(|| t.strip_prefix("trefoil-g1:"))
                    .ok_or_else(unknown)?;
                match r.parse::<u32>() {
                    Ok(r) if r > 0 => Ok(Fixture::TrefoilG1(r)),
                    _ => Err(Error::InvalidParameter(format!("bad r in `{s}`"))),
                }
            }
        }
    }
}

pub fn fixture(name: &str) -> Result<GroupPresentation> {
    Ok(name.parse::<Fixture>()?.presentation())
}

fn xy_alphabet() -> Alphabet {
    Alphabet::new(&["x", "y"]).expect("valid labels")
}

fn x_y() -> (Word, Word) {
    (Word::generator(0), Word::generator(1))
}

fn product(parts: &[Word]) -> Word {
    parts.iter().fold(Word::identity(), |acc, w| &acc * w)
}

/// `⟨x, y | x^{-r}y^{-1}xyx^r = y^{-2}x^r y x y^{-1}x^{-r}y^2⟩`.
pub fn trefoil_g1(r: u32) -> GroupPresentation {
    let (x, y) = x_y();
    let r = i64::from(r);
    let lhs = product(&[x.pow(-r), y.inverse(), x.clone(), y.clone(), x.pow(r)]);
    let rhs = product(&[y.pow(-2), x.pow(r), y.clone(), x.clone(), y.inverse(), x.pow(-r), y.pow(2)]);
    GroupPresentation::new(xy_alphabet(), vec![Relation::new(lhs, rhs)]).expect("valid fixture")
}

/// `⟨x, y | xy^{-1}x^{-1}yx = y^{-2}xyx^{-1}y^{-1}xy^2⟩`.
pub fn trefoil_g2() -> GroupPresentation {
    let (x, y) = x_y();
    let lhs = product(&[x.clone(), y.inverse(), x.inverse(), y.clone(), x.clone()]);
    let rhs = product(&[y.pow(-2), x.clone(), y.clone(), x.inverse(), y.inverse(), x.clone(), y.pow(2)]);
    GroupPresentation::new(xy_alphabet(), vec![Relation::new(lhs, rhs)]).expect("valid fixture")
}

/// `⟨x1, x2, y | x1 = y x2^{-1}x1^{-1}x2^{-1}x1^{-1}x2 y^{-1}, x2 = y^{-1}x1^2 x2 x1 x2 y⟩`.
pub fn trefoil_g3() -> GroupPresentation {
    let alphabet = Alphabet::new(&["x1", "x2", "y"]).expect("valid labels");
    let (x1, x2, y) = (Word::generator(0), Word::generator(1), Word::generator(2));
    let r1 = Relation::new(
        x1.clone(),
        product(&[y.clone(), x2.inverse(), x1.inverse(), x2.inverse(), x1.inverse(), x2.clone(), y.inverse()]),
    );
    let r2 =
        Relation::new(x2.clone(), product(&[y.inverse(), x1.pow(2), x2.clone(), x1.clone(), x2.clone(), y.clone()]));
    GroupPresentation::new(alphabet, vec![r1, r2]).expect("valid fixture")
}

/// `G₃` of the trivial knot: free on two generators.
pub fn unknot_g3() -> GroupPresentation {
    GroupPresentation::new(Alphabet::new(&["y", "x1"]).expect("valid labels"), vec![]).expect("valid fixture")
}

/// Generators `a, b, c, d` of the Kishino group, in alphabet order.
pub fn kishino_alphabet() -> Alphabet {
    Alphabet::new(&["a", "b", "c", "d"]).expect("valid labels")
}

/// `(g^k)^h = h^{-1} g^k h`.
fn cpow(g: &Word, k: i64, h: &Word) -> Word {
    g.pow(k).conjugate(h)
}

/// Relation (1) of the Kishino group as read with `b` in place of the
/// corrupted symbol:
/// `d^{-1} b^{-d} c^{-2d^{-1}} b^{-d} c^{-2d^{-1}} a a^{-2d} d = a^{-1} b^{-d} c^{-2d^{-1}} a`.
pub fn kishino_relation_1() -> Relation {
    let [a, b, c, d] = kishino_generators();
    let di = d.inverse();
    let lhs = product(&[
        di.clone(),
        cpow(&b, -1, &d),
        cpow(&c, -2, &di),
        cpow(&b, -1, &d),
        cpow(&c, -2, &di),
        a.clone(),
        cpow(&a, -2, &d),
        d.clone(),
    ]);
    let rhs = product(&[a.inverse(), cpow(&b, -1, &d), cpow(&c, -2, &di), a.clone()]);
    Relation::new(lhs, rhs)
}

/// Relation (2): `c^{-1}bc = b^{-d} c^{d^{-1}} b^d`.
pub fn kishino_relation_2() -> Relation {
    let [_, b, c, d] = kishino_generators();
    let lhs = product(&[c.inverse(), b.clone(), c.clone()]);
    let rhs = product(&[cpow(&b, -1, &d), cpow(&c, 1, &d.inverse()), cpow(&b, 1, &d)]);
    Relation::new(lhs, rhs)
}

/// Relation (3):
/// `c = b^{-d} c^{-2d^{-1}} b^{-d} c^{-2d^{-1}} a a^{-d} a^{-1} c^{2d^{-1}} b^{2d}`.
pub fn kishino_relation_3() -> Relation {
    let [a, b, c, d] = kishino_generators();
    let di = d.inverse();
    let rhs = product(&[
        cpow(&b, -1, &d),
        cpow(&c, -2, &di),
        cpow(&b, -1, &d),
        cpow(&c, -2, &di),
        a.clone(),
        cpow(&a, -1, &d),
        a.inverse(),
        cpow(&c, 2, &di),
        cpow(&b, 2, &d),
    ]);
    Relation::new(c, rhs)
}

fn kishino_generators() -> [Word; 4] {
    [Word::generator(0), Word::generator(1), Word::generator(2), Word::generator(3)]
}

/// Kishino group with a caller-supplied relation (1).
pub fn kishino_g3_with(relation_1: Relation) -> Result<GroupPresentation> {
    GroupPresentation::new(kishino_alphabet(), vec![relation_1, kishino_relation_2(), kishino_relation_3()])
}

pub fn kishino_g3() -> GroupPresentation {
    kishino_g3_with(kishino_relation_1()).expect("valid fixture")
}

/// Shifted generators `x_i = y^{-i} x y^i` over the alphabet `[x, y]`.
pub fn shifted_generator(i: i64) -> Word {
    let (x, y) = x_y();
    x.conjugate(&y.pow(i))
}

/// Relation families over `[x0, x1, x2]` whose rewriting under
/// `x_i = y^{-i}xy^i` gives the trefoil relators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftedFamily {
    /// `x0^{-r} x1 x0^r = x2^{-r} x1 x2^r`
    G1(u32),
    /// `x0 x1^{-1} x0 = x2 x1^{-1} x2`
    G2,
}

impl ShiftedFamily {
    pub fn relation(&self) -> Relation {
        let (x0, x1, x2) = (Word::generator(0), Word::generator(1), Word::generator(2));
        match *self {
            ShiftedFamily::G1(r) => {
                let r = i64::from(r);
                Relation::new(x1.conjugate(&x0.pow(r)), x1.conjugate(&x2.pow(r)))
            }
            ShiftedFamily::G2 => {
                Relation::new(product(&[x0.clone(), x1.inverse(), x0]), product(&[x2.clone(), x1.inverse(), x2]))
            }
        }
    }

    /// Substitutes `x_i = y^{-i}xy^i` and freely reduces both sides.
    pub fn rewrite(&self) -> Relation {
        let images: Vec<Word> = (0..3).map(shifted_generator).collect();
        let rel = self.relation();
        Relation::new(rel.lhs.substitute(&images), rel.rhs.substitute(&images))
    }

    /// The fixture relation this family is expected to reproduce.
    pub fn target(&self) -> Relation {
        let p = match *self {
            ShiftedFamily::G1(r) => trefoil_g1(r),
            ShiftedFamily::G2 => trefoil_g2(),
        };
        p.relations()[0].clone()
    }

    pub fn reproduces_fixture(&self) -> bool {
        self.rewrite() == self.target()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KINDS: [WadaKind; 5] =
        [WadaKind::W1 { r: 1 }, WadaKind::W1 { r: 2 }, WadaKind::W1 { r: 3 }, WadaKind::W2, WadaKind::W3];

    fn rep(kind: WadaKind, n: usize, text: &str) -> Endomorphism {
        represent(kind, &VirtualBraidWord::parse(n, text).unwrap()).unwrap()
    }

    #[test]
    fn generator_images_match_fixtures() {
        let a = braid_alphabet(2);
        let w3 = generator_action(WadaKind::W3, VBGenerator::sigma(1), 2).unwrap();
        assert_eq!(a.format_word(w3.image(1)), "x1^2*x2");
        assert_eq!(a.format_word(w3.image(2)), "x2^-1*x1^-1*x2");
        assert_eq!(a.format_word(w3.image(0)), "y");
        let rho = generator_action(WadaKind::W2, VBGenerator::rho(1), 2).unwrap();
        assert_eq!(a.format_word(rho.image(1)), "y*x2*y^-1");
        assert_eq!(a.format_word(rho.image(2)), "y^-1*x1*y");
        let w11 = generator_action(WadaKind::W1 { r: 1 }, VBGenerator::sigma(1), 2).unwrap();
        assert_eq!(a.format_word(w11.image(1)), "x1*x2*x1^-1");
    }

    #[test]
    fn inverse_actions() {
        for kind in KINDS {
            for n in 2..=4 {
                for i in 1..n {
                    let p = generator_action(kind, VBGenerator::sigma(i), n).unwrap();
                    let m = generator_action(kind, VBGenerator::sigma_inv(i), n).unwrap();
                    assert!(p.compose(&m).unwrap().is_identity(), "{kind} s{i} n={n}");
                    assert!(m.compose(&p).unwrap().is_identity(), "{kind} S{i} n={n}");
                }
            }
        }
    }

    #[test]
    fn virtual_braid_relations() {
        for kind in KINDS {
            assert_eq!(rep(kind, 3, "s1 s2 s1"), rep(kind, 3, "s2 s1 s2"), "{kind}");
            assert!(rep(kind, 3, "v1 v1").is_identity());
            assert!(rep(kind, 3, "v2 v2").is_identity());
            assert_eq!(rep(kind, 3, "v1 v2 v1"), rep(kind, 3, "v2 v1 v2"));
            assert_eq!(rep(kind, 3, "s1 v2 v1"), rep(kind, 3, "v2 v1 s2"), "{kind}");
            assert!(rep(kind, 3, "").is_identity());
        }
    }

    #[test]
    fn braid_parsing() {
        let b = VirtualBraidWord::parse(3, " s1  S2 v1 ").unwrap();
        assert_eq!(b.to_string(), "s1 S2 v1");
        assert_eq!(b.inverse().to_string(), "v1 s2 S1");
        assert!(matches!(VirtualBraidWord::parse(2, "s2"), Err(Error::BraidIndex { index: 2, strands: 2 })));
        assert!(matches!(VirtualBraidWord::parse(3, "s0"), Err(Error::BraidIndex { .. })));
        assert!(matches!(VirtualBraidWord::parse(3, "t1"), Err(Error::Parse { .. })));
        assert!(matches!(VirtualBraidWord::parse(3, "s"), Err(Error::Parse { .. })));
        assert!(VirtualBraidWord::parse(0, "").is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("w1:3".parse::<WadaKind>().unwrap(), WadaKind::W1 { r: 3 });
        assert_eq!("W1(2)".parse::<WadaKind>().unwrap(), WadaKind::W1 { r: 2 });
        assert_eq!("w3".parse::<WadaKind>().unwrap(), WadaKind::W3);
        assert!("w1:0".parse::<WadaKind>().is_err());
        assert!("w4".parse::<WadaKind>().is_err());
    }

    #[test]
    fn link_group_shape() {
        let b = VirtualBraidWord::identity(1).unwrap();
        let g = link_group(WadaKind::W3, &b).unwrap();
        assert_eq!(g.generator_count(), 2);
        assert!(g.relators().iter().all(Word::is_identity));
        assert_eq!(g.abelianization().unwrap().to_string(), "Z^2");
        let b = VirtualBraidWord::parse(3, "s1 S2 v1 s2").unwrap();
        assert_eq!(link_group(WadaKind::W2, &b).unwrap().relations().len(), 3);
    }

    #[test]
    fn fixtures_print_like_the_tables() {
        assert_eq!(trefoil_g2().to_string(), "< x, y | x*y^-1*x^-1*y*x = y^-2*x*y*x^-1*y^-1*x*y^2 >");
        assert_eq!(trefoil_g1(2).to_string(), "< x, y | x^-2*y^-1*x*y*x^2 = y^-2*x^2*y*x*y^-1*x^-2*y^2 >");
        let g3 = trefoil_g3();
        assert_eq!(g3.format_relation(&g3.relations()[1]), "x2 = y^-1*x1^2*x2*x1*x2*y");
        assert!(unknot_g3().relations().is_empty());
        assert!(matches!(fixture("figure-eight"), Err(Error::UnknownFixture(_))));
        assert!(fixture("trefoil-g1(0)").is_err());
        assert_eq!(fixture("trefoil-g1:2").unwrap(), trefoil_g1(2));
    }

    #[test]
    fn kishino_relation_2_reads_verbatim() {
        let k = kishino_g3();
        assert_eq!(k.format_relation(&k.relations()[1]), "c^-1*b*c = d^-1*b^-1*d^2*c*d^-2*b*d");
    }

    /// The braid `σ₁² ρ₁` closes to the virtual trefoil; its W₃ group is
    /// the fixture up to relabelling, and its other groups are the fixtures
    /// after eliminating `x2` with the first relation.
    #[test]
    fn trefoil_braid_matches_fixtures() {
        let b = VirtualBraidWord::parse(2, "s1 s1 v1").unwrap();
        let g = link_group(WadaKind::W3, &b).unwrap();
        let expected = trefoil_g3();
        // fixture order is [x1, x2, y]; braid order is [y, x1, x2]
        let relabelled: Vec<Word> = expected.relators().iter().map(|w| w.relabel(&[1, 2, 0])).collect();
        assert_eq!(g.relators(), relabelled);
    }
}
