//! Finite presentations, Tietze moves and abelianization.

mod smith;

pub use smith::{row_lattice_contains, smith_normal_form, AbelianStructure, IntMatrix, SnfResult};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, Word};

/// A defining relation `lhs = rhs`. Bare relators have `rhs = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    pub fn relator(word: Word) -> Self {
        Relation { lhs: word, rhs: Word::identity() }
    }

    /// The single relator `lhs·rhs⁻¹`.
    pub fn as_relator(&self) -> Word {
        &self.lhs * &self.rhs.inverse()
    }

    pub fn is_two_sided(&self) -> bool {
        !self.rhs.is_identity()
    }

    fn map(&self, f: impl Fn(&Word) -> Word) -> Relation {
        Relation { lhs: f(&self.lhs), rhs: f(&self.rhs) }
    }

    /// Literal subword replacement applied to each side separately.
    pub fn replace_subword(&self, pattern: &Word, replacement: &Word) -> Relation {
        self.map(|w| w.replace_subword(pattern, replacement))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    alphabet: Alphabet,
    relations: Vec<Relation>,
}

/// Wire form shared with the CLI. Relator strings may be two-sided
/// (`"x*y = y*x"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

/// Elementary Tietze transformations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TietzeMove {
    /// Leaves the presentation unchanged.
    Identity,
    /// New generator `label` with defining relation `label = word`.
    AddGenerator { label: String, word: Word },
    /// Eliminates a generator occurring exactly once in some relator.
    RemoveGenerator { generator: usize },
    /// Appends the relator `r_first · r_second`.
    AddRelatorProduct { first: usize, second: usize },
    /// Drops a relator that is trivial, a cyclic permutation of another
    /// relator or its inverse, or a product of two other relators.
    RemoveRedundantRelator { index: usize },
}

impl GroupPresentation {
    pub fn new(alphabet: Alphabet, relations: Vec<Relation>) -> Result<Self> {
        for r in &relations {
            if !alphabet.contains(&r.lhs) || !alphabet.contains(&r.rhs) {
                return Err(Error::AlphabetMismatch("relation uses an unknown generator".into()));
            }
        }
        Ok(GroupPresentation { alphabet, relations })
    }

    pub fn from_relators(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        GroupPresentation::new(alphabet, relators.into_iter().map(Relation::relator).collect())
    }

    /// Parses generator labels plus relation strings (`"w"` or `"u = v"`).
    pub fn parse<S: AsRef<str>, T: AsRef<str>>(generators: &[S], relators: &[T]) -> Result<Self> {
        let alphabet = Alphabet::new(generators)?;
        let mut relations = Vec::new();
        for text in relators {
            let text = text.as_ref();
            let relation = match text.split_once('=') {
                Some((l, r)) => Relation::new(alphabet.parse_word(l.trim())?, alphabet.parse_word(r.trim())?),
                None => Relation::relator(alphabet.parse_word(text.trim())?),
            };
            relations.push(relation);
        }
        GroupPresentation::new(alphabet, relations)
    }

    pub fn from_json(json: &PresentationJson) -> Result<Self> {
        GroupPresentation::parse(&json.generators, &json.relators)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.alphabet.labels(),
            relators: self.relations.iter().map(|r| self.format_relation(r)).collect(),
        }
    }

    pub fn format_relation(&self, r: &Relation) -> String {
        if r.is_two_sided() {
            format!("{} = {}", self.alphabet.format_word(&r.lhs), self.alphabet.format_word(&r.rhs))
        } else {
            self.alphabet.format_word(&r.lhs)
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relators(&self) -> Vec<Word> {
        self.relations.iter().map(Relation::as_relator).collect()
    }

    pub fn relator(&self, index: usize) -> Result<Word> {
        self.relations
            .get(index)
            .map(Relation::as_relator)
            .ok_or_else(|| Error::InapplicableMove(format!("no relator with index {index}")))
    }

    /// Relator exponent sums, one row per relator.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = self
            .relators()
            .iter()
            .map(|r| (0..self.alphabet.len()).map(|g| BigInt::from(r.exponent_sum(g))).collect())
            .collect();
        IntMatrix::from_rows(self.alphabet.len(), &rows)
    }

    pub fn abelianization(&self) -> Result<AbelianStructure> {
        AbelianStructure::from_relations(&self.exponent_matrix())
    }

    /// Does the abelianized relation `Σ exps[g]·g = 0` follow from the
    /// relators?
    pub fn abelian_relation_holds(&self, exps: &[i64]) -> bool {
        let target: Vec<BigInt> = exps.iter().map(|&e| BigInt::from(e)).collect();
        row_lattice_contains(&self.exponent_matrix(), &target)
    }

    pub fn tietze(&self, mv: &TietzeMove) -> Result<GroupPresentation> {
        match mv {
            TietzeMove::Identity => Ok(self.clone()),
            TietzeMove::AddGenerator { label, word } => {
                if !self.alphabet.contains(word) {
                    return Err(Error::InapplicableMove("defining word uses unknown generators".into()));
                }
                let mut labels = self.alphabet.labels();
                labels.push(label.clone());
                let alphabet = Alphabet::new(&labels).map_err(|e| Error::InapplicableMove(e.to_string()))?;
                let z = Word::generator(labels.len() - 1);
                let mut relations = self.relations.clone();
                relations.push(Relation::new(z, word.clone()));
                GroupPresentation::new(alphabet, relations)
            }
            TietzeMove::RemoveGenerator { generator } => self.remove_generator(*generator),
            TietzeMove::AddRelatorProduct { first, second } => {
                let product = &self.relator(*first)? * &self.relator(*second)?;
                let mut relations = self.relations.clone();
                relations.push(Relation::relator(product));
                GroupPresentation::new(self.alphabet.clone(), relations)
            }
            TietzeMove::RemoveRedundantRelator { index } => {
                if !self.is_redundant(*index)? {
                    return Err(Error::InapplicableMove(format!("relator {index} is not recognisably redundant")));
                }
                let mut relations = self.relations.clone();
                relations.remove(*index);
                GroupPresentation::new(self.alphabet.clone(), relations)
            }
        }
    }

    fn is_redundant(&self, index: usize) -> Result<bool> {
        let target = self.relator(index)?;
        if target.cyclically_reduce().is_identity() {
            return Ok(true);
        }
        let others: Vec<Word> =
            self.relators().into_iter().enumerate().filter(|&(i, _)| i != index).map(|(_, r)| r).collect();
        for r in &others {
            if target.is_cyclic_permutation_of(r) || target.is_cyclic_permutation_of(&r.inverse()) {
                return Ok(true);
            }
        }
        for a in &others {
            for b in &others {
                for (u, v) in [(a.clone(), b.clone()), (a.inverse(), b.inverse())] {
                    if &u * &v == target || (&u * &v).inverse() == target {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    fn remove_generator(&self, g: usize) -> Result<GroupPresentation> {
        if g >= self.alphabet.len() {
            return Err(Error::InapplicableMove(format!("no generator with index {g}")));
        }
        let (idx, value) =
            self.relations.iter().enumerate().find_map(|(i, rel)| solve_for(rel, g).map(|w| (i, w))).ok_or_else(
                || {
                    Error::InapplicableMove(format!(
                        "generator {} does not occur exactly once in any relator",
                        self.alphabet.label(g)
                    ))
                },
            )?;
        let relations: Vec<Relation> =
            self.relations.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, r)| r.clone()).collect();
        self.eliminate(g, &value, relations, false)
    }

    /// Replaces generator `g` by `w` everywhere and drops it from the
    /// alphabet. Relators that become cyclically trivial are dropped.
    /// Substituting a generator by itself is the identity.
    pub fn substitute_generator(&self, g: usize, w: &Word) -> Result<GroupPresentation> {
        if *w == Word::generator(g) {
            return Ok(self.clone());
        }
        if g >= self.alphabet.len() || !self.alphabet.contains(w) {
            return Err(Error::AlphabetMismatch("substitution outside the alphabet".into()));
        }
        if w.count_occurrences(g) > 0 {
            return Err(Error::InapplicableMove("replacement word must not contain the substituted generator".into()));
        }
        self.eliminate(g, w, self.relations.clone(), true)
    }

    fn eliminate(
        &self,
        g: usize,
        value: &Word,
        relations: Vec<Relation>,
        drop_trivial: bool,
    ) -> Result<GroupPresentation> {
        let mut images: Vec<Word> = (0..self.alphabet.len()).map(Word::generator).collect();
        images[g] = value.clone();
        let map: Vec<usize> = (0..self.alphabet.len()).map(|h| if h > g { h - 1 } else { h }).collect();
        let labels: Vec<String> =
            self.alphabet.labels().into_iter().enumerate().filter(|&(h, _)| h != g).map(|(_, l)| l).collect();
        let alphabet = Alphabet::new(&labels)?;
        let relations = relations
            .iter()
            .map(|r| r.map(|w| w.substitute(&images).relabel(&map)))
            .filter(|r| !drop_trivial || !r.as_relator().cyclically_reduce().is_identity())
            .collect();
        GroupPresentation::new(alphabet, relations)
    }
}

/// If `g` occurs exactly once in the relator of `rel`, returns the word it
/// equals.
fn solve_for(rel: &Relation, g: usize) -> Option<Word> {
    // A relation written as `g = w` is read off directly.
    if rel.lhs == Word::generator(g) && rel.rhs.count_occurrences(g) == 0 {
        return Some(rel.rhs.clone());
    }
    let r = rel.as_relator();
    if r.count_occurrences(g) != 1 {
        return None;
    }
    let syl = r.syllables();
    let pos = syl.iter().position(|&(h, _)| h == g)?;
    let u = Word::reduce(syl[..pos].iter().copied());
    let v = Word::reduce(syl[pos + 1..].iter().copied());
    // u g^ε v = 1
    Some(if syl[pos].1 == 1 { &u.inverse() * &v.inverse() } else { &v * &u })
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| self.format_relation(r)).collect();
        write!(f, "< {} | {} >", self.alphabet.labels().join(", "), rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(gens: &[&str], rels: &[&str]) -> GroupPresentation {
        GroupPresentation::parse(gens, rels).unwrap()
    }

    #[test]
    fn cyclic_group() {
        let g = p(&["x"], &["x^2"]);
        assert_eq!(g.abelianization().unwrap(), AbelianStructure { free_rank: 0, torsion: vec![2] });
    }

    #[test]
    fn json_round_trip() {
        let g = p(&["x", "y"], &["x*y = y*x", "x^3"]);
        let json = g.to_json();
        assert_eq!(json.relators, vec!["x*y = y*x".to_string(), "x^3".to_string()]);
        let text = serde_json::to_string(&json).unwrap();
        let back: PresentationJson = serde_json::from_str(&text).unwrap();
        assert_eq!(GroupPresentation::from_json(&back).unwrap(), g);
    }

    #[test]
    fn add_then_remove_generator() {
        let g = p(&["x", "y"], &["x*y*x^-1*y^-1"]);
        let xy = g.alphabet().parse_word("x*y").unwrap();
        let added = g.tietze(&TietzeMove::AddGenerator { label: "z".into(), word: xy }).unwrap();
        assert_eq!(added.generator_count(), 3);
        let back = added.tietze(&TietzeMove::RemoveGenerator { generator: 2 }).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn relator_product_appends() {
        let g = p(&["x", "y"], &["x^2", "y^3"]);
        let h = g.tietze(&TietzeMove::AddRelatorProduct { first: 0, second: 1 }).unwrap();
        assert_eq!(h.relator(2).unwrap(), g.alphabet().parse_word("x^2*y^3").unwrap());
        let back = h.tietze(&TietzeMove::RemoveRedundantRelator { index: 2 }).unwrap();
        assert_eq!(back, g);
        assert!(g.tietze(&TietzeMove::RemoveRedundantRelator { index: 0 }).is_err());
    }

    #[test]
    fn remove_generator_requires_single_occurrence() {
        let g = p(&["x", "y"], &["x^2*y^2"]);
        assert!(g.tietze(&TietzeMove::RemoveGenerator { generator: 0 }).is_err());
        let h = p(&["x", "y"], &["x*y^2*x^-1*y^3", "y*x^-1*y"]);
        let r = h.tietze(&TietzeMove::RemoveGenerator { generator: 0 }).unwrap();
        assert_eq!(r.generator_count(), 1);
        // x = y^2 from the second relator, then the first relator becomes y^5
        assert_eq!(r.relator(0).unwrap(), Word::power_of(0, 5));
    }

    #[test]
    fn substitution() {
        let g = p(&["a", "b"], &["a*b*a^-1*b^-1", "b^2"]);
        assert_eq!(g.substitute_generator(1, &Word::generator(1)).unwrap(), g);
        let a = g.alphabet().gen("a").unwrap();
        let h = g.substitute_generator(1, &a).unwrap();
        // first relator trivialises and is dropped
        assert_eq!(h.relations().len(), 1);
        assert_eq!(h.relator(0).unwrap(), Word::power_of(0, 2));
        assert!(g.substitute_generator(1, &Word::generator(1).pow(2)).is_err());
    }

    #[test]
    fn abelian_relations() {
        let g = p(&["a", "b", "c"], &["a*b*c^2", "b = c"]);
        assert!(g.abelian_relation_holds(&[1, 0, 3]));
        assert!(!g.abelian_relation_holds(&[1, 0, 0]));
        assert_eq!(g.abelianization().unwrap().to_string(), "Z");
    }
}
