//! Free groups on explicit alphabets.
//!
//! Words are kept in run-length form: a list of `(generator, exponent)`
//! syllables with no zero exponents and no two adjacent syllables on the same
//! generator. Every constructor reduces, so two words are equal as group
//! elements exactly when they are equal as values.
//!
//! Conventions used throughout the crate:
//! conjugation is `u^h = h⁻¹·u·h` and the commutator is `[a, b] = a⁻¹b⁻¹ab`,
//! with left-normed iterates `[a, b, c] = [[a, b], c]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A named free generator. `id` is the position inside its [`Alphabet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: usize,
    pub label: String,
}

/// An ordered list of generator labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    gens: Vec<Generator>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let mut seen = HashMap::new();
        let mut gens = Vec::with_capacity(labels.len());
        for (id, label) in labels.iter().enumerate() {
            let label = label.as_ref();
            let mut chars = label.chars();
            match chars.next() {
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
                _ => return Err(Error::InvalidAlphabet(format!("label `{label}` must start with a letter"))),
            }
            if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidAlphabet(format!("label `{label}` must be alphanumeric")));
            }
            if seen.insert(label.to_string(), id).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate label `{label}`")));
            }
            gens.push(Generator { id, label: label.to_string() });
        }
        Ok(Alphabet { gens })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn labels(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.label.clone()).collect()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.gens[id].label
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.gens.iter().position(|g| g.label == label).ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    /// The word consisting of the single generator `label`.
    pub fn gen(&self, label: &str) -> Result<Word> {
        Ok(Word::generator(self.index_of(label)?))
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.syllables().iter().all(|&(g, _)| g < self.len())
    }

    fn check(&self, w: &Word) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!(
                "word uses generator index {} but the alphabet has {} generators",
                w.max_generator().unwrap_or(0),
                self.len()
            )))
        }
    }

    pub fn multiply(&self, u: &Word, v: &Word) -> Result<Word> {
        self.check(u)?;
        self.check(v)?;
        Ok(u * v)
    }

    pub fn invert(&self, u: &Word) -> Result<Word> {
        self.check(u)?;
        Ok(u.inverse())
    }

    pub fn conjugate(&self, u: &Word, h: &Word) -> Result<Word> {
        self.check(u)?;
        self.check(h)?;
        Ok(u.conjugate(h))
    }

    pub fn commutator(&self, a: &Word, b: &Word) -> Result<Word> {
        self.check(a)?;
        self.check(b)?;
        Ok(Word::commutator(a, b))
    }

    /// Parses the text syntax `x^-2*y*x1^3`. The `*` separators and `^1`
    /// exponents are optional; `1` (or the empty string) is the identity.
    /// Parentheses group, `(x*y)^-2`, and `[a,b,c]` is the left-normed
    /// commutator `[[a,b],c]`. Labels are matched longest-first, so `x1x2`
    /// reads as `x1·x2`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.trim() == "1" {
            return Ok(Word::identity());
        }
        let mut labels: Vec<&Generator> = self.gens.iter().collect();
        labels.sort_by_key(|g| std::cmp::Reverse(g.label.len()));
        let mut parser = WordParser { text, pos: 0, labels };
        let w = parser.product()?;
        parser.skip_ws();
        if parser.pos < text.len() {
            return Err(parser.error("unexpected input"));
        }
        Ok(w)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".to_string();
        }
        w.syllables()
            .iter()
            .map(|&(g, e)| {
                let label = self.gens.get(g).map(|x| x.label.as_str()).unwrap_or("?");
                if e == 1 {
                    label.to_string()
                } else {
                    format!("{label}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

struct WordParser<'a> {
    text: &'a str,
    pos: usize,
    labels: Vec<&'a Generator>,
}

impl WordParser<'_> {
    fn error(&self, msg: &str) -> Error {
        let rest = &self.text[self.pos..];
        let msg = if rest.is_empty() { msg.to_string() } else { format!("{msg} at `{rest}`") };
        Error::Parse { pos: self.pos, msg }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.as_bytes().get(self.pos).copied()
    }

    /// Factors up to a closing delimiter or the end of input.
    fn product(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        let mut first = true;
        loop {
            match self.peek() {
                None | Some(b')' | b']' | b',') => {
                    if !first && self.text[..self.pos].trim_end().ends_with('*') {
                        return Err(self.error("expected a factor after `*`"));
                    }
                    return Ok(w);
                }
                Some(b'*') => {
                    if first || self.text[..self.pos].trim_end().ends_with('*') {
                        return Err(self.error("unexpected `*`"));
                    }
                    self.pos += 1;
                }
                Some(_) => {
                    let f = self.factor()?;
                    w = &w * &f;
                    first = false;
                }
            }
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.product()?;
                self.expect(b')')?;
                w
            }
            Some(b'[') => {
                self.pos += 1;
                let mut parts = vec![self.product()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.product()?);
                }
                self.expect(b']')?;
                if parts.len() < 2 {
                    return Err(self.error("a commutator needs at least two entries"));
                }
                Word::left_normed(&parts)
            }
            _ => {
                let rest = &self.text[self.pos..];
                let gen = self
                    .labels
                    .iter()
                    .find(|g| rest.starts_with(g.label.as_str()))
                    .ok_or_else(|| self.error("unknown generator"))?;
                self.pos += gen.label.len();
                Word::generator(gen.id)
            }
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let rest = &self.text[self.pos..];
            let sign = usize::from(rest.starts_with(['-', '+']));
            let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
            let exp: i64 = rest[..sign + digits].parse().map_err(|_| self.error("expected an integer exponent"))?;
            self.pos += sign + digits;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }
}

/// A freely reduced word in run-length form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(id: usize) -> Self {
        Word { syllables: vec![(id, 1)] }
    }

    pub fn power_of(id: usize, exp: i64) -> Self {
        Word::reduce([(id, exp)])
    }

    /// Freely reduces an arbitrary list of `(generator, exponent)` pairs.
    pub fn reduce<I: IntoIterator<Item = (usize, i64)>>(raw: I) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in raw {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_len(&self) -> usize {
        self.syllables.len()
    }

    /// Letter length: the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    /// Letters as `(generator, ±1)` pairs.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.syllables.iter().flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.syllables.iter().filter(|&&(h, _)| h == g).map(|&(_, e)| e).sum()
    }

    pub fn inverse(&self) -> Word {
        Word { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Word::identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// `h⁻¹·self·h`.
    pub fn conjugate(&self, h: &Word) -> Word {
        &(&h.inverse() * self) * h
    }

    /// `[a, b] = a⁻¹b⁻¹ab`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        let ab = a * b;
        let ba = b * a;
        &ba.inverse() * &ab
    }

    /// Left-normed commutator `[w₁, w₂, …, w_k]`.
    pub fn left_normed(words: &[Word]) -> Word {
        let mut iter = words.iter();
        let mut acc = iter.next().cloned().unwrap_or_default();
        for w in iter {
            acc = Word::commutator(&acc, w);
        }
        acc
    }

    /// Replaces generator `g` by `images[g]` throughout.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &(g, e) in &self.syllables {
            let img = images[g].pow(e);
            for &(h, f) in img.syllables() {
                push_syllable(&mut out, h, f);
            }
        }
        Word { syllables: out }
    }

    /// Renumbers generators; `map[g]` is the new index of `g`.
    pub fn relabel(&self, map: &[usize]) -> Word {
        Word::reduce(self.syllables.iter().map(|&(g, e)| (map[g], e)))
    }

    /// Cancels matching letters at the two ends; the result is a conjugate.
    pub fn cyclically_reduce(&self) -> Word {
        let mut s = self.syllables.clone();
        loop {
            if s.len() < 2 {
                break;
            }
            let (g0, e0) = s[0];
            let (g1, e1) = s[s.len() - 1];
            if g0 != g1 {
                break;
            }
            // merge the last syllable into the first
            s.pop();
            let e = e0 + e1;
            if e == 0 {
                s.remove(0);
            } else {
                s[0].1 = e;
                break;
            }
        }
        Word { syllables: s }
    }

    /// True if `other` is a cyclic permutation of `self` as letter strings
    /// (both are cyclically reduced first).
    pub fn is_cyclic_permutation_of(&self, other: &Word) -> bool {
        let a: Vec<_> = self.cyclically_reduce().letters().collect();
        let b: Vec<_> = other.cyclically_reduce().letters().collect();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let doubled: Vec<_> = a.iter().chain(a.iter()).copied().collect();
        doubled.windows(b.len()).any(|w| w == b.as_slice())
    }

    /// Replaces every literal (letter-level, left to right, non-overlapping)
    /// occurrence of `pattern` by `replacement`, then reduces.
    pub fn replace_subword(&self, pattern: &Word, replacement: &Word) -> Word {
        let letters: Vec<_> = self.letters().collect();
        let pat: Vec<_> = pattern.letters().collect();
        if pat.is_empty() {
            return self.clone();
        }
        let mut raw = Vec::new();
        let mut i = 0;
        while i < letters.len() {
            if letters[i..].starts_with(&pat) {
                raw.extend_from_slice(replacement.syllables());
                i += pat.len();
            } else {
                raw.push(letters[i]);
                i += 1;
            }
        }
        Word::reduce(raw)
    }

    pub fn count_occurrences(&self, g: usize) -> usize {
        self.syllables.iter().filter(|&&(h, _)| h == g).map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }
}

fn push_syllable(out: &mut Vec<(usize, i64)>, g: usize, e: i64) {
    if e == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == g {
            last.1 += e;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((g, e));
}

impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.syllables.clone();
        for &(g, e) in &rhs.syllables {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl fmt::Display for Word {
    /// Alphabet-free rendering using `g0, g1, …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A homomorphism between free groups, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            let missing = source.label(images.len().min(source.len().saturating_sub(1)));
            return Err(Error::MissingImage(missing.to_string()));
        }
        for img in &images {
            target.check(img)?;
        }
        Ok(Endomorphism { source, target, images })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = (0..alphabet.len()).map(Word::generator).collect();
        Endomorphism { source: alphabet.clone(), target: alphabet.clone(), images }
    }

    /// Builds an endomorphism of `alphabet` that fixes every generator not
    /// listed in `moved`.
    pub fn with_images(alphabet: &Alphabet, moved: &[(usize, Word)]) -> Result<Self> {
        let mut images: Vec<Word> = (0..alphabet.len()).map(Word::generator).collect();
        for (g, w) in moved {
            if *g >= alphabet.len() {
                return Err(Error::AlphabetMismatch(format!("generator index {g}")));
            }
            images[*g] = w.clone();
        }
        Endomorphism::new(alphabet.clone(), alphabet.clone(), images)
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &Word {
        &self.images[g]
    }

    pub fn apply(&self, u: &Word) -> Result<Word> {
        if let Some(g) = u.max_generator() {
            if g >= self.images.len() {
                return Err(Error::MissingImage(format!("index {g}")));
            }
        }
        Ok(u.substitute(&self.images))
    }

    /// `(self ∘ inner)(g) = self(inner(g))`.
    pub fn compose(&self, inner: &Endomorphism) -> Result<Endomorphism> {
        if inner.target != self.source {
            return Err(Error::AlphabetMismatch(
                "target of the inner map differs from the source of the outer map".into(),
            ));
        }
        let images = inner.images.iter().map(|w| w.substitute(&self.images)).collect();
        Ok(Endomorphism { source: inner.source.clone(), target: self.target.clone(), images })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.images.iter().enumerate().all(|(g, w)| *w == Word::generator(g))
    }

    pub fn format(&self) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(g, w)| format!("{} -> {}", self.source.label(g), self.target.format_word(w)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(Word::reduce([(0, 1), (0, -1)]).is_identity());
        assert_eq!(Word::reduce([(0, 2), (0, -1)]), Word::generator(0));
        assert_eq!(Word::reduce([(0, 1), (1, 1), (1, -1), (0, 1)]), Word::power_of(0, 2));
        assert!(Word::reduce([(0, 0), (1, 0)]).is_identity());
    }

    #[test]
    fn multiply_and_invert() {
        let a = xy();
        let x = a.gen("x").unwrap();
        let xy = a.parse_word("x*y").unwrap();
        assert!(a.multiply(&x, &x.inverse()).unwrap().is_identity());
        assert_eq!(a.format_word(&a.invert(&xy).unwrap()), "y^-1*x^-1");
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let a = Alphabet::new(&["x"]).unwrap();
        let w = Word::generator(1);
        assert!(matches!(a.multiply(&w, &w), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn conjugation_convention() {
        let a = xy();
        let x = a.gen("x").unwrap();
        let y = a.gen("y").unwrap();
        assert_eq!(a.format_word(&x.conjugate(&y)), "y^-1*x*y");
        assert_eq!(x.conjugate(&y).conjugate(&y.inverse()), x);
        for i in -3..=3 {
            let expected = &(&Word::power_of(1, -i) * &x) * &Word::power_of(1, i);
            assert_eq!(x.conjugate(&Word::power_of(1, i)), expected);
        }
    }

    #[test]
    fn commutator_convention() {
        let a = xy();
        let x = a.gen("x").unwrap();
        let y = a.gen("y").unwrap();
        assert!(Word::commutator(&x, &x).is_identity());
        assert_eq!(a.format_word(&Word::commutator(&x, &y)), "x^-1*y^-1*x*y");
        let xyz = Word::left_normed(&[y.clone(), x.clone(), x.clone()]);
        assert_eq!(xyz, Word::commutator(&Word::commutator(&y, &x), &x));
    }

    #[test]
    fn parse_and_print() {
        let a = Alphabet::new(&["x", "y", "x1"]).unwrap();
        for s in ["x^-2*y*x1^3", "1", "y", "x1^-1*x"] {
            assert_eq!(a.format_word(&a.parse_word(s).unwrap()), s);
        }
        assert_eq!(a.parse_word("x x1^3y").unwrap(), a.parse_word("x*x1^3*y").unwrap());
        assert_eq!(a.parse_word("x^1").unwrap(), a.gen("x").unwrap());
        assert_eq!(a.parse_word("").unwrap(), Word::identity());
        assert!(a.parse_word("z").is_err());
        assert!(a.parse_word("x**y").is_err());
        assert!(a.parse_word("x^").is_err());
        assert!(a.parse_word("x*").is_err());
    }

    #[test]
    fn invalid_alphabets() {
        assert!(Alphabet::new(&["x", "x"]).is_err());
        assert!(Alphabet::new(&["1x"]).is_err());
        assert!(Alphabet::new(&[""]).is_err());
    }

    #[test]
    fn cyclic_reduction() {
        let a = xy();
        let w = a.parse_word("y^-1*x*y^2").unwrap();
        assert_eq!(a.format_word(&w.cyclically_reduce()), "y*x");
        let u = a.parse_word("x*y^2*x^-1").unwrap();
        assert_eq!(u.cyclically_reduce(), Word::power_of(1, 2));
        let c = a.parse_word("x*y*x*y^-1").unwrap();
        let c2 = a.parse_word("y*x*y^-1*x").unwrap();
        assert!(c.is_cyclic_permutation_of(&c2));
        assert!(!c.is_cyclic_permutation_of(&c2.inverse()));
    }

    #[test]
    fn subword_replacement() {
        let a = xy();
        let w = a.parse_word("x*y^2*x*y^2").unwrap();
        let pat = a.parse_word("y^2").unwrap();
        let rep = a.parse_word("x^-1").unwrap();
        assert!(w.replace_subword(&pat, &rep).is_identity());
    }

    #[test]
    fn endomorphism_apply_and_compose() {
        let a = xy();
        let id = Endomorphism::identity(&a);
        let u = a.parse_word("x^3*y^-2*x").unwrap();
        assert_eq!(id.apply(&u).unwrap(), u);
        let swap = Endomorphism::with_images(&a, &[(0, Word::generator(1)), (1, Word::generator(0))]).unwrap();
        assert!(swap.compose(&swap).unwrap().is_identity());
        assert_eq!(id.compose(&swap).unwrap(), swap);
        assert_eq!(swap.compose(&id).unwrap(), swap);
        let other = Alphabet::new(&["a"]).unwrap();
        assert!(Endomorphism::identity(&other).compose(&swap).is_err());
        assert!(Endomorphism::new(a.clone(), a.clone(), vec![Word::identity()]).is_err());
        let short = Endomorphism::new(other.clone(), other, vec![Word::identity()]).unwrap();
        assert!(matches!(short.apply(&Word::generator(1)), Err(Error::MissingImage(_))));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let a = xy();
        let w = a.parse_word("x*y^-1*x").unwrap();
        let mut acc = Word::identity();
        for _ in 0..5 {
            acc = &acc * &w;
        }
        assert_eq!(w.pow(5), acc);
        assert_eq!(w.pow(-5), acc.inverse());
        assert!(w.pow(0).is_identity());
    }
}
