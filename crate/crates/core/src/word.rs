//! Finite words over an interned alphabet and eventually periodic infinite words.

use std::fmt;

/// An interned letter of the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite word. The empty word is `Word::empty()`.
///
/// Words order lexicographically on letter ids, which is also the order used
/// for all printed output.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// The subword from position `i` to `j` inclusive, counting from 1.
    /// Returns the empty word when `j < i`.
    pub fn subword(&self, i: usize, j: usize) -> Word {
        if j < i || i == 0 {
            return Word::empty();
        }
        let j = j.min(self.len());
        if i > j {
            return Word::empty();
        }
        Word(self.0[i - 1..j].to_vec())
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    /// Everything after the first `n` letters.
    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n.min(self.len())..].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn pushed(&self, letter: Letter) -> Word {
        let mut w = self.clone();
        w.push(letter);
        w
    }

    /// If `self = prefix · rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    pub fn is_beginning_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// An eventually periodic infinite sequence `prefix · cycle · cycle · …`.
///
/// Values are always kept in canonical form: the cycle is primitive and the
/// prefix is as short as possible. Two lassos denote the same sequence iff
/// they are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lasso<T> {
    prefix: Vec<T>,
    cycle: Vec<T>,
}

impl<T: Clone + Eq> Lasso<T> {
    /// Builds the canonical lasso for `prefix · cycle^∞`. `None` if the cycle is empty.
    pub fn new(prefix: Vec<T>, cycle: Vec<T>) -> Option<Self> {
        if cycle.is_empty() {
            return None;
        }
        let mut lasso = Lasso { prefix, cycle };
        lasso.canonicalize();
        Some(lasso)
    }

    fn canonicalize(&mut self) {
        let n = self.cycle.len();
        if let Some(p) = (1..=n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| (p..n).all(|i| self.cycle[i] == self.cycle[i - p]))
        {
            self.cycle.truncate(p);
        }
        while let (Some(last_prefix), Some(last_cycle)) = (self.prefix.last(), self.cycle.last()) {
            if last_prefix != last_cycle {
                break;
            }
            self.prefix.pop();
            self.cycle.rotate_right(1);
        }
    }

    pub fn prefix(&self) -> &[T] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[T] {
        &self.cycle
    }

    /// Element at 0-based position `i` of the infinite sequence.
    pub fn at(&self, i: usize) -> &T {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// Position of `i` in the finite presentation: prefix positions are
    /// themselves, cycle positions fold onto `prefix.len() + k`.
    pub fn fold_index(&self, i: usize) -> usize {
        if i < self.prefix.len() {
            i
        } else {
            self.prefix.len() + (i - self.prefix.len()) % self.cycle.len()
        }
    }

    /// Number of distinct positions in the finite presentation.
    pub fn presentation_len(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    /// The first `n` elements.
    pub fn take(&self, n: usize) -> Vec<T> {
        (0..n).map(|i| self.at(i).clone()).collect()
    }

    /// The sequence with its first `k` elements removed.
    pub fn drop_front(&self, k: usize) -> Self {
        if k <= self.prefix.len() {
            let mut l = Lasso {
                prefix: self.prefix[k..].to_vec(),
                cycle: self.cycle.clone(),
            };
            l.canonicalize();
            l
        } else {
            let mut cycle = self.cycle.clone();
            cycle.rotate_left((k - self.prefix.len()) % self.cycle.len());
            let mut l = Lasso { prefix: Vec::new(), cycle };
            l.canonicalize();
            l
        }
    }

    /// The sequence `items · self`.
    pub fn prepend(&self, items: &[T]) -> Self {
        let mut prefix = items.to_vec();
        prefix.extend_from_slice(&self.prefix);
        let mut l = Lasso {
            prefix,
            cycle: self.cycle.clone(),
        };
        l.canonicalize();
        l
    }

    pub fn map<U: Clone + Eq>(&self, f: impl Fn(&T) -> U) -> Lasso<U> {
        let mut l = Lasso {
            prefix: self.prefix.iter().map(&f).collect(),
            cycle: self.cycle.iter().map(&f).collect(),
        };
        l.canonicalize();
        l
    }
}

/// An eventually periodic infinite word.
pub type LassoWord = Lasso<Letter>;

impl LassoWord {
    /// The first `n` letters as a finite word.
    pub fn prefix_word(&self, n: usize) -> Word {
        Word(self.take(n))
    }

    pub fn starts_with(&self, w: &Word) -> bool {
        w.iter().enumerate().all(|(i, l)| *self.at(i) == l)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}
