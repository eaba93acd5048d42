use std::fmt;

/// A set of hyperplane indices, stored as a bit vector with no trailing zero words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HyperplaneSet {
    words: Vec<u64>,
}

impl HyperplaneSet {
    pub fn new() -> Self {
        HyperplaneSet::default()
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = HyperplaneSet::new();
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| w & (1 << b) != 0).map(move |b| wi * 64 + b)
        })
    }

    pub fn union(&self, other: &HyperplaneSet) -> HyperplaneSet {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.word(i) | other.word(i))
            .collect();
        HyperplaneSet { words }
    }

    pub fn intersection(&self, other: &HyperplaneSet) -> HyperplaneSet {
        let n = self.words.len().min(other.words.len());
        let mut s = HyperplaneSet {
            words: (0..n).map(|i| self.words[i] & other.words[i]).collect(),
        };
        s.trim();
        s
    }

    pub fn intersects(&self, other: &HyperplaneSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &HyperplaneSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.word(i) == 0)
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl fmt::Debug for HyperplaneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = HyperplaneSet::from_indices([0, 3, 70]);
        let b = HyperplaneSet::from_indices([3, 5]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(70) && !a.contains(69));
        assert_eq!(a.intersection(&b), HyperplaneSet::from_indices([3]));
        assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), vec![0, 3, 5, 70]);
        assert!(HyperplaneSet::from_indices([3]).is_subset(&a));
        assert!(!b.is_subset(&a));
        // canonical form: intersection that drops high words equals a fresh set
        let c = HyperplaneSet::from_indices([70]).intersection(&b);
        assert_eq!(c, HyperplaneSet::new());
        assert!(c.is_empty());
    }
}
