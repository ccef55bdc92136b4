use std::fmt;

/// Residues mod `n` reachable as nonempty-subset sums of a tuple prefix.
///
/// Stored as a fixed-width bit vector of length `n`. A prefix is
/// zero-sum-free exactly when `0` is not reachable, and the empty prefix has
/// no reachable residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SumState {
    modulus: u64,
    words: Vec<u64>,
}

impl SumState {
    pub fn empty(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let words = vec![0u64; modulus.div_ceil(64) as usize];
        SumState { modulus, words }
    }

    /// State of an explicit prefix; `None` once the prefix has a zero sum.
    pub fn from_prefix(modulus: u64, prefix: &[u64]) -> Option<Self> {
        prefix
            .iter()
            .try_fold(SumState::empty(modulus), |state, &x| {
                let x = x % modulus;
                state.admits(x).then(|| state.extend(x))
            })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, residue: u64) -> bool {
        let r = residue % self.modulus;
        self.words[(r / 64) as usize] >> (r % 64) & 1 == 1
    }

    fn insert(&mut self, residue: u64) {
        let r = residue % self.modulus;
        self.words[(r / 64) as usize] |= 1 << (r % 64);
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn residues(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(i as u64 * 64 + bit)
            })
        })
    }

    /// Whether appending `x` keeps the prefix zero-sum-free: `x ≠ 0` and
    /// `-x` is not already reachable.
    pub fn admits(&self, x: u64) -> bool {
        let x = x % self.modulus;
        x != 0 && !self.contains(self.modulus - x)
    }

    /// `R ∪ {x} ∪ (R + x)`.
    pub fn extend(&self, x: u64) -> SumState {
        let x = x % self.modulus;
        let mut next = self.clone();
        next.insert(x);
        for r in self.residues() {
            next.insert(r + x);
        }
        next
    }
}

impl fmt::Debug for SumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SumState")
            .field("modulus", &self.modulus)
            .field("reachable", &self.residues().collect::<Vec<_>>())
            .finish()
    }
}
