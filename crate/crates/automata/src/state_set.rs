use std::fmt;

/// A subset of the states `{0, …, capacity-1}` of one automaton, stored as a
/// bit vector. Two sets compare equal only if they have the same capacity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    capacity: usize,
    bits: Vec<u64>,
}

impl StateSet {
    pub fn empty(capacity: usize) -> Self {
        StateSet {
            capacity,
            bits: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for q in 0..capacity {
            s.insert(q);
        }
        s
    }

    pub fn singleton(capacity: usize, state: usize) -> Self {
        let mut s = Self::empty(capacity);
        s.insert(state);
        s
    }

    pub fn from_iter(capacity: usize, states: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(capacity);
        for q in states {
            s.insert(q);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, state: usize) {
        assert!(state < self.capacity, "state {state} >= capacity {}", self.capacity);
        self.bits[state / 64] |= 1u64 << (state % 64);
    }

    pub fn remove(&mut self, state: usize) {
        assert!(state < self.capacity);
        self.bits[state / 64] &= !(1u64 << (state % 64));
    }

    pub fn contains(&self, state: usize) -> bool {
        state < self.capacity && self.bits[state / 64] & (1u64 << (state % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &StateSet) {
        assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        assert_eq!(self.capacity, other.capacity);
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &StateSet) -> bool {
        assert_eq!(self.capacity, other.capacity);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity).filter(|&q| self.contains(q))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
