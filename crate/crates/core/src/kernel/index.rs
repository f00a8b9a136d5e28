use std::fmt;

/// Basis label of `∧^k V`: a strictly increasing tuple of indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExtIndex(Vec<usize>);

/// Basis label of `S^b V`: a weakly increasing tuple of indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymIndex(Vec<usize>);

impl ExtIndex {
    /// Panics if `v` is not strictly increasing.
    pub fn new(v: Vec<usize>) -> Self {
        assert!(v.windows(2).all(|w| w[0] < w[1]), "ExtIndex must be strictly increasing: {v:?}");
        ExtIndex(v)
    }

    pub fn empty() -> Self {
        ExtIndex(Vec::new())
    }

    /// Sort an arbitrary tuple; `None` on a repeated index.
    pub fn from_unsorted(v: &[usize]) -> Option<(i64, ExtIndex)> {
        sort_with_sign(v).map(|(s, w)| (s, ExtIndex(w)))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Remove the entry at `pos`.
    pub fn without_pos(&self, pos: usize) -> ExtIndex {
        let mut v = self.0.clone();
        v.remove(pos);
        ExtIndex(v)
    }

    /// Insert `i`, returning the position it lands at, or `None` if present.
    pub fn insert(&self, i: usize) -> Option<(usize, ExtIndex)> {
        match self.0.binary_search(&i) {
            Ok(_) => None,
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, i);
                Some((pos, ExtIndex(v)))
            }
        }
    }
}

impl SymIndex {
    pub fn new(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        SymIndex(v)
    }

    pub fn empty() -> Self {
        SymIndex(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Multiset union.
    pub fn merge(&self, other: &SymIndex) -> SymIndex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SymIndex::new(v)
    }

    pub fn without_pos(&self, pos: usize) -> SymIndex {
        let mut v = self.0.clone();
        v.remove(pos);
        SymIndex(v)
    }
}

impl fmt::Display for ExtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sort a tuple by adjacent transpositions, returning the permutation sign,
/// or `None` if an index repeats.
pub fn sort_with_sign(v: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut w = v.to_vec();
    let mut sign = 1;
    // insertion sort; tuples are tiny
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && w[j - 1] == w[j] {
            return None;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((sign, w))
}

/// All strictly increasing `k`-tuples in `[0, dim)`, lexicographic.
pub fn ext_basis(dim: usize, k: usize) -> Vec<ExtIndex> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, dim: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<ExtIndex>) {
        if cur.len() == k {
            out.push(ExtIndex(cur.clone()));
            return;
        }
        for i in start..dim {
            cur.push(i);
            go(i + 1, dim, k, cur, out);
            cur.pop();
        }
    }
    go(0, dim, k, &mut cur, &mut out);
    out
}

/// All weakly increasing `b`-tuples in `[0, dim)`, lexicographic.
pub fn sym_basis(dim: usize, b: usize) -> Vec<SymIndex> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(b);
    fn go(start: usize, dim: usize, b: usize, cur: &mut Vec<usize>, out: &mut Vec<SymIndex>) {
        if cur.len() == b {
            out.push(SymIndex(cur.clone()));
            return;
        }
        for i in start..dim {
            cur.push(i);
            go(i, dim, b, cur, out);
            cur.pop();
        }
    }
    go(0, dim, b, &mut cur, &mut out);
    out
}

/// Position of `idx` in `ext_basis(dim, idx.degree())`.
pub fn ext_position(dim: usize, idx: &ExtIndex) -> usize {
    let k = idx.degree();
    let mut rank = 0;
    let mut start = 0;
    for (t, &x) in idx.as_slice().iter().enumerate() {
        for v in start..x {
            rank += binomial(dim - 1 - v, k - 1 - t);
        }
        start = x + 1;
    }
    rank
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
