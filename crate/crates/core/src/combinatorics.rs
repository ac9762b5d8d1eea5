//! k-subset enumeration and ranking.
//!
//! Edges of the complete a-uniform hypergraph are stored densely, indexed by
//! their colexicographic rank `sum_i C(c_i, i + 1)` for `c_0 < c_1 < ...`.

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Lookup table of `C(i, j)` for `i <= n`, `j <= k`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    k: usize,
    table: Vec<u64>,
}

impl BinomialTable {
    pub fn new(n: usize, k: usize) -> Self {
        let mut table = vec![0u64; (n + 1) * (k + 1)];
        for i in 0..=n {
            for j in 0..=k.min(i) {
                table[i * (k + 1) + j] = binomial(i as u64, j as u64);
            }
        }
        BinomialTable { k, table }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        self.table[n * (self.k + 1) + k]
    }

    /// Colex rank of a strictly increasing tuple.
    #[inline]
    pub fn rank(&self, sorted: &[usize]) -> usize {
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.get(c, i + 1) as usize)
            .sum()
    }

    /// Inverse of [`rank`](Self::rank) for tuples of length `len` over `0..n`.
    pub fn unrank(&self, mut rank: usize, len: usize, n: usize, out: &mut Vec<usize>) {
        out.clear();
        out.resize(len, 0);
        let mut hi = n;
        for i in (0..len).rev() {
            // largest c < hi with C(c, i+1) <= rank
            let mut c = hi - 1;
            while self.get(c, i + 1) as usize > rank {
                c -= 1;
            }
            out[i] = c;
            rank -= self.get(c, i + 1) as usize;
            hi = c;
        }
    }
}

/// All k-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        Subsets { n, current }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.as_mut()?;
        let out = cur.clone();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

pub fn subsets(n: usize, k: usize) -> Subsets {
    Subsets::new(n, k)
}

/// k-subsets of an arbitrary slice, lexicographic in slice position.
pub fn subsets_of<T: Copy>(items: &[T], k: usize) -> impl Iterator<Item = Vec<T>> + '_ {
    subsets(items.len(), k).map(move |idx| idx.into_iter().map(|i| items[i]).collect())
}

/// Insert `v` into a sorted tuple that does not contain it.
pub(crate) fn insert_sorted(sorted: &[usize], v: usize, out: &mut Vec<usize>) {
    out.clear();
    let pos = sorted.partition_point(|&x| x < v);
    out.extend_from_slice(&sorted[..pos]);
    out.push(v);
    out.extend_from_slice(&sorted[pos..]);
}
