//! Fixed-width bit vectors with cyclic shifts.
//!
//! These back the subset-sum dynamic programs: a `ModBitSet` of width `p`
//! holds a subset of `Z_p`, and "add the element `r` to every reachable sum"
//! is `self |= rotate(src, r)` — one pass over the words. `PlaneBitSet` is the
//! `p × p` analogue with a two-dimensional cyclic shift.

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Bit vector over positions `0..len` supporting cyclic (mod `len`) shifts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModBitSet {
    len: usize,
    words: Vec<u64>,
}

impl ModBitSet {
    pub fn new(len: usize) -> Self {
        assert!(len > 0, "bit set width must be positive");
        ModBitSet {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn test(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when every position in `0..len` is set.
    pub fn is_full(&self) -> bool {
        self.count_ones() == self.len
    }

    pub fn or_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (d, s) in self.words.iter_mut().zip(&other.words) {
            *d |= s;
        }
    }

    /// `self |= rotate(src, shift)` where rotation is cyclic modulo `len`.
    pub fn or_rotated(&mut self, src: &Self, shift: usize) {
        debug_assert_eq!(self.len, src.len);
        let r = shift % self.len;
        if r == 0 {
            self.or_assign(src);
            return;
        }
        self.or_shifted_up(src, r);
        self.or_shifted_down(src, self.len - r);
        self.mask_tail();
    }

    /// Clears self, then writes `rotate(src, shift)` into it.
    pub fn rotated_into(&self, shift: usize, out: &mut Self) {
        out.clear_all();
        out.or_rotated(self, shift);
    }

    /// Linear shift toward higher positions; bits that pass `len` are dropped
    /// (the caller adds the wrapped-around half separately).
    fn or_shifted_up(&mut self, src: &Self, k: usize) {
        let (ws, bs) = (k / WORD, k % WORD);
        let n = self.words.len();
        for i in (0..n.saturating_sub(ws)).rev() {
            let w = src.words[i];
            if w == 0 {
                continue;
            }
            self.words[i + ws] |= w << bs;
            if bs > 0 && i + ws + 1 < n {
                self.words[i + ws + 1] |= w >> (WORD - bs);
            }
        }
    }

    /// Linear shift toward lower positions; bits below `k` are dropped.
    fn or_shifted_down(&mut self, src: &Self, k: usize) {
        let (ws, bs) = (k / WORD, k % WORD);
        let n = self.words.len();
        for t in 0..n.saturating_sub(ws) {
            let mut w = src.words[t + ws] >> bs;
            if bs > 0 && t + ws + 1 < n {
                w |= src.words[t + ws + 1] << (WORD - bs);
            }
            self.words[t] |= w;
        }
    }

    fn mask_tail(&mut self) {
        let used = self.len % WORD;
        if used != 0 {
            *self.words.last_mut().unwrap() &= (1u64 << used) - 1;
        }
    }

    /// Iterate set positions in increasing order.
    pub fn ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD + bit)
    }
}

/// Bit vector over the `p × p` plane, indexed row-major as `x * p + y`,
/// supporting the two-dimensional cyclic shift "add the point `(dx, dy)`".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneBitSet {
    p: usize,
    bits: ModBitSet,
}

impl PlaneBitSet {
    pub fn new(p: usize) -> Self {
        assert!(p >= 2);
        PlaneBitSet {
            p,
            bits: ModBitSet::new(p * p),
        }
    }

    pub fn plane_modulus(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn index(&self, x: usize, y: usize) -> usize {
        x * self.p + y
    }

    pub fn set(&mut self, x: usize, y: usize) {
        let i = self.index(x, y);
        self.bits.set(i);
    }

    pub fn test(&self, x: usize, y: usize) -> bool {
        self.bits.test(self.index(x, y))
    }

    pub fn test_index(&self, i: usize) -> bool {
        self.bits.test(i)
    }

    pub fn set_index(&mut self, i: usize) {
        self.bits.set(i);
    }

    pub fn clear_all(&mut self) {
        self.bits.clear_all();
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn or_assign(&mut self, other: &Self) {
        self.bits.or_assign(&other.bits);
    }

    /// `self |= shift(src, (dx, dy))` where the shift is cyclic in both
    /// coordinates. Rows fit one word for `p <= 63` (the fast path); larger
    /// moduli fall back to per-bit iteration.
    pub fn or_shifted(&mut self, src: &Self, dx: usize, dy: usize) {
        debug_assert_eq!(self.p, src.p);
        let p = self.p;
        let (dx, dy) = (dx % p, dy % p);
        if p <= 63 {
            let mask = (1u64 << p) - 1;
            for x in 0..p {
                let row = src.get_row(x);
                if row == 0 {
                    continue;
                }
                let rot = if dy == 0 {
                    row
                } else {
                    (row << dy | row >> (p - dy)) & mask
                };
                self.or_row((x + dx) % p, rot);
            }
        } else {
            for i in src.bits.ones() {
                let (x, y) = (i / p, i % p);
                let j = ((x + dx) % p) * p + (y + dy) % p;
                self.bits.set(j);
            }
        }
    }

    fn get_row(&self, x: usize) -> u64 {
        let p = self.p;
        let start = x * p;
        let (w, b) = (start / WORD, start % WORD);
        let mut row = self.bits.words[w] >> b;
        if b + p > WORD && w + 1 < self.bits.words.len() {
            row |= self.bits.words[w + 1] << (WORD - b);
        }
        row & ((1u64 << p) - 1)
    }

    fn or_row(&mut self, x: usize, row: u64) {
        let p = self.p;
        let start = x * p;
        let (w, b) = (start / WORD, start % WORD);
        self.bits.words[w] |= row << b;
        if b + p > WORD && w + 1 < self.bits.words.len() {
            self.bits.words[w + 1] |= row >> (WORD - b);
        }
    }

    pub fn ones(&self) -> Ones<'_> {
        self.bits.ones()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_rotate(bits: &[bool], r: usize) -> Vec<bool> {
        let n = bits.len();
        let mut out = vec![false; n];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                out[(i + r) % n] = true;
            }
        }
        out
    }

    fn from_bools(bits: &[bool]) -> ModBitSet {
        let mut s = ModBitSet::new(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                s.set(i);
            }
        }
        s
    }

    fn to_bools(s: &ModBitSet) -> Vec<bool> {
        (0..s.len()).map(|i| s.test(i)).collect()
    }

    proptest! {
        #[test]
        fn rotation_matches_naive(bits in prop::collection::vec(any::<bool>(), 1..200), r in 0usize..400) {
            let s = from_bools(&bits);
            let mut out = ModBitSet::new(bits.len());
            out.or_rotated(&s, r);
            prop_assert_eq!(to_bools(&out), naive_rotate(&bits, r % bits.len()));
        }

        #[test]
        fn plane_shift_matches_naive(p in 2usize..9, seed in any::<u64>(), dx in 0usize..9, dy in 0usize..9) {
            let mut src = PlaneBitSet::new(p);
            let mut expect = vec![false; p * p];
            let mut state = seed;
            for i in 0..p * p {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                if state >> 63 == 1 {
                    src.set_index(i);
                    let (x, y) = (i / p, i % p);
                    expect[((x + dx) % p) * p + (y + dy) % p] = true;
                }
            }
            let mut out = PlaneBitSet::new(p);
            out.or_shifted(&src, dx, dy);
            let got: Vec<bool> = (0..p * p).map(|i| out.test_index(i)).collect();
            prop_assert_eq!(got, expect);
        }
    }

    #[test]
    fn ones_iterates_in_order() {
        let mut s = ModBitSet::new(130);
        for i in [0, 1, 63, 64, 65, 127, 129] {
            s.set(i);
        }
        let got: Vec<usize> = s.ones().collect();
        assert_eq!(got, vec![0, 1, 63, 64, 65, 127, 129]);
        assert_eq!(s.count_ones(), 7);
    }

    #[test]
    fn full_detection() {
        let mut s = ModBitSet::new(67);
        for i in 0..67 {
            s.set(i);
        }
        assert!(s.is_full());
    }

    #[test]
    fn wide_plane_fallback_path() {
        // p = 67 exceeds the single-word row fast path
        let p = 67;
        let mut src = PlaneBitSet::new(p);
        src.set(66, 66);
        src.set(0, 3);
        let mut out = PlaneBitSet::new(p);
        out.or_shifted(&src, 2, 3);
        assert!(out.test(1, 2));
        assert!(out.test(2, 6));
        assert_eq!(out.count_ones(), 2);
    }
}
