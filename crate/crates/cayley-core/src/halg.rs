//! Arithmetic in `H = <a, b | a^4 = b^2 = (ab)^2 = 1> x <c_1> x … x <c_{m-3}>`
//! and its distinguished subsets.
//!
//! Every element has a unique canonical form `a^i b^j c_1^{v_1} … c_{m-3}^{v_{m-3}}`
//! and a frozen dense index
//!
//! ```text
//! index = aExp + 4*bExp + 8*(cVec as little-endian integer)
//! ```
//!
//! so `H` maps bijectively onto `{0, …, 2^m - 1}` with the identity at 0. The
//! layout makes membership in `K` (even `aExp`) and in `H_1` (top c-bit clear)
//! single-bit tests, and it is stable: certificates depend on it.
//!
//! Index conventions with possibly-empty ranges follow the defining formulas:
//! `c_0` and `c_{-1}` denote the identity, and ceilings/floors of negative
//! halves are evaluated mathematically (`ceil(-1/2) = 0`, `floor(-1/2) = -1`),
//! so `m = 4` instantiates every formula without special cases.

use std::fmt;

use crate::{Error, Result};

/// Group parameter: `H` has order `2^m`, with `m >= 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HParams {
    m: u32,
}

impl HParams {
    pub fn new(m: u32) -> Result<Self> {
        if m < 4 {
            return Err(Error::InvalidM(m));
        }
        // The dense encoding keeps degrees within u32 and desk scale.
        if m > 30 {
            return Err(Error::InvalidConfig(format!("m={m} exceeds the supported range (m <= 30)")));
        }
        Ok(HParams { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `|H| = 2^m`, which is also the permutation degree downstream.
    pub fn group_order(&self) -> usize {
        1usize << self.m
    }

    /// Number of central generators `c_1, …, c_{m-3}`.
    pub fn c_rank(&self) -> u32 {
        self.m - 3
    }

    pub fn is_even_m(&self) -> bool {
        self.m.is_multiple_of(2)
    }

    /// All elements of `H` in index order.
    pub fn enumerate(self) -> impl Iterator<Item = HElement> {
        (0..self.group_order()).map(move |i| self.decode(i).expect("index in range"))
    }

    /// Decodes a dense index back into canonical form.
    pub fn decode(&self, index: usize) -> Result<HElement> {
        if index >= self.group_order() {
            return Err(Error::IndexOutOfRange(index, self.group_order()));
        }
        Ok(HElement {
            m: self.m,
            a: (index & 3) as u8,
            b: ((index >> 2) & 1) as u8,
            c: (index >> 3) as u32,
        })
    }

    pub fn identity(&self) -> HElement {
        HElement { m: self.m, a: 0, b: 0, c: 0 }
    }

    pub fn gen_a(&self) -> HElement {
        HElement { m: self.m, a: 1, b: 0, c: 0 }
    }

    pub fn gen_b(&self) -> HElement {
        HElement { m: self.m, a: 0, b: 1, c: 0 }
    }

    /// The central generator `c_i`, `1 <= i <= m-3`.
    pub fn gen_c(&self, i: u32) -> Result<HElement> {
        if i < 1 || i > self.c_rank() {
            return Err(Error::BadCIndex(i as i64, self.c_rank()));
        }
        Ok(HElement { m: self.m, a: 0, b: 0, c: 1 << (i - 1) })
    }

    /// `c_i` under the convention `c_{-1} = c_0 = 1`; indices above `m-3`
    /// are rejected.
    pub fn c_or_identity(&self, i: i64) -> Result<HElement> {
        if i <= 0 {
            Ok(self.identity())
        } else if i as u32 <= self.c_rank() {
            self.gen_c(i as u32)
        } else {
            Err(Error::BadCIndex(i, self.c_rank()))
        }
    }

    /// `h = a * prod_{i=0}^{ceil((m-5)/2)} c_{2i+1}`, where the ceiling of the
    /// negative half at `m = 4` evaluates to 0, so the product is `c_1` there.
    pub fn h_element(&self) -> HElement {
        let top = ceil_div_2(self.m as i64 - 5);
        let mut acc = self.gen_a();
        for i in 0..=top {
            let c = self.c_or_identity(2 * i + 1).expect("odd index within range");
            acc = acc.mul(&c).expect("same parameters");
        }
        acc
    }

    /// `h_1 = h * c_{m-3}`, defined for even `m` only.
    pub fn h1_element(&self) -> Result<HElement> {
        if !self.is_even_m() {
            return Err(Error::H1RequiresEvenM(self.m));
        }
        let c_top = self.gen_c(self.c_rank())?;
        self.h_element().mul(&c_top)
    }

    /// `a^2 * h`, the second coset representative used by the fixed-point
    /// identities.
    pub fn a2h_element(&self) -> HElement {
        let a2 = self.gen_a().mul(&self.gen_a()).expect("same parameters");
        a2.mul(&self.h_element()).expect("same parameters")
    }

    /// A named special element; `names` are `a`, `b`, `c<i>`, `h`, `h1`,
    /// `a2h` and `identity`.
    pub fn special_element(&self, name: &str) -> Result<HElement> {
        match name {
            "a" => Ok(self.gen_a()),
            "b" => Ok(self.gen_b()),
            "h" => Ok(self.h_element()),
            "h1" => self.h1_element(),
            "a2h" => Ok(self.a2h_element()),
            "identity" | "1" => Ok(self.identity()),
            other => {
                if let Some(num) = other.strip_prefix('c') {
                    let i: u32 = num.parse().map_err(|_| {
                        Error::InvalidConfig(format!("unknown element name {other:?}"))
                    })?;
                    self.gen_c(i)
                } else {
                    Err(Error::InvalidConfig(format!("unknown element name {other:?}")))
                }
            }
        }
    }

    /// Product of a slice of elements, left to right.
    pub fn product(&self, factors: &[HElement]) -> Result<HElement> {
        let mut acc = self.identity();
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// The subgroup `M` consumed by the fixed-point-set case analysis:
    ///
    /// * `m ≡ 1 (mod 4)`: `M = <a^2 b> x <c_1 c_2> x … x <c_{m-4} c_{m-3}>`
    /// * `m ≡ 3 (mod 4)`: `M = <b> x <c_1 c_2> x … x <c_{m-4} c_{m-3}>`
    /// * `m ≡ 2 (mod 4)`: `M = <c_1> x <c_3> x … x <c_{m-5}> x <a c_{m-3}>`
    ///
    /// No `M` is defined for `m ≡ 0 (mod 4)`; that case works with conjugated
    /// fixed sets instead, so asking for it is an error.
    pub fn subgroup_m(&self) -> Result<Vec<HElement>> {
        let mut gens: Vec<HElement> = Vec::new();
        match self.m % 4 {
            1 => {
                let a2b = self.product(&[self.gen_a(), self.gen_a(), self.gen_b()])?;
                gens.push(a2b);
                for i in 1..=(self.m - 3) / 2 {
                    gens.push(self.gen_c(2 * i - 1)?.mul(&self.gen_c(2 * i)?)?);
                }
            }
            3 => {
                gens.push(self.gen_b());
                for i in 1..=(self.m - 3) / 2 {
                    gens.push(self.gen_c(2 * i - 1)?.mul(&self.gen_c(2 * i)?)?);
                }
            }
            2 => {
                let mut i = 1i64;
                while i <= self.m as i64 - 5 {
                    gens.push(self.gen_c(i as u32)?);
                    i += 2;
                }
                gens.push(self.gen_a().mul(&self.gen_c(self.c_rank())?)?);
            }
            _ => return Err(Error::NoSubgroupM(self.m)),
        }
        Ok(self.generated_subset(&gens))
    }

    /// Closure of a generating set inside `H`, in deterministic order.
    pub fn generated_subset(&self, gens: &[HElement]) -> Vec<HElement> {
        let mut seen = vec![false; self.group_order()];
        let mut out = vec![self.identity()];
        seen[0] = true;
        let mut frontier = 0usize;
        while frontier < out.len() {
            let cur = out[frontier];
            frontier += 1;
            for g in gens {
                let next = cur.mul(g).expect("same parameters");
                if !seen[next.index()] {
                    seen[next.index()] = true;
                    out.push(next);
                }
            }
        }
        out.sort_by_key(|e| e.index());
        out
    }
}

/// `ceil(v / 2)` with rounding toward positive infinity, for signed `v`.
fn ceil_div_2(v: i64) -> i64 {
    if v >= 0 {
        (v + 1) / 2
    } else {
        v / 2 // Rust divides toward zero, which is the ceiling for negatives.
    }
}

/// `floor(v / 2)` with rounding toward negative infinity, for signed `v`.
pub(crate) fn floor_div_2(v: i64) -> i64 {
    if v >= 0 {
        v / 2
    } else {
        (v - 1) / 2
    }
}

/// An element of `H` in canonical form `a^i b^j * (product of c's)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct HElement {
    m: u32,
    a: u8,
    b: u8,
    c: u32,
}

impl HElement {
    pub fn params(&self) -> HParams {
        HParams { m: self.m }
    }

    pub fn a_exp(&self) -> u8 {
        self.a
    }

    pub fn b_exp(&self) -> u8 {
        self.b
    }

    /// Exponent vector of the `c_i`, bit `i-1` for `c_i`.
    pub fn c_bits(&self) -> u32 {
        self.c
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    /// The frozen dense index of this element.
    pub fn index(&self) -> usize {
        self.a as usize + 4 * self.b as usize + 8 * self.c as usize
    }

    /// Group product. `b a = a^{-1} b` is forced by `(ab)^2 = 1`; the `c_i`
    /// are central, so their exponent vectors add over GF(2).
    pub fn mul(&self, other: &HElement) -> Result<HElement> {
        if self.m != other.m {
            return Err(Error::ParamMismatch(self.m, other.m));
        }
        let a = if self.b == 0 {
            (self.a + other.a) & 3
        } else {
            (self.a + 4 - other.a) & 3
        };
        Ok(HElement {
            m: self.m,
            a,
            b: (self.b + other.b) & 1,
            c: self.c ^ other.c,
        })
    }

    pub fn inv(&self) -> HElement {
        // (a^i b^j v)^{-1}: central part is its own inverse; for j = 1 the
        // element is an involution, for j = 0 invert the a-part.
        let a = if self.b == 0 { (4 - self.a) & 3 } else { self.a };
        HElement { m: self.m, a, b: self.b, c: self.c }
    }

    pub fn order(&self) -> u32 {
        if self.is_identity() {
            1
        } else if self.b == 0 && self.a % 2 == 1 {
            4
        } else {
            2
        }
    }

    /// Membership in `K = <a^2, b, c_1, …, c_{m-3}>`: even `a`-exponent.
    pub fn in_k(&self) -> bool {
        self.a.is_multiple_of(2)
    }

    /// Membership in the center `<a^2, c_1, …, c_{m-3}>`.
    pub fn is_central(&self) -> bool {
        self.a.is_multiple_of(2) && self.b == 0
    }

    /// Membership in `H_1 = <a, b, c_1, …, c_{m-4}>`: the `c_{m-3}` bit is
    /// clear, i.e. `index < 2^{m-1}` under the frozen layout.
    pub fn in_h1(&self) -> bool {
        self.c >> (self.m - 4) == 0
    }

    /// Membership in `K_1 = K ∩ H_1`.
    pub fn in_k1(&self) -> bool {
        self.in_k() && self.in_h1()
    }

    /// Membership in `U`, the index-2 parity subgroup of `<c_1, …, c_{m-3}>`:
    ///
    /// * odd `m`:  `sum_{j=1}^{(m-3)/2} k_{2j} ≡ 0 (mod 2)`
    /// * even `m`: `sum_{j=1}^{(m-4)/2} k_{2j} ≡ k_{m-3} (mod 2)`
    pub fn in_u(&self) -> bool {
        if self.a != 0 || self.b != 0 {
            return false;
        }
        let even_index_mask = even_c_mask(self.m);
        let lhs = (self.c & even_index_mask).count_ones() & 1;
        if self.m % 2 == 1 {
            lhs == 0
        } else {
            let k_top = (self.c >> (self.m - 4)) & 1;
            lhs == k_top
        }
    }
}

/// Bitmask selecting the even-indexed `c_{2j}` that enter the `U` condition.
fn even_c_mask(m: u32) -> u32 {
    let top_j = if m % 2 == 1 { (m - 3) / 2 } else { (m - 4) / 2 };
    let mut mask = 0u32;
    for j in 1..=top_j {
        mask |= 1 << (2 * j - 1); // bit index of c_{2j}
    }
    mask
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.a {
            0 => {}
            1 => parts.push("a".into()),
            k => parts.push(format!("a^{k}")),
        }
        if self.b == 1 {
            parts.push("b".into());
        }
        for i in 0..32 {
            if self.c >> i & 1 == 1 {
                parts.push(format!("c{}", i + 1));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HElement(m={}, {})", self.m, self)
    }
}
