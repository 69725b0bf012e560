//! Term orders: lex, graded reverse lex, and block (elimination) orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    Grevlex,
}

/// One block of a block order: the variables it ranks (in priority order)
/// and how it ranks them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub vars: Vec<usize>,
    pub base: BaseOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    Grevlex,
    /// Blocks are compared in sequence; the first block that tells the two
    /// monomials apart decides. Earlier blocks are eliminated.
    Block(Vec<Block>),
}

impl TermOrder {
    /// Two-block grevlex order eliminating `first` (listed first) against all
    /// remaining variables.
    pub fn elimination(nvars: usize, first: &[usize]) -> TermOrder {
        let rest: Vec<usize> = (0..nvars).filter(|v| !first.contains(v)).collect();
        TermOrder::Block(vec![
            Block {
                vars: first.to_vec(),
                base: BaseOrder::Grevlex,
            },
            Block {
                vars: rest,
                base: BaseOrder::Grevlex,
            },
        ])
    }

    /// Grevlex blocks in the given sequence.
    pub fn blocks(blocks: &[Vec<usize>]) -> TermOrder {
        TermOrder::Block(
            blocks
                .iter()
                .map(|vars| Block {
                    vars: vars.clone(),
                    base: BaseOrder::Grevlex,
                })
                .collect(),
        )
    }

    /// Checks that a block order partitions `0..nvars`.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let TermOrder::Block(blocks) = self {
            let mut seen = vec![false; nvars];
            for b in blocks {
                for &v in &b.vars {
                    if v >= nvars || seen[v] {
                        return Err(Error::InvalidOrder(format!(
                            "blocks do not partition {nvars} variables"
                        )));
                    }
                    seen[v] = true;
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::InvalidOrder(format!(
                    "blocks do not cover {nvars} variables"
                )));
            }
        }
        Ok(())
    }

    /// Number of variables a block order is defined on.
    pub fn arity(&self) -> Option<usize> {
        match self {
            TermOrder::Block(blocks) => Some(blocks.iter().map(|b| b.vars.len()).sum()),
            _ => None,
        }
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::ArityMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        if let Some(n) = self.arity() {
            if n != a.nvars() {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: a.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => x.cmp(y),
            TermOrder::Grevlex => grevlex(x.len(), |i| (x[i], y[i])),
            TermOrder::Block(blocks) => {
                for block in blocks {
                    let ord = match block.base {
                        BaseOrder::Lex => block
                            .vars
                            .iter()
                            .map(|&v| x[v])
                            .cmp(block.vars.iter().map(|&v| y[v])),
                        BaseOrder::Grevlex => {
                            grevlex(block.vars.len(), |i| (x[block.vars[i]], y[block.vars[i]]))
                        }
                    };
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// `a > b`.
    #[inline]
    pub fn greater(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }
}

#[inline]
fn grevlex(len: usize, at: impl Fn(usize) -> (u32, u32)) -> Ordering {
    let (dx, dy) = (0..len).fold((0u32, 0u32), |(sx, sy), i| {
        let (a, b) = at(i);
        (sx + a, sy + b)
    });
    if dx != dy {
        return dx.cmp(&dy);
    }
    for i in (0..len).rev() {
        let (a, b) = at(i);
        if a != b {
            // smaller exponent in the last differing variable wins
            return b.cmp(&a);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn grevlex_basics() {
        // x^2 vs xy
        assert_eq!(TermOrder::Grevlex.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        // xz vs y^2 in 3 vars: last variable z present in xz makes it smaller
        assert_eq!(TermOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(TermOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_reflexive() {
        let a = m(&[3, 1, 4]);
        assert_eq!(TermOrder::Lex.compare(&a, &a).unwrap(), Ordering::Equal);
    }

    #[test]
    fn block_eliminates_first_block() {
        // variables (x1, y1) with block [y1 | x1]: y1 beats x1^5
        let o = TermOrder::elimination(2, &[1]);
        assert_eq!(o.compare(&m(&[0, 1]), &m(&[5, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn arity_mismatch_is_reported() {
        assert!(TermOrder::Lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
        let o = TermOrder::elimination(3, &[0]);
        assert!(o.compare(&m(&[1, 0]), &m(&[0, 1])).is_err());
    }

    #[test]
    fn validate_partition() {
        assert!(TermOrder::elimination(3, &[2]).validate(3).is_ok());
        assert!(TermOrder::blocks(&[vec![0], vec![0, 1]]).validate(2).is_err());
        assert!(TermOrder::blocks(&[vec![0]]).validate(2).is_err());
    }

    fn orders() -> Vec<TermOrder> {
        vec![
            TermOrder::Lex,
            TermOrder::Grevlex,
            TermOrder::elimination(4, &[3, 1]),
            TermOrder::Block(vec![
                Block { vars: vec![2], base: BaseOrder::Lex },
                Block { vars: vec![0, 1, 3], base: BaseOrder::Lex },
            ]),
        ]
    }

    fn mono4() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn total_order_laws(a in mono4(), b in mono4(), c in mono4()) {
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab == Ordering::Greater && o.cmp(&b, &c) == Ordering::Greater {
                    prop_assert_eq!(o.cmp(&a, &c), Ordering::Greater);
                }
                // multiplicative
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                // well-order compatible: 1 is least
                prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
            }
        }

        #[test]
        fn elimination_property(a in mono4(), b in mono4()) {
            let o = TermOrder::elimination(4, &[3, 1]);
            let a_has = a.exponent(3) > 0 || a.exponent(1) > 0;
            let b_has = b.exponent(3) > 0 || b.exponent(1) > 0;
            if a_has && !b_has {
                prop_assert_eq!(o.cmp(&a, &b), Ordering::Greater);
            }
        }
    }
}
