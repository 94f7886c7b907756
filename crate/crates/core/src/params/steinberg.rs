use alloc::vec::Vec;

use super::ParamError;

/// One summand `lambda^lambda_exp (x) sym^(size-1)(st)` of a Weil-Deligne
/// parameter: a symbolic character power times an SL(2) Jordan block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SteinbergBlock {
    pub lambda_exp: i64,
    pub size: u32,
}

/// A direct sum of twisted Jordan blocks. Only the exponent of the base
/// character is tracked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SteinbergParam {
    blocks: Vec<SteinbergBlock>,
}

impl SteinbergParam {
    pub fn new(mut blocks: Vec<SteinbergBlock>) -> Result<Self, ParamError> {
        if blocks.is_empty() {
            return Err(ParamError::Empty);
        }
        if blocks.iter().any(|b| b.size == 0) {
            return Err(ParamError::EmptyBlock);
        }
        blocks.sort();
        Ok(Self { blocks })
    }

    /// `lambda^exp (x) st`.
    pub fn special(lambda_exp: i64) -> Self {
        Self {
            blocks: alloc::vec![SteinbergBlock {
                lambda_exp,
                size: 2
            }],
        }
    }

    pub fn blocks(&self) -> &[SteinbergBlock] {
        &self.blocks
    }

    pub fn dimension(&self) -> u32 {
        self.blocks.iter().map(|b| b.size).sum()
    }

    /// Sorted multiset of block sizes, ignoring the twists.
    pub fn block_sizes(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.blocks.iter().map(|b| b.size).collect();
        s.sort_unstable();
        s
    }

    pub fn twist(&self, lambda_exp: i64) -> Self {
        Self {
            blocks: self
                .blocks
                .iter()
                .map(|b| SteinbergBlock {
                    lambda_exp: b.lambda_exp + lambda_exp,
                    size: b.size,
                })
                .collect(),
        }
    }

    /// Tensor product, splitting each pair of blocks by Clebsch-Gordan:
    /// `V_m (x) V_n = sum_{i < min(m,n)} V_{m+n-1-2i}`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for x in &self.blocks {
            for y in &other.blocks {
                for i in 0..x.size.min(y.size) {
                    out.push(SteinbergBlock {
                        lambda_exp: x.lambda_exp + y.lambda_exp,
                        size: x.size + y.size - 1 - 2 * i,
                    });
                }
            }
        }
        out.sort();
        Self { blocks: out }
    }

    fn single_special(&self) -> Result<i64, ParamError> {
        match self.blocks.as_slice() {
            [b] if b.size == 2 => Ok(b.lambda_exp),
            _ => Err(ParamError::UnsupportedShape),
        }
    }

    /// `sym^k (lambda (x) st) = lambda^k (x) sym^k(st)`.
    pub fn sym_power(&self, k: u32) -> Result<Self, ParamError> {
        let e = self.single_special()?;
        Ok(Self {
            blocks: alloc::vec![SteinbergBlock {
                lambda_exp: e * i64::from(k),
                size: k + 1,
            }],
        })
    }

    /// `Ad (lambda (x) st) = 1 (x) sym^2(st)`.
    pub fn adjoint(&self) -> Result<Self, ParamError> {
        self.single_special()?;
        Ok(Self {
            blocks: alloc::vec![SteinbergBlock {
                lambda_exp: 0,
                size: 3
            }],
        })
    }
}

pub fn steinberg_sym(k: u32, base: &SteinbergParam) -> Result<SteinbergParam, ParamError> {
    base.sym_power(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_five_is_one_block() {
        let s = steinberg_sym(5, &SteinbergParam::special(1)).unwrap();
        assert_eq!(
            s.blocks(),
            [SteinbergBlock {
                lambda_exp: 5,
                size: 6
            }]
        );
    }

    #[test]
    fn adjoint_times_special_splits() {
        let ad = SteinbergParam::special(7).adjoint().unwrap();
        let left = ad.tensor(&SteinbergParam::special(1)).twist(2);
        assert_eq!(
            left.blocks(),
            [
                SteinbergBlock {
                    lambda_exp: 3,
                    size: 2
                },
                SteinbergBlock {
                    lambda_exp: 3,
                    size: 4
                }
            ]
        );
        assert_eq!(left.dimension(), 6);
        assert_eq!(left.block_sizes(), [2, 4]);
    }

    #[test]
    fn sym_one_is_identity() {
        let base = SteinbergParam::special(3);
        assert_eq!(base.sym_power(1).unwrap(), base);
    }

    #[test]
    fn unsupported_shapes() {
        let two = SteinbergParam::new(alloc::vec![
            SteinbergBlock { lambda_exp: 0, size: 2 },
            SteinbergBlock { lambda_exp: 0, size: 1 },
        ])
        .unwrap();
        assert_eq!(two.sym_power(2), Err(ParamError::UnsupportedShape));
        assert!(SteinbergParam::new(alloc::vec![SteinbergBlock { lambda_exp: 0, size: 0 }]).is_err());
    }

    #[test]
    fn clebsch_gordan_dimensions() {
        for m in 1..6 {
            for n in 1..6 {
                let x = SteinbergParam::new(alloc::vec![SteinbergBlock { lambda_exp: 0, size: m }]).unwrap();
                let y = SteinbergParam::new(alloc::vec![SteinbergBlock { lambda_exp: 0, size: n }]).unwrap();
                assert_eq!(x.tensor(&y).dimension(), m * n);
            }
        }
    }
}
