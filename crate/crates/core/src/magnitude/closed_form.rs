use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RationalFunction};

/// Families whose magnitude has a known closed formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// A forest with the given numbers of vertices, edges and components.
    Forest {
        vertices: usize,
        edges: usize,
        components: usize,
    },
}

impl ClosedForm {
    pub fn evaluate(self) -> Result<RationalFunction> {
        let int = |k: usize| BigInt::from(k);
        match self {
            ClosedForm::Complete(n) if n >= 1 => {
                // n / (1 + (n-1) q)
                RationalFunction::new(
                    IntPoly::constant(int(n)),
                    IntPoly::new(vec![int(1), int(n - 1)]),
                )
            }
            ClosedForm::Cycle(n) if n >= 1 => {
                // n(q-1) / (q^floor((n+1)/2) + q^ceil((n+1)/2) - q - 1)
                let lo = (n + 1) / 2;
                let hi = n / 2 + 1;
                let den = IntPoly::q_pow(lo) + IntPoly::q_pow(hi) - IntPoly::from_i64s(&[1, 1]);
                RationalFunction::new(IntPoly::new(vec![-int(n), int(n)]), den)
            }
            ClosedForm::CompleteBipartite(m, n) if m >= 1 && n >= 1 => {
                // ((m+n) - (2mn-m-n) q) / ((1+q)(1 - (m-1)(n-1) q^2))
                let (bm, bn) = (int(m), int(n));
                let num = IntPoly::new(vec![&bm + &bn, &bm + &bn - 2 * &bm * &bn]);
                let den = IntPoly::from_i64s(&[1, 1])
                    * IntPoly::new(vec![int(1), int(0), -(int(m - 1) * int(n - 1))]);
                RationalFunction::new(num, den)
            }
            ClosedForm::Forest {
                vertices,
                edges,
                components,
            } if vertices == edges + components => {
                // k + e (1-q)/(1+q)
                let tail = RationalFunction::new(
                    IntPoly::new(vec![int(edges), -int(edges)]),
                    IntPoly::from_i64s(&[1, 1]),
                )?;
                Ok(RationalFunction::from_integer(int(components)) + tail)
            }
            other => Err(Error::InvalidParameter(format!(
                "no closed form for {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_i64s(n, d).unwrap()
    }

    #[test]
    fn instances() {
        assert_eq!(
            ClosedForm::CompleteBipartite(3, 3).evaluate().unwrap(),
            rf(&[6], &[1, 3, 2])
        );
        assert_eq!(ClosedForm::Cycle(3).evaluate().unwrap(), rf(&[3], &[1, 2]));
        assert_eq!(ClosedForm::Cycle(1).evaluate().unwrap(), rf(&[1], &[1]));
        assert_eq!(ClosedForm::Cycle(2).evaluate().unwrap(), rf(&[2], &[1, 1]));
        assert_eq!(
            ClosedForm::Complete(3).evaluate().unwrap(),
            rf(&[3], &[1, 2])
        );
        assert_eq!(
            ClosedForm::Forest {
                vertices: 3,
                edges: 2,
                components: 1
            }
            .evaluate()
            .unwrap(),
            rf(&[3, -1], &[1, 1])
        );
        assert_eq!(
            ClosedForm::CompleteBipartite(1, 1).evaluate().unwrap(),
            rf(&[2], &[1, 1])
        );
    }

    #[test]
    fn invalid() {
        assert!(ClosedForm::Complete(0).evaluate().is_err());
        assert!(ClosedForm::Cycle(0).evaluate().is_err());
        assert!(ClosedForm::CompleteBipartite(0, 3).evaluate().is_err());
        assert!(ClosedForm::Forest {
            vertices: 4,
            edges: 2,
            components: 1
        }
        .evaluate()
        .is_err());
    }
}
