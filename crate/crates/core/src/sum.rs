//! Neumaier compensated summation.
//!
//! Every reduction in the crate goes through these accumulators in a fixed
//! order, so results do not depend on how work was split across threads.

use crate::types::Complex;

#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Componentwise Neumaier accumulator for complex values.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn sub(&mut self, value: Complex) {
        self.re.add(-value.re);
        self.im.add(-value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex {
        Complex::new(self.re.value(), self.im.value())
    }
}

impl Extend<Complex> for ComplexSum {
    fn extend<I: IntoIterator<Item = Complex>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}

impl FromIterator<Complex> for ComplexSum {
    fn from_iter<I: IntoIterator<Item = Complex>>(iter: I) -> Self {
        let mut acc = ComplexSum::new();
        acc.extend(iter);
        acc
    }
}

/// Compensated sum of a sequence of complex values, in iteration order.
pub fn sum_complex<I: IntoIterator<Item = Complex>>(iter: I) -> Complex {
    iter.into_iter().collect::<ComplexSum>().value()
}

/// Compensated sum of a sequence of reals, in iteration order.
pub fn sum_real<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    let mut acc = NeumaierSum::new();
    for v in iter {
        acc.add(v);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_low_bits() {
        // naive left-to-right summation returns 0 here
        let xs = [1.0, 1e100, 1.0, -1e100];
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 0.0);
        assert_eq!(sum_real(xs), 2.0);
    }

    #[test]
    fn complex_components_are_independent() {
        let s = sum_complex([
            Complex::new(1.0, 1e100),
            Complex::new(1e100, 1.0),
            Complex::new(1.0, -1e100),
            Complex::new(-1e100, 0.0),
        ]);
        assert_eq!(s, Complex::new(2.0, 1.0));
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(sum_complex(std::iter::empty()), Complex::new(0.0, 0.0));
    }
}
