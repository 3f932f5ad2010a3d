use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exponents `d` of the factors `1/(1 − t^d)` in the Betti series `Q_n(t)` of `BSpin(n)`.
///
/// `Q_{2m}   = ∏_{j=1}^{m−1} (1 − t^{4j})⁻¹ · (1 − t^{2m})⁻¹`,
/// `Q_{2m+1} = ∏_{j=1}^{m}   (1 − t^{4j})⁻¹`.
pub fn betti_weights(n: u32) -> Result<Vec<u32>> {
    if n < 3 {
        return Err(Error::OutsideTable(format!(
            "Betti series of BSpin({n}) is only defined for n >= 3"
        )));
    }
    let m = n / 2;
    let mut weights: Vec<u32> = if n.is_multiple_of(2) {
        (1..m).map(|j| 4 * j).collect()
    } else {
        (1..=m).map(|j| 4 * j).collect()
    };
    if n.is_multiple_of(2) {
        weights.push(2 * m);
    }
    Ok(weights)
}

/// Coefficients `q_{n,0..=max_degree}` of `Q_n(t)`, by truncated series multiplication.
pub fn betti_series(n: u32, max_degree: usize) -> Result<Vec<BigUint>> {
    let mut coeffs = vec![BigUint::zero(); max_degree + 1];
    coeffs[0] = BigUint::one();
    for w in betti_weights(n)? {
        let w = w as usize;
        // Multiplying by 1/(1 − t^w) is a strided running sum.
        for k in w..=max_degree {
            let prev = coeffs[k - w].clone();
            coeffs[k] += prev;
        }
    }
    Ok(coeffs)
}

/// Free rank of `H^k(BSpin(n); ℤ)`.
pub fn betti_bspin(n: u32, k: usize) -> Result<BigUint> {
    Ok(betti_series(n, k)?.swap_remove(k))
}
