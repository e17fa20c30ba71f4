use super::classical::hermite;
use super::partition::Partition;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::ExactPoly;
use num_traits::Num;

/// Determinant of a square matrix over `T[x]` by fraction-free Bareiss
/// elimination. Every intermediate division is exact in the polynomial ring.
pub fn bareiss_determinant<T: Clone + Num + std::ops::Neg<Output = T>>(mut m: Vec<Vec<Poly<T>>>) -> Poly<T> {
    let k = m.len();
    assert!(m.iter().all(|row| row.len() == k), "matrix must be square");
    if k == 0 {
        return Poly::one();
    }
    let mut sign_flip = false;
    let mut prev_pivot = Poly::one();
    for col in 0..k - 1 {
        if m[col][col].is_zero() {
            match (col + 1..k).find(|&r| !m[r][col].is_zero()) {
                Some(r) => {
                    m.swap(col, r);
                    sign_flip = !sign_flip;
                }
                None => return Poly::zero(),
            }
        }
        let pivot = m[col][col].clone();
        for i in col + 1..k {
            for j in col + 1..k {
                let num = &(&pivot * &m[i][j]) - &(&m[i][col] * &m[col][j]);
                m[i][j] = num.exact_div(&prev_pivot).expect("Bareiss step divides exactly");
            }
            m[i][col] = Poly::zero();
        }
        prev_pivot = pivot;
    }
    let det = m[k - 1][k - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Wronskian `det[ d^i/dx^i f_j ]`, rows indexed by derivative order.
pub fn wronskian<T: Clone + Num + std::ops::Neg<Output = T>>(polys: &[Poly<T>]) -> Poly<T> {
    assert!(!polys.is_empty(), "Wronskian of an empty sequence");
    let k = polys.len();
    let m = (0..k)
        .map(|i| polys.iter().map(|p| p.derivative(i)).collect())
        .collect();
    bareiss_determinant(m)
}

fn require_double(lambda: &Partition) -> Result<()> {
    if lambda.is_double() {
        Ok(())
    } else {
        Err(Error::NotDouble(lambda.to_string()))
    }
}

/// `η_λ = Wr[H_{λ_1}, H_{λ_2+1}, …, H_{λ_r+r-1}]`; the constant 1 for the
/// empty partition.
pub fn eta_hermite(lambda: &Partition) -> Result<ExactPoly> {
    require_double(lambda)?;
    if lambda.is_empty() {
        return Ok(Poly::one());
    }
    let entries: Vec<ExactPoly> = lambda
        .wronskian_degrees()
        .into_iter()
        .map(|d| hermite(d as usize))
        .collect();
    Ok(wronskian(&entries))
}

/// Exceptional Hermite polynomial `H^{(λ)}_n`, the Wronskian of the η entries
/// followed by `H_{n-|λ|+r}`. Not normalized.
pub fn exceptional_hermite(lambda: &Partition, n: u64) -> Result<ExactPoly> {
    require_double(lambda)?;
    let last = lambda.last_degree(n)?;
    let mut entries: Vec<ExactPoly> = lambda
        .wronskian_degrees()
        .into_iter()
        .map(|d| hermite(d as usize))
        .collect();
    entries.push(hermite(last as usize));
    Ok(wronskian(&entries))
}
