use crate::cx::{Complex, ONE, ZERO};
use crate::error::{Error, Result};

/// Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).
pub fn bell_polynomial(n: usize, k: usize, xs: &[Complex]) -> Result<Complex> {
    const F: &str = "bell_polynomial";
    if k > n || (k == 0 && n != 0) {
        return Err(Error::domain(F, format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    if n == 0 {
        return Ok(ONE);
    }
    if xs.len() < n - k + 1 {
        return Err(Error::domain(
            F,
            format!("need {} arguments, got {}", n - k + 1, xs.len()),
        ));
    }
    // table[i][j] = B_{i,j}
    let mut table = vec![vec![ZERO; k + 1]; n + 1];
    table[0][0] = ONE;
    let binom = binomials(n);
    for i in 1..=n {
        for j in 1..=k.min(i) {
            // entries with i - j > n - k never feed B_{n,k}
            if i - j > n - k {
                continue;
            }
            let mut s = ZERO;
            for m in 1..=(i - j + 1) {
                s += binom[i - 1][m - 1] * xs[m - 1] * table[i - m][j - 1];
            }
            table[i][j] = s;
        }
    }
    Ok(table[n][k])
}

fn binomials(n: usize) -> Vec<Vec<f64>> {
    let mut b = vec![vec![0.0; n + 1]; n + 1];
    for i in 0..=n {
        b[i][0] = 1.0;
        for j in 1..=i {
            b[i][j] = b[i - 1][j - 1] + if j < i { b[i - 1][j] } else { 0.0 };
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cx::c;

    #[test]
    fn edge_cases() {
        let xs: Vec<Complex> = (1..=6).map(|j| Complex::new(j as f64, 0.5)).collect();
        for n in 1..=6 {
            assert_eq!(bell_polynomial(n, 1, &xs).unwrap(), xs[n - 1]);
            let want = xs[0].powi(n as i32);
            assert!((bell_polynomial(n, n, &xs).unwrap() - want).norm() < 1e-10);
        }
        let v = bell_polynomial(3, 2, &[c(2.0), c(5.0)]).unwrap();
        assert_eq!(v, c(30.0));
        assert!(bell_polynomial(2, 3, &xs).is_err());
        assert!(bell_polynomial(2, 0, &xs).is_err());
        assert_eq!(bell_polynomial(0, 0, &[]).unwrap(), ONE);
    }
}
